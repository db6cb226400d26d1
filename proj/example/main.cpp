// Small tour of the library: E_2 three ways, and T_3 at t = q^2.
#include <tqeuler/tqeuler.hpp>

#include <iostream>

int main()
{
    using namespace tqeuler;

    const laurent_poly moments = euler_hat(2);
    std::cout << "(1-q)^4 E_2(t,q) = " << moments.to_string() << '\n';
    std::cout << "ballot form agrees:    " << std::boolalpha << (e_main2(2) == moments) << '\n';
    std::cout << "single-sum form agrees: " << (e_ks(2) == moments) << '\n';

    const auto special = t_special({1, 2}, 3);
    std::cout << "T_3(q^2, q) = " << special.value.to_string() << "  [" << to_string(special.branch) << "]\n";
    std::cout << "E_4(q) = " << en_even_q(2).to_string() << '\n';
}
