#pragma once

#include <tqeuler/cfrac.hpp>
#include <tqeuler/combinat/alternating.hpp>
#include <tqeuler/combinat/configs.hpp>
#include <tqeuler/combinat/dyck.hpp>
#include <tqeuler/combinat/lattice_paths.hpp>
#include <tqeuler/combinat/partition.hpp>
#include <tqeuler/error.hpp>
#include <tqeuler/formulas/euler.hpp>
#include <tqeuler/formulas/lemmas.hpp>
#include <tqeuler/formulas/tk.hpp>
#include <tqeuler/formulas/zeng.hpp>
#include <tqeuler/laurent_poly.hpp>
#include <tqeuler/rational.hpp>

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <cmath>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <variant>
#include <vector>

namespace tqeuler {

using ojson = nlohmann::ordered_json;

enum class mutation { t_closed_sign, e_ks_exponent };

inline mutation parse_mutation(const std::string& name)
{
    if (name == "t-closed-sign")
        return mutation::t_closed_sign;
    if (name == "e-ks-exponent")
        return mutation::e_ks_exponent;
    throw error(errc::out_of_range, "unknown mutation " + name);
}

struct verify_config {
    int max_n = 8;
    int max_k = 6;
    int max_b = 4;
    int brute = 6; // largest size handed to the exhaustive enumerators
    int jobs = 1;
    std::vector<std::string> select; // empty = every identity
    std::vector<mutation> mutations;
    enumeration_caps caps = enumeration_caps::from_env();

    bool mutated(mutation m) const
    {
        return std::find(mutations.begin(), mutations.end(), m) != mutations.end();
    }
};

using cell_value = std::variant<laurent_poly, big_rational>;

inline std::string render(const cell_value& v)
{
    if (const auto* p = std::get_if<laurent_poly>(&v))
        return p->to_string();
    return to_string(std::get<big_rational>(v));
}

using value_rule = std::function<cell_value(const ojson& params, const verify_config&)>;
using grid_rule = std::function<std::vector<ojson>(const verify_config&)>;

struct identity {
    std::string id;
    std::string ref;
    grid_rule grid;
    value_rule lhs;
    value_rule rhs;
};

enum class case_status { pass, fail, skipped };

inline std::string to_string(case_status s)
{
    switch (s) {
    case case_status::pass:
        return "pass";
    case case_status::fail:
        return "fail";
    case case_status::skipped:
        return "skipped";
    }
    return "?";
}

struct case_result {
    std::string id;
    ojson params;
    case_status status = case_status::pass;
    double ms = 0;
    std::string detail;
};

struct verify_report {
    std::vector<case_result> cases;

    int count(case_status s) const
    {
        return static_cast<int>(std::count_if(cases.begin(), cases.end(), [s](const case_result& c) { return c.status == s; }));
    }
    bool ok() const { return count(case_status::fail) == 0; }
};

namespace detail {

inline std::vector<ojson> range_grid(const char* name, int lo, int hi)
{
    std::vector<ojson> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(ojson{{name, v}});
    return out;
}

inline int arg(const ojson& p, const char* name) { return p.at(name).get<int>(); }

// Cells past the brute-force bound are reported as skipped rather than run.
inline void brute_guard(int value, const verify_config& cfg)
{
    require_within(value, cfg.brute, "brute-force size");
}

inline laurent_poly t_closed_for(int k, const verify_config& cfg)
{
    return t_closed_impl(k, cfg.mutated(mutation::t_closed_sign));
}

inline laurent_poly e_ks_for(int n, const verify_config& cfg)
{
    return e_ks_impl(n, cfg.mutated(mutation::e_ks_exponent));
}

inline value_rule poly_rule(std::function<laurent_poly(const ojson&, const verify_config&)> f)
{
    return [f = std::move(f)](const ojson& p, const verify_config& c) -> cell_value { return f(p, c); };
}

inline value_rule by_n(std::function<laurent_poly(int)> f)
{
    return [f = std::move(f)](const ojson& p, const verify_config&) -> cell_value { return f(arg(p, "n")); };
}

inline value_rule by_k(std::function<laurent_poly(int)> f)
{
    return [f = std::move(f)](const ojson& p, const verify_config&) -> cell_value { return f(arg(p, "k")); };
}

inline grid_rule n_grid(int lo = 0, int cap = 1 << 20)
{
    return [lo, cap](const verify_config& c) { return range_grid("n", lo, std::min(c.max_n, cap)); };
}

inline grid_rule k_grid(int lo = 0, int cap = 1 << 20)
{
    return [lo, cap](const verify_config& c) { return range_grid("k", lo, std::min(c.max_k, cap)); };
}

inline laurent_poly u_plus_one(int h) { return laurent_poly(1) - q_pow(h); }
inline laurent_poly v_plus_one(int h) { return laurent_poly(1) - laurent_poly::monomial(1, 1, h); }

// An unrelated pair of sequences for the ballot reduction.
inline laurent_poly generic_a(int h) { return laurent_poly(2) + laurent_poly::monomial(1, 1, h); }
inline laurent_poly generic_b(int h) { return laurent_poly(1) + t_pow(1) - q_pow(h + 1); }

inline std::vector<std::pair<big_rational, big_rational>> zeng_points()
{
    return {{make_rational(1, 3), make_rational(1, 2)}, {make_rational(2), make_rational(1, 3)},
            {make_rational(-3, 2), make_rational(2, 5)}, {make_rational(5), make_rational(3)},
            {make_rational(7, 4), make_rational(-2, 3)}};
}

} // namespace detail

// Every cross-check, in report order.
inline std::vector<identity> identity_registry()
{
    using namespace detail;
    std::vector<identity> reg;

    // ---- E_n(t, q) ----
    reg.push_back({"euler-main2", "sum over ballot numbers of t^k q^{k(k+1)} T_k(1/t,1/q) vs S-fraction moments",
                   n_grid(), by_n(e_main2), by_n(euler_hat)});
    reg.push_back({"euler-ks", "Kim-Stanton single sum vs S-fraction moments", n_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) { return e_ks_for(arg(p, "n"), c); }),
                   by_n(euler_hat)});
    reg.push_back({"euler-jv-mu", "Al-Salam-Chihara moment double sum vs S-fraction moments", n_grid(),
                   by_n(e_jv_mu), by_n(euler_hat)});
    reg.push_back({"euler-dyck", "exhaustive weighted Dyck paths vs S-fraction moments", n_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       brute_guard(arg(p, "n"), c);
                       return dyck_weight_sum(arg(p, "n"), u_plus_one, v_plus_one, c.caps);
                   }),
                   by_n(euler_hat)});
    reg.push_back({"ballot-reduction", "Dyck sum = ballot-weighted MD*_k sums with shifted sequences", n_grid(0, 5),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       const int n = arg(p, "n");
                       brute_guard(n, c);
                       return dyck_weight_sum(n, generic_a, generic_b, c.caps);
                   }),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       const int n = arg(p, "n");
                       laurent_poly sum;
                       for (int k = 0; k <= n; ++k)
                           sum += laurent_poly(ballot(n, k)) *
                                  md_star_weight_sum(
                                      k, [](int h) { return generic_a(h) - laurent_poly(1); },
                                      [](int h) { return generic_b(h) - laurent_poly(1); }, c.caps);
                       return sum;
                   })});
    reg.push_back({"euler-md-star", "ballot-weighted MD*_k sums with U and V_t vs S-fraction moments", n_grid(0, 5),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       const int n = arg(p, "n");
                       brute_guard(n, c);
                       laurent_poly sum;
                       for (int k = 0; k <= n; ++k)
                           sum += laurent_poly(ballot(n, k)) * md_star_weight_sum(k, c.caps);
                       return sum;
                   }),
                   by_n(euler_hat)});

    // ---- specializations of E_n ----
    reg.push_back({"e-seq", "secant form vs E_n(1,q)", n_grid(), by_n(e_seq),
                   by_n([](int n) { return euler_hat(n).substitute_t(1, 0); })});
    reg.push_back({"e-tan", "tangent form with A_k(1/q) vs E_n(q,q)", n_grid(), by_n(e_tan),
                   by_n([](int n) { return euler_hat(n).substitute_t(1, 1); })});
    reg.push_back({"touchard-riordan", "Touchard-Riordan sum vs d_n moments", n_grid(), by_n(dn_tr), by_n(dn_hat)});
    reg.push_back({"jv-original-even", "original even formula vs secant form", n_grid(), by_n(e_jv_original_even),
                   by_n(e_seq)});
    reg.push_back({"jv-original-odd", "original odd formula vs (1-q) times tangent form", n_grid(),
                   by_n(e_jv_original_odd), by_n([](int n) { return (laurent_poly(1) - q_pow(1)) * e_tan(n); })});
    reg.push_back({"e-minus-q", "closed form vs E_n(-q,q)", n_grid(), by_n(e_minus_q),
                   by_n([](int n) { return euler_hat(n).substitute_t(-1, 1); })});
    reg.push_back({"e-minus-inv-q", "closed form vs E_n(-1/q,q)", n_grid(), by_n(e_minus_inv_q),
                   by_n([](int n) { return euler_hat(n).substitute_t(-1, -1); })});
    reg.push_back({"degenerate-inv-q", "E_n(1/q,q) is 1 at n=0 and 0 otherwise", n_grid(),
                   by_n([](int n) { return euler_hat(n).substitute_t(1, -1); }),
                   by_n([](int n) { return n == 0 ? laurent_poly(1) : laurent_poly(); })});
    reg.push_back({"degenerate-t-zero", "E_n(0,q) vs (1-q)^n d_n", n_grid(),
                   by_n([](int n) { return euler_hat(n).t_at_zero(); }),
                   by_n(dn_hat)});
    reg.push_back({"degenerate-t-minus-one", "E_n(-1,q) vs (1-q^2)^n d_n(q^2)", n_grid(),
                   by_n([](int n) { return euler_hat(n).substitute_t(-1, 0); }),
                   by_n([](int n) { return dn_hat(n).q_to_power(2); })});

    // ---- T_k models ----
    reg.push_back({"t-closed", "double-sum closed form vs recurrence", k_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) { return t_closed_for(arg(p, "k"), c); }),
                   by_k(t_rec)});
    reg.push_back({"t-delta-prime", "signed Delta'_k configuration sum vs recurrence", k_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       brute_guard(arg(p, "k"), c);
                       return delta_prime_weight_sum(arg(p, "k"), c.caps);
                   }),
                   by_k(t_rec)});
    reg.push_back({"t-sop", "self-conjugate overpartitions vs recurrence", k_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       brute_guard(arg(p, "k"), c);
                       return sop_weight_sum(arg(p, "k"), c.caps);
                   }),
                   by_k(t_rec)});
    reg.push_back({"t-m-path", "M-path weight sum vs recurrence", k_grid(),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       brute_guard(arg(p, "k"), c);
                       return m_path_weight_sum(arg(p, "k"), c.caps);
                   }),
                   by_k(t_rec)});
    reg.push_back({"uv2sum", "MD*_k sum vs t^k q^{k(k+1)} times inverted Delta'_k sum", k_grid(0, 5),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       brute_guard(arg(p, "k"), c);
                       return md_star_weight_sum(arg(p, "k"), c.caps);
                   }),
                   poly_rule([](const ojson& p, const verify_config& c) {
                       const int k = arg(p, "k");
                       return laurent_poly::monomial(1, k, k * (k + 1)) *
                              delta_prime_weight_sum(k, c.caps).invert_variables();
                   })});
    reg.push_back({"t-functional", "(1-tq) T_k(tq,q) = T_k + t^2 q^{2k+1} T_{k-1}", k_grid(1),
                   by_k([](int k) {
                       return (laurent_poly(1) - laurent_poly::monomial(1, 1, 1)) * t_rec(k).t_times_q();
                   }),
                   by_k([](int k) { return t_rec(k) + laurent_poly::monomial(1, 2, 2 * k + 1) * t_rec(k - 1); })});

    // ---- T_k at t = eps q^b ----
    auto special_grid = [](const verify_config& c) {
        std::vector<ojson> out;
        for (int eps : {1, -1})
            for (int b = -c.max_b; b <= c.max_b; ++b)
                for (int k = 0; k <= c.max_k; ++k)
                    out.push_back(ojson{{"eps", eps}, {"b", b}, {"k", k}});
        return out;
    };
    reg.push_back({"t-special", "four-quadrant closed forms vs substituted recurrence", special_grid,
                   poly_rule([](const ojson& p, const verify_config&) {
                       return t_special({arg(p, "eps"), arg(p, "b")}, arg(p, "k")).value;
                   }),
                   poly_rule([](const ojson& p, const verify_config&) {
                       return t_rec(arg(p, "k")).substitute_t(arg(p, "eps"), arg(p, "b"));
                   })});
    reg.push_back({"t-prodinger", "Prodinger's sum vs T_k(q^b,q)",
                   [](const verify_config& c) {
                       std::vector<ojson> out;
                       for (int b = 1; b <= c.max_b; ++b)
                           for (int k = 0; k <= c.max_k; ++k)
                               out.push_back(ojson{{"b", b}, {"k", k}});
                       return out;
                   },
                   poly_rule([](const ojson& p, const verify_config&) { return t_prodinger(arg(p, "b"), arg(p, "k")); }),
                   poly_rule([](const ojson& p, const verify_config&) {
                       return t_special({1, arg(p, "b")}, arg(p, "k")).value;
                   })});
    reg.push_back({"special-seq-kernel", "b=0 positive branch gives sum_{|i|<=k} (-q)^{i^2}", k_grid(1),
                   by_k([](int k) { return t_special({1, 0}, k).value; }), by_k(theta_sum)});
    reg.push_back({"special-tan-kernel", "b=1 positive branch gives A_k(q)", k_grid(1),
                   by_k([](int k) { return t_special({1, 1}, k).value; }),
                   by_k([](int k) { return div_exact(a_k_poly(k), laurent_poly(1) - q_pow(1)); })});
    reg.push_back({"special-tr-kernel", "b=0 negative branch gives T_k(-1,q) = 1", k_grid(1),
                   by_k([](int k) { return t_special({-1, 0}, k).value; }), by_k([](int) { return laurent_poly(1); })});
    reg.push_back({"t-minus-q", "(1+q^{2k+1})/(1+q) vs T_k(-q,q)", k_grid(), by_k(t_minus_q),
                   by_k([](int k) { return t_rec(k).substitute_t(-1, 1); })});
    reg.push_back({"t-minus-inv-q", "(-q)^{k^2} sum (-q)^{-i^2} vs T_k(-1/q,q)", k_grid(), by_k(t_minus_inv_q),
                   by_k([](int k) { return t_rec(k).substitute_t(-1, -1); })});

    auto bk_grid = [](const verify_config& c) {
        std::vector<ojson> out;
        for (int eps : {1, -1})
            for (int b = 1; b <= std::min(c.max_b, 5); ++b)
                for (int k = 1; k <= std::min(c.max_k, 5); ++k)
                    out.push_back(ojson{{"eps", eps}, {"b", b}, {"k", k}});
        return out;
    };
    reg.push_back({"alpha-recurrence", "alpha(b,k)(1-eps q^b) = alpha(b-1,k) + q^{2k+2b-1} alpha(b-1,k-1)", bk_grid,
                   poly_rule([](const ojson& p, const verify_config&) {
                       const int eps = arg(p, "eps"), b = arg(p, "b"), k = arg(p, "k");
                       return t_rec(k).substitute_t(eps, b) * (laurent_poly(1) - laurent_poly::monomial(eps, 0, b));
                   }),
                   poly_rule([](const ojson& p, const verify_config&) {
                       const int eps = arg(p, "eps"), b = arg(p, "b"), k = arg(p, "k");
                       return t_rec(k).substitute_t(eps, b - 1) +
                              q_pow(2 * k + 2 * b - 1) * t_rec(k - 1).substitute_t(eps, b - 1);
                   })});
    reg.push_back({"beta-recurrence", "beta(b,k) = (1-eps q^{1-b}) beta(b-1,k) - q^{2k-2b+1} beta(b,k-1)", bk_grid,
                   poly_rule([](const ojson& p, const verify_config&) {
                       return t_rec(arg(p, "k")).substitute_t(arg(p, "eps"), -arg(p, "b"));
                   }),
                   poly_rule([](const ojson& p, const verify_config&) {
                       const int eps = arg(p, "eps"), b = arg(p, "b"), k = arg(p, "k");
                       return (laurent_poly(1) - laurent_poly::monomial(eps, 0, 1 - b)) *
                                  t_rec(k).substitute_t(eps, -(b - 1)) -
                              q_pow(2 * k - 2 * b + 1) * t_rec(k - 1).substitute_t(eps, -b);
                   })});

    // ---- lemmas ----
    reg.push_back({"dist-box", "distinct-part statistic over B(m,n) vs closed form",
                   [](const verify_config& c) {
                       std::vector<ojson> out;
                       for (int m = 0; m <= c.brute; ++m)
                           for (int n = 0; n <= c.brute; ++n)
                               out.push_back(ojson{{"m", m}, {"n", n}});
                       return out;
                   },
                   poly_rule([](const ojson& p, const verify_config& c) {
                       return dist_box_polynomial(arg(p, "m"), arg(p, "n"), c.caps);
                   }),
                   poly_rule([](const ojson& p, const verify_config&) { return dist_box_closed(arg(p, "m"), arg(p, "n")); })});
    reg.push_back({"box-gauss", "partitions in B(m,n) by size vs [m+n, m]",
                   [](const verify_config& c) {
                       std::vector<ojson> out;
                       for (int m = 0; m <= c.brute; ++m)
                           for (int n = 0; n <= c.brute; ++n)
                               out.push_back(ojson{{"m", m}, {"n", n}});
                       return out;
                   },
                   poly_rule([](const ojson& p, const verify_config&) { return box_size_polynomial(arg(p, "m"), arg(p, "n")); }),
                   poly_rule([](const ojson& p, const verify_config&) {
                       return gauss_binom(arg(p, "m") + arg(p, "n"), arg(p, "m"));
                   })});

    // b, k <= max_b; the (0,n)'/(m,0)' corners that are a single empty path are split off.
    auto path_grid = [](bool prime, bool to_y_axis) {
        return [prime, to_y_axis](const verify_config& c) {
            std::vector<ojson> out;
            const int top = std::min(c.max_b, c.brute);
            for (int eps : {1, -1})
                for (int b = 0; b <= top; ++b)
                    for (int k = 0; k <= top; ++k) {
                        if (to_y_axis) {
                            for (int n = 1; n <= k; ++n) {
                                if (prime && b == 0 && n == k)
                                    continue;
                                out.push_back(ojson{{"eps", eps}, {"b", b}, {"k", k}, {"m", 0}, {"n", n}});
                            }
                        } else {
                            for (int m = prime ? 1 : 0; m <= b; ++m) {
                                if (!prime && k == 0)
                                    continue;
                                if (prime && k == 0 && m == b)
                                    continue;
                                out.push_back(ojson{{"eps", eps}, {"b", b}, {"k", k}, {"m", m}, {"n", 0}});
                            }
                        }
                    }
            return out;
        };
    };
    auto l_sum = [](const ojson& p, const verify_config& c) {
        return l_path_weight_sum(arg(p, "b"), arg(p, "k"), arg(p, "m"), arg(p, "n"), arg(p, "eps"), c.caps);
    };
    auto lprime_sum = [](const ojson& p, const verify_config& c) {
        return lprime_path_weight_sum(arg(p, "b"), arg(p, "k"), arg(p, "m"), arg(p, "n"), arg(p, "eps"), c.caps);
    };
    reg.push_back({"l-path-axis-y", "L-paths to (0,n), cleared of (eps q;q)_b", path_grid(false, true),
                   poly_rule(l_sum), poly_rule([](const ojson& p, const verify_config&) {
                       return l_lemma_axis_y(arg(p, "b"), arg(p, "k"), arg(p, "n"));
                   })});
    reg.push_back({"l-path-axis-x", "L-paths to (m,0), cleared of (eps q^{m+1};q)_{b-m}", path_grid(false, false),
                   poly_rule(l_sum), poly_rule([](const ojson& p, const verify_config&) {
                       return l_lemma_axis_x(arg(p, "b"), arg(p, "k"), arg(p, "m"));
                   })});
    reg.push_back({"lprime-path-axis-y", "L'-paths to (0,n)", path_grid(true, true), poly_rule(lprime_sum),
                   poly_rule([](const ojson& p, const verify_config&) {
                       return lprime_lemma_axis_y(arg(p, "b"), arg(p, "k"), arg(p, "n"), arg(p, "eps"));
                   })});
    reg.push_back({"lprime-path-axis-x", "L'-paths to (m,0)", path_grid(true, false), poly_rule(lprime_sum),
                   poly_rule([](const ojson& p, const verify_config&) {
                       return lprime_lemma_axis_x(arg(p, "b"), arg(p, "k"), arg(p, "m"), arg(p, "eps"));
                   })});
    reg.push_back({"lprime-empty-path", "L' sum from a point on an axis to itself is 1",
                   [](const verify_config& c) {
                       std::vector<ojson> out;
                       for (int eps : {1, -1})
                           for (int v = 1; v <= std::min(c.max_b, c.brute); ++v) {
                               out.push_back(ojson{{"eps", eps}, {"b", 0}, {"k", v}, {"m", 0}, {"n", v}});
                               out.push_back(ojson{{"eps", eps}, {"b", v}, {"k", 0}, {"m", v}, {"n", 0}});
                           }
                       return out;
                   },
                   poly_rule(lprime_sum), poly_rule([](const ojson&, const verify_config&) { return laurent_poly(1); })});

    // ---- classical q-Euler numbers ----
    reg.push_back({"alternating-even", "13-2 distribution on up-down permutations of 2n vs E_{2n}(q)",
                   n_grid(0, 4), by_n([](int n) { return alt_statistic_polynomial(2 * n); }), by_n(en_even_q)});
    reg.push_back({"alternating-odd", "13-2 distribution on up-down permutations of 2n+1 vs E_{2n+1}(q)",
                   n_grid(0, 4), by_n([](int n) { return alt_statistic_polynomial(2 * n + 1); }), by_n(en_odd_q)});

    // ---- numeric ----
    reg.push_back({"zeng", "Zeng's double sum vs E_n at rational points",
                   [](const verify_config& c) {
                       std::vector<ojson> out;
                       for (int n = 0; n <= std::min(c.max_n, 4); ++n)
                           for (const auto& [t0, q0] : zeng_points())
                               out.push_back(ojson{{"n", n}, {"t", to_string(t0)}, {"q", to_string(q0)}});
                       return out;
                   },
                   [](const ojson& p, const verify_config&) -> cell_value {
                       return e_zeng_numeric(arg(p, "n"), big_rational(p.at("t").get<std::string>()),
                                             big_rational(p.at("q").get<std::string>()));
                   },
                   [](const ojson& p, const verify_config&) -> cell_value {
                       const int n = arg(p, "n");
                       const big_rational t0(p.at("t").get<std::string>());
                       const big_rational q0(p.at("q").get<std::string>());
                       return rational_eval(euler_hat(n), t0, q0) / rational_pow(1 - q0, 2 * n);
                   }});
    return reg;
}

inline bool selected(const identity& id, const verify_config& cfg)
{
    if (cfg.select.empty())
        return true;
    return std::find(cfg.select.begin(), cfg.select.end(), id.id) != cfg.select.end();
}

inline case_result run_case(const identity& id, const ojson& params, const verify_config& cfg)
{
    case_result r{id.id, params, case_status::pass, 0, {}};
    const auto start = std::chrono::steady_clock::now();
    try {
        const cell_value lhs = id.lhs(params, cfg);
        const cell_value rhs = id.rhs(params, cfg);
        if (!(lhs == rhs)) {
            r.status = case_status::fail;
            r.detail = "lhs: " + render(lhs) + " | rhs: " + render(rhs);
        }
    } catch (const error& e) {
        if (e.code() == errc::cutoff_exceeded) {
            r.status = case_status::skipped;
        } else {
            r.status = case_status::fail;
        }
        r.detail = e.what();
    }
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    r.ms = std::round(elapsed * 1000.0) / 1000.0;
    return r;
}

inline verify_report run_verification(const verify_config& cfg,
                                      const std::vector<identity>& registry = identity_registry())
{
    struct job {
        const identity* id;
        ojson params;
    };
    std::vector<job> jobs;
    for (const auto& id : registry)
        if (selected(id, cfg))
            for (auto& p : id.grid(cfg))
                jobs.push_back({&id, std::move(p)});

    verify_report report;
    report.cases.resize(jobs.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < jobs.size(); i = next++)
            report.cases[i] = run_case(*jobs[i].id, jobs[i].params, cfg);
    };
    const int workers = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(jobs.size())));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w)
            pool.emplace_back(worker);
        for (auto& th : pool)
            th.join();
    }
    return report;
}

inline ojson report_to_json(const verify_report& report)
{
    ojson cases = ojson::array();
    for (const auto& c : report.cases) {
        cases.push_back(ojson{{"id", c.id},
                              {"params", c.params},
                              {"status", to_string(c.status)},
                              {"ms", c.ms},
                              {"detail", c.detail.empty() ? ojson(nullptr) : ojson(c.detail)}});
    }
    return ojson{{"version", 1},
                 {"cases", cases},
                 {"summary",
                  {{"pass", report.count(case_status::pass)},
                   {"fail", report.count(case_status::fail)},
                   {"skipped", report.count(case_status::skipped)}}}};
}

inline std::string report_to_text(const verify_report& report)
{
    std::ostringstream out;
    for (const auto& c : report.cases) {
        std::string status = to_string(c.status);
        std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
        out << status << ' ' << c.id << ' ' << c.params.dump();
        if (!c.detail.empty())
            out << "  " << c.detail;
        out << '\n';
    }
    out << "pass " << report.count(case_status::pass) << ", fail " << report.count(case_status::fail) << ", skipped "
        << report.count(case_status::skipped) << '\n';
    return out.str();
}

} // namespace tqeuler
