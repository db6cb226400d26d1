#include <tqeuler/tqeuler.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

using namespace tqeuler;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_config = 2;

constexpr int hard_max_n = 12;
constexpr int hard_max_k = 10;
constexpr int hard_max_b = 8;

struct config_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check_bound(const std::string& name, int value, int lo, int hi)
{
    if (value < lo || value > hi)
        throw config_error(name + " must be in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " +
                           std::to_string(value));
}

// ---- compute ----

struct compute_options {
    std::string target;
    std::optional<int> n;
    std::optional<int> k;
    std::optional<int> to;
    bool normalized = false;
    std::string method = "default";
    std::string format = "text";
};

struct computed {
    int index;
    laurent_poly poly;
    int denominator_power; // value = poly / (1-q)^denominator_power
};

computed compute_one(const compute_options& o, int i)
{
    const std::string& t = o.target;
    if (t == "t") {
        if (o.method == "default" || o.method == "rec")
            return {i, t_rec(i), 0};
        if (o.method == "closed")
            return {i, t_closed(i), 0};
        if (o.method == "delta-prime")
            return {i, delta_prime_weight_sum(i), 0};
        if (o.method == "sop")
            return {i, sop_weight_sum(i), 0};
        if (o.method == "m-path")
            return {i, m_path_weight_sum(i), 0};
        throw config_error("unknown method for t: " + o.method);
    }
    if (t == "e") {
        laurent_poly hat;
        if (o.method == "default" || o.method == "dp")
            hat = euler_hat(i);
        else if (o.method == "main2")
            hat = e_main2(i);
        else if (o.method == "ks")
            hat = e_ks(i);
        else if (o.method == "jv-mu")
            hat = e_jv_mu(i);
        else
            throw config_error("unknown method for e: " + o.method);
        return {i, hat, o.normalized ? 0 : 2 * i};
    }
    if (o.method != "default")
        throw config_error("--method only applies to e and t");
    if (t == "d")
        return o.normalized ? computed{i, dn_hat(i), 0} : computed{i, dn_poly(i), 0};
    if (t == "e-even")
        return {i, o.normalized ? euler_hat(i).substitute_t(1, 0) : en_even_q(i), 0};
    if (t == "e-odd")
        return {i, o.normalized ? euler_hat(i).substitute_t(1, 1) : en_odd_q(i), 0};
    throw config_error("unknown target " + t);
}

std::string render_text(const computed& c)
{
    if (c.denominator_power == 0)
        return c.poly.to_string();
    return "(" + c.poly.to_string() + ") / (1 - q)^" + std::to_string(c.denominator_power);
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

int cmd_compute(const compute_options& o)
{
    const bool by_k = o.target == "t";
    if (by_k && o.n)
        throw config_error("target t takes --k");
    if (!by_k && o.k)
        throw config_error("target " + o.target + " takes --n");
    const std::optional<int> start = by_k ? o.k : o.n;
    if (!start)
        throw config_error(std::string("missing --") + (by_k ? "k" : "n"));
    const int hi_cap = by_k ? hard_max_k : hard_max_n;
    check_bound(by_k ? "--k" : "--n", *start, 0, hi_cap);
    const int last = o.to.value_or(*start);
    check_bound("--to", last, *start, hi_cap);

    std::vector<computed> rows;
    for (int i = *start; i <= last; ++i)
        rows.push_back(compute_one(o, i));

    const char* key = by_k ? "k" : "n";
    if (o.format == "text") {
        for (const auto& r : rows) {
            if (rows.size() > 1)
                std::cout << key << '=' << r.index << ": ";
            std::cout << render_text(r) << '\n';
        }
    } else if (o.format == "csv") {
        std::cout << key << ",poly,denominator\n";
        for (const auto& r : rows)
            std::cout << r.index << ',' << csv_quote(r.poly.to_string()) << ','
                      << csv_quote(r.denominator_power ? "(1 - q)^" + std::to_string(r.denominator_power) : "1")
                      << '\n';
    } else {
        ojson out = ojson::array();
        for (const auto& r : rows)
            out.push_back(ojson{{"target", o.target},
                                {key, r.index},
                                {"normalized", o.normalized},
                                {"one_minus_q_power", r.denominator_power},
                                {"text", r.poly.to_string()},
                                {"terms", poly_to_json(r.poly)}});
        std::cout << (rows.size() == 1 ? out[0] : out).dump(2) << '\n';
    }
    return 0;
}

// ---- verify ----

struct verify_options {
    verify_config cfg;
    std::vector<std::string> mutations;
    std::string format = "text";
    std::string output;
};

int cmd_verify(verify_options& o)
{
    auto& c = o.cfg;
    check_bound("--max-n", c.max_n, 0, hard_max_n);
    check_bound("--max-k", c.max_k, 0, hard_max_k);
    check_bound("--max-b", c.max_b, 0, hard_max_b);
    check_bound("--brute", c.brute, 0, 8);
    check_bound("--jobs", c.jobs, 1, 256);
    const auto registry = identity_registry();
    for (const auto& s : c.select) {
        bool known = false;
        for (const auto& id : registry)
            known = known || id.id == s;
        if (!known)
            throw config_error("unknown identity " + s + " (see `verify --list`)");
    }
    for (const auto& m : o.mutations) {
        try {
            c.mutations.push_back(parse_mutation(m));
        } catch (const error& e) {
            throw config_error(e.what());
        }
    }

    const verify_report report = run_verification(c, registry);
    const std::string body = o.format == "json" ? report_to_json(report).dump(2) + "\n" : report_to_text(report);
    if (o.output.empty()) {
        std::cout << body;
    } else {
        std::ofstream f(o.output);
        if (!f)
            throw config_error("cannot write " + o.output);
        f << body;
        std::cout << "pass " << report.count(case_status::pass) << ", fail " << report.count(case_status::fail)
                  << ", skipped " << report.count(case_status::skipped) << '\n';
    }
    return report.ok() ? 0 : exit_fail;
}

void list_identities()
{
    for (const auto& id : identity_registry())
        std::cout << id.id << "  " << id.ref << '\n';
}

// ---- bench ----

int cmd_bench(int max_n, int brute)
{
    check_bound("--max-n", max_n, 0, hard_max_n);
    struct method {
        const char* name;
        std::function<laurent_poly(int)> run;
    };
    const enumeration_caps caps = enumeration_caps::from_env();
    const std::vector<method> methods{
        {"dp", euler_hat},
        {"main2", e_main2},
        {"ks", e_ks},
        {"brute", [&](int n) { return dyck_weight_sum(n, detail::u_plus_one, detail::v_plus_one, caps); }},
    };
    std::cout << "n,method,ms,terms\n";
    for (int n = 0; n <= max_n; ++n) {
        for (const auto& m : methods) {
            if (std::string(m.name) == "brute" && n > brute) {
                std::cout << n << ',' << m.name << ",cutoff,cutoff\n";
                continue;
            }
            const auto start = std::chrono::steady_clock::now();
            const laurent_poly p = m.run(n);
            const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            std::cout << n << ',' << m.name << ',' << ms << ',' << p.size() << '\n';
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact (t,q)-Euler numbers, T_k polynomials and their cross-checks"};
    app.require_subcommand(1);

    compute_options co;
    auto* compute = app.add_subcommand("compute", "Print E_n, T_k, d_n, E_{2n}(q) or E_{2n+1}(q)");
    compute->add_option("target", co.target, "e | t | d | e-even | e-odd")
        ->required()
        ->check(CLI::IsMember({"e", "t", "d", "e-even", "e-odd"}));
    compute->add_option("--n", co.n, "index for e, d, e-even, e-odd");
    compute->add_option("--k", co.k, "index for t");
    compute->add_option("--to", co.to, "print a table up to this index");
    compute->add_flag("--normalized", co.normalized, "multiply E-type values through by (1-q)^{2n} (d: (1-q)^n)");
    compute->add_option("--method", co.method, "e: dp|main2|ks|jv-mu; t: rec|closed|delta-prime|sop|m-path");
    compute->add_option("--format", co.format)->check(CLI::IsMember({"text", "json", "csv"}));

    verify_options vo;
    bool list = false;
    auto* verify = app.add_subcommand("verify", "Run the identity matrix");
    verify->add_option("--max-n", vo.cfg.max_n, "largest n")->capture_default_str();
    verify->add_option("--max-k", vo.cfg.max_k, "largest k")->capture_default_str();
    verify->add_option("--max-b", vo.cfg.max_b, "largest |b|")->capture_default_str();
    verify->add_option("--brute", vo.cfg.brute, "largest size for exhaustive enumeration")->capture_default_str();
    verify->add_option("--select", vo.cfg.select, "run only these identity ids")->delimiter(',');
    verify->add_option("--jobs", vo.cfg.jobs, "worker threads")->capture_default_str();
    verify->add_option("--format", vo.format)->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--output", vo.output, "write the report to this file");
    verify->add_option("--inject-mutation", vo.mutations, "t-closed-sign | e-ks-exponent");
    verify->add_flag("--list", list, "list identity ids and exit");

    int bench_max_n = 8;
    int bench_brute = 6;
    auto* bench = app.add_subcommand("bench", "Time the DP against the closed forms and brute force");
    bench->add_option("--max-n", bench_max_n)->capture_default_str();
    bench->add_option("--brute", bench_brute)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_config;
    }

    try {
        if (*compute)
            return cmd_compute(co);
        if (*verify) {
            if (list) {
                list_identities();
                return 0;
            }
            return cmd_verify(vo);
        }
        if (*bench)
            return cmd_bench(bench_max_n, bench_brute);
    } catch (const config_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_config;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return e.code() == errc::out_of_range || e.code() == errc::cutoff_exceeded ? exit_config : exit_fail;
    }
    return exit_config;
}
