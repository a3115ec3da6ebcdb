#include "hecke/cli.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hecke/equidist.hpp"
#include "hecke/oracle.hpp"
#include "hecke/quadforms.hpp"
#include "hecke/resolvent.hpp"
#include "hecke/trace.hpp"

namespace hecke::cli {

using nlohmann::json;

namespace {

const char* const version_line = "# hecke-rtf 1.0";

struct UsageError : std::runtime_error
{
    using std::runtime_error::runtime_error;
};

std::vector<i64> parse_list(const std::string& text)
{
    std::vector<i64> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            throw UsageError("empty entry in list '" + text + "'");
        std::size_t used = 0;
        long long v = std::stoll(item, &used);
        if (used != item.size())
            throw UsageError("not an integer: '" + item + "'");
        out.push_back(v);
    }
    return out;
}

json rational_json(const Rational& r) { return to_string(r); }

json value_json(const CyclotomicRational& v)
{
    if (v.is_rational())
        return rational_json(v.rational_value());
    json coeffs = json::array();
    for (auto const& c : v.coefficients())
        coeffs.push_back(to_string(c));
    return {{"zeta_order", v.order()}, {"coefficients", coeffs}};
}

std::string float17(double x)
{
    std::ostringstream os;
    os << std::setprecision(17) << x;
    return os.str();
}

struct Common
{
    int k = 2;
    i64 N = 1;
    std::string chi = "trivial";
    i64 q = 2;
};

TraceContext make_context(const Common& c)
{
    if (c.N < 1)
        throw UsageError("--N must be positive");
    return TraceContext(c.k, parse_character(c.N, c.chi));
}

int cmd_hurwitz(std::ostream& out, i64 D, i64 D_min, i64 D_max, bool direct)
{
    if (D > 0) {
        Rational h = direct ? hurwitz_H_direct(D) : hurwitz_H(D);
        out << D << "," << h.get_num().get_str() << "," << h.get_den().get_str() << "\n";
        return exit_ok;
    }
    if (D_max < 1)
        throw UsageError("hurwitz needs --D or --D-max");
    write_hurwitz_csv(out, D_min, D_max);
    return exit_ok;
}

int cmd_trace(std::ostream& out, const Common& c, i64 m, bool breakdown)
{
    auto ctx = make_context(c);
    auto r = trace_T(m, ctx);
    json j;
    if (breakdown) {
        j["A1"] = value_json(r.A1);
        j["A2"] = value_json(r.A2);
        j["A3"] = value_json(r.A3);
        j["A4"] = value_json(r.A4);
    }
    j["total"] = value_json(r.total);
    j["degenerate"] = r.degenerate;
    out << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_rtf_verify(std::ostream& out, const Common& c, unsigned M, const std::string& placement)
{
    auto ctx = make_context(c);
    A3Placement p;
    if (placement == "shifted")
        p = A3Placement::shifted;
    else if (placement == "unshifted")
        p = A3Placement::unshifted;
    else
        throw UsageError("--a3 must be shifted or unshifted");
    auto r = verify_rtf(c.q, ctx, M, p);
    json j;
    j["order"] = r.order;
    j["pass"] = r.pass;
    j["first_fail"] = r.first_fail < 0 ? json(nullptr) : json(r.first_fail);
    j["a3_convention"] = to_string(r.placement);
    json failures = json::array();
    for (unsigned i = 0; i <= M; ++i)
        if (!r.pass[i])
            failures.push_back({{"order", i},
                                {"lhs", value_json(r.lhs[i])},
                                {"rhs", value_json(r.rhs[i])},
                                {"difference", value_json(r.lhs[i] - r.rhs[i])}});
    j["failures"] = failures;
    out << j.dump(2) << "\n";
    return r.all_pass() ? exit_ok : exit_verification_failed;
}

int cmd_moments(std::ostream& out, const Common& c, unsigned nu_max)
{
    auto ctx = make_context(c);
    out << "nu,A_value_num,A_value_den,normalized_float\n";
    for (unsigned nu = 0; nu <= nu_max; ++nu) {
        auto v = moment_A(c.k, c.q, nu, ctx).value;
        if (!v.is_rational())
            throw UsageError("moments: A_{k,q}(nu) is not rational for this character");
        Rational a = v.rational_value();
        double scaled = to_double(a) / std::pow(static_cast<double>(c.q), 0.5 * nu);
        out << nu << "," << a.get_num().get_str() << "," << a.get_den().get_str() << "," << float17(scaled) << "\n";
    }
    return exit_ok;
}

int cmd_equidist(std::ostream& out, i64 q, const std::string& nus, unsigned grid, bool csv)
{
    std::vector<unsigned> list;
    for (i64 v : parse_list(nus)) {
        if (v < 0)
            throw UsageError("--nu entries must be nonnegative");
        list.push_back(static_cast<unsigned>(v));
    }
    auto rows = equidist_report(q, list, grid);
    if (csv) {
        out << "nu,alpha,beta,empirical,semicircle,difference\n";
        for (auto const& r : rows)
            for (auto const& cell : r.cells)
                out << r.nu << "," << to_string(cell.alpha) << "," << to_string(cell.beta) << "," << float17(cell.empirical)
                    << "," << float17(cell.semicircle) << "," << float17(cell.difference) << "\n";
        return exit_ok;
    }
    json j;
    j["q"] = q;
    j["grid"] = grid;
    j["rows"] = json::array();
    for (auto const& r : rows) {
        json cells = json::array();
        for (auto const& cell : r.cells)
            cells.push_back({{"alpha", rational_json(cell.alpha)},
                             {"beta", rational_json(cell.beta)},
                             {"empirical", cell.empirical},
                             {"semicircle", cell.semicircle},
                             {"difference", cell.difference}});
        j["rows"].push_back({{"nu", r.nu},
                             {"m", r.m},
                             {"total_mass", rational_json(r.total_mass)},
                             {"scaled_mass", r.scaled_mass},
                             {"normalized_mass", r.normalized_mass},
                             {"discrepancy", r.discrepancy},
                             {"cells", cells}});
    }
    out << j.dump(2) << "\n";
    return exit_ok;
}

int cmd_bounds(std::ostream& out, i64 q, unsigned n_max, unsigned nu_max, double eps)
{
    out << "n,nu,moment_x,moment_U,x_scaled,U_scaled,U_eps_scaled,U_running_max\n";
    for (auto const& s : bound_sweep(q, n_max, nu_max, eps))
        for (auto const& r : s.rows)
            out << r.n << "," << r.nu << "," << to_string(r.moment_x) << "," << to_string(r.moment_U) << ","
                << float17(r.x_scaled) << "," << float17(r.U_scaled) << "," << float17(r.U_eps_scaled) << ","
                << float17(r.U_running_max) << "\n";
    return exit_ok;
}

int cmd_mass_check(std::ostream& out, i64 m_max, bool strict)
{
    if (m_max < 1)
        throw UsageError("--m-max must be positive");
    i64 failures = 0, strict_mismatches = 0;
    for (i64 m = 1; m <= m_max; ++m) {
        auto [s, mins] = oracle::sigma_and_min_sum(m);
        Rational mass = build_measure(m).total_mass();
        Rational expected = strict ? Rational(2 * s - mins) : oracle::class_number_mass(m);
        if (mass != Rational(2 * s - mins))
            ++strict_mismatches;
        if (mass != expected) {
            ++failures;
            out << "mismatch m=" << m << " mass=" << to_string(mass) << " expected=" << to_string(expected) << "\n";
        }
    }
    out << "mass-check m<=" << m_max << " failures=" << failures;
    if (!strict)
        out << " strict_mismatches=" << strict_mismatches;
    out << "\n";
    return failures ? exit_verification_failed : exit_ok;
}

int cmd_selftest(std::ostream& out)
{
    int failed = 0;
    auto report = [&](const std::string& name, bool ok) {
        out << (ok ? "ok   " : "FAIL ") << name << "\n";
        failed += ok ? 0 : 1;
    };

    auto tau = oracle::delta_expansion(50);
    TraceContext c12(12, DirichletCharacter::trivial(1));
    bool ok = true;
    for (i64 m = 1; m <= 50; ++m)
        ok = ok && trace_T(m, c12).total == CyclotomicRational(Rational(tau[static_cast<std::size_t>(m)]));
    report("trace T(m) on S_12(1) equals tau(m), m <= 50", ok);

    ok = true;
    for (int k = 2; k <= 60; k += 2)
        ok = ok && trace_T(1, TraceContext(k, DirichletCharacter::trivial(1))).total ==
                       CyclotomicRational(Rational(oracle::dim_Sk_level1(k)));
    report("trace T(1) on S_k(1) equals dim S_k, k <= 60", ok);

    const oracle::Weierstrass e11{0, -1, 1, -10, -20};
    TraceContext c11(2, DirichletCharacter::trivial(11));
    ok = true;
    for (i64 p = 2; p <= 50; ++p)
        if (is_prime(p) && p != 11)
            ok = ok && trace_T(p, c11).total == CyclotomicRational(Rational(oracle::ec_ap(e11, p)));
    report("trace T(p) on S_2(11) equals a_p(11a), p <= 50", ok);

    ok = true;
    for (i64 m = 1; m <= 200; ++m)
        ok = ok && build_measure(m).total_mass() == oracle::class_number_mass(m);
    report("total mass of mu_m equals 2 sigma(m) - sum min(d, m/d) + [m square]/6, m <= 200", ok);

    report("resolvent identity k=12 N=1 q=2 to order 8", verify_rtf(2, c12, 8).all_pass());
    report("resolvent identity k=2 N=11 q=3 to order 6", verify_rtf(3, c11, 6).all_pass());
    return failed ? exit_verification_failed : exit_ok;
}

}  // namespace

DirichletCharacter parse_character(i64 N, const std::string& spec)
{
    if (spec == "trivial")
        return DirichletCharacter::trivial(N);
    const std::string prefix = "exps=";
    if (spec.rfind(prefix, 0) != 0)
        throw UsageError("character must be 'trivial' or 'exps=a,b,...', got '" + spec + "'");
    std::string body = spec.substr(prefix.size());
    std::vector<i64> exps = body.empty() ? std::vector<i64>{} : parse_list(body);
    return DirichletCharacter::from_exponents(N, exps);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Hurwitz class numbers, Eichler-Selberg traces and resolvent identities", "hecke"};
    app.require_subcommand(1);
    unsigned threads = 1;
    std::string output;
    app.add_option("--threads", threads, "worker threads for class number rows")->check(CLI::Range(1u, 1024u));
    app.add_option("--output", output, "write the report to this file instead of standard output");

    Common c;
    auto add_common = [&](CLI::App* sub, bool with_q) {
        sub->add_option("--k", c.k, "weight")->required();
        sub->add_option("--N", c.N, "level")->capture_default_str();
        sub->add_option("--chi", c.chi, "character: trivial or exps=a,b,...")->capture_default_str();
        if (with_q)
            sub->add_option("--q", c.q, "prime")->required();
    };

    i64 D = 0, D_min = 1, D_max = 0;
    bool direct = false;
    auto* hurwitz = app.add_subcommand("hurwitz", "H(D) for one D or a CSV table");
    hurwitz->add_option("--D", D, "single discriminant D > 0");
    hurwitz->add_option("--D-min", D_min, "table start")->capture_default_str();
    hurwitz->add_option("--D-max", D_max, "table end");
    hurwitz->add_flag("--direct", direct, "sum stabilizer weights over all reduced forms instead of the conductor sum");

    i64 m = 1;
    bool breakdown = false;
    auto* trace = app.add_subcommand("trace", "tr T(m) on S_k(N, chi) as JSON");
    add_common(trace, false);
    trace->add_option("--m", m, "Hecke index")->required();
    trace->add_flag("--breakdown", breakdown, "include A1..A4");

    unsigned order = 10;
    std::string placement = "shifted";
    auto* rtf = app.add_subcommand("rtf-verify", "coefficient-wise check of the resolvent identity");
    add_common(rtf, true);
    rtf->add_option("--order", order, "truncation order M")->capture_default_str();
    rtf->add_option("--a3", placement, "shifted or unshifted placement of F(z)")->capture_default_str();

    unsigned nu_max = 10;
    auto* moments = app.add_subcommand("moments", "A_{k,q}(nu) as CSV");
    add_common(moments, true);
    moments->add_option("--nu-max", nu_max, "largest nu")->capture_default_str();

    i64 eq_q = 2;
    std::string nus = "8,12,16,20";
    unsigned grid = 20;
    bool as_csv = false, as_json = false;
    auto* equidist = app.add_subcommand("equidist", "interval masses of mu_{q^nu} against the semicircle");
    equidist->add_option("--q", eq_q, "prime")->required();
    equidist->add_option("--nu", nus, "comma separated exponents")->capture_default_str();
    equidist->add_option("--grid", grid, "number of equal cells on [-1, 1]")->capture_default_str();
    auto* csv_flag = equidist->add_flag("--csv", as_csv, "CSV output");
    equidist->add_flag("--json", as_json, "JSON output (default)")->excludes(csv_flag);

    i64 b_q = 2;
    unsigned n_max = 10, b_nu_max = 16;
    double eps = 0.1;
    auto* bounds = app.add_subcommand("bounds", "monomial and Chebyshev moment sweep");
    bounds->add_option("--q", b_q, "prime")->required();
    bounds->add_option("--n-max", n_max, "largest even moment")->capture_default_str();
    bounds->add_option("--nu-max", b_nu_max, "largest nu")->capture_default_str();
    bounds->add_option("--eps", eps, "exponent slack")->capture_default_str();

    i64 m_max = 2000;
    auto* mass = app.add_subcommand("mass-check", "total mass of mu_m against 2 sigma(m) - sum min(d, m/d) + [m square]/6");
    mass->add_option("--m-max", m_max, "largest m")->capture_default_str();
    bool strict = false;
    mass->add_flag("--strict", strict, "compare without the 1/6 correction at perfect squares");

    auto* selftest = app.add_subcommand("selftest", "reconcile the pipeline with the reference oracles");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return exit_usage;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "cannot open " << output << "\n";
            return exit_usage;
        }
    }
    std::ostream& sink = output.empty() ? out : file;
    set_worker_threads(threads);

    try {
        if (*hurwitz)
            return cmd_hurwitz(sink, D, D_min, D_max, direct);
        if (*trace)
            return cmd_trace(sink, c, m, breakdown);
        if (*rtf)
            return cmd_rtf_verify(sink, c, order, placement);
        if (*moments)
            return cmd_moments(sink, c, nu_max);
        if (*equidist)
            return cmd_equidist(sink, eq_q, nus, grid, as_csv);
        if (*bounds)
            return cmd_bounds(sink, b_q, n_max, b_nu_max, eps);
        if (*mass)
            return cmd_mass_check(sink, m_max, strict);
        if (*selftest) {
            sink << version_line << "\n";
            return cmd_selftest(sink);
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_verification_failed;
    }
    return exit_usage;
}

}  // namespace hecke::cli
