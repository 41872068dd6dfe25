// Command-line front end: expression evaluation, the quantization maps, the
// numeric matrix oracle, and whole-theorem check sweeps.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <complex>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "weyl/calculus.hpp"
#include "weyl/format.hpp"
#include "weyl/oracle.hpp"
#include "weyl/parse.hpp"
#include "weyl/quantize.hpp"
#include "weyl/symmetrize.hpp"

using namespace weyl;
using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

namespace {

struct Options {
    FormatMode mode = FormatMode::Text;
    bool verbose = false;
    Clock::time_point start = Clock::now();
};

long elapsed_ms(const Options& opt) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 opt.start)
        .count();
}

void emit_report(const Options& opt, const std::string& command,
                 const std::string& status, Json payload) {
    Json doc;
    doc["command"] = command;
    doc["status"] = status;
    doc["payload"] = std::move(payload);
    doc["ms"] = elapsed_ms(opt);
    std::cout << doc.dump() << "\n";
}

// Expression commands print the value in text mode and a report document in
// JSON mode.
int emit_poly(const Options& opt, const std::string& command,
              const OperatorPoly& value) {
    if (opt.mode == FormatMode::Text) {
        std::cout << format(value, FormatMode::Text) << "\n";
    } else {
        emit_report(opt, command, "pass",
                    Json::parse(format(value, FormatMode::Json)));
    }
    return 0;
}

int emit_classical(const Options& opt, const std::string& command,
                   const ClassicalPoly& value) {
    if (opt.mode == FormatMode::Text) {
        std::cout << format(value, FormatMode::Text) << "\n";
    } else {
        emit_report(opt, command, "pass",
                    Json::parse(format(value, FormatMode::Json)));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// Check sweeps. Each runner records one row per tested parameter tuple.

struct CheckRun {
    std::string name;
    std::string params;
    std::vector<std::pair<std::string, bool>> rows;

    void row(const std::string& label, bool ok) { rows.emplace_back(label, ok); }
    long failed() const {
        long n = 0;
        for (const auto& [label, ok] : rows)
            if (!ok) ++n;
        return n;
    }
};

int emit_check(const Options& opt, const CheckRun& run) {
    long bad = run.failed();
    std::string status = bad == 0 ? "pass" : "fail";
    if (opt.mode == FormatMode::Text) {
        if (opt.verbose)
            for (const auto& [label, ok] : run.rows)
                std::cout << "  " << label << ": " << (ok ? "ok" : "FAIL") << "\n";
        std::cout << "check " << run.name << ": " << (run.rows.size() - bad)
                  << "/" << run.rows.size() << " cases passed (" << run.params
                  << ")";
        if (bad != 0) {
            for (const auto& [label, ok] : run.rows)
                if (!ok) {
                    std::cout << "; first failure: " << label;
                    break;
                }
        }
        std::cout << "\n";
    } else {
        Json payload;
        payload["name"] = run.name;
        payload["cases"] = run.rows.size();
        payload["failed"] = bad;
        payload["params"] = run.params;
        if (opt.verbose) {
            Json rows = Json::array();
            for (const auto& [label, ok] : run.rows)
                rows.push_back(Json{{"case", label}, {"ok", ok}});
            payload["rows"] = std::move(rows);
        }
        emit_report(opt, "check " + run.name, status, std::move(payload));
    }
    return bad == 0 ? 0 : 1;
}

std::string label_nm(long n, long m) {
    return "n=" + std::to_string(n) + " m=" + std::to_string(m);
}

Rational check_rational(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    long v = num(rng);
    if (v == 0) v = 1;
    return make_rational(v, den(rng));
}

OperatorPoly random_span_monomial(std::mt19937& rng, long max_deg) {
    std::uniform_int_distribution<long> deg(0, max_deg);
    long n = deg(rng);
    std::uniform_int_distribution<long> rest(0, max_deg - n);
    long m = rest(rng);
    return weyl_closed_form(n, m).scaled(check_rational(rng));
}

CheckRun check_theorem5(long max_n, long max_m) {
    CheckRun run{"theorem5",
                 "max-n=" + std::to_string(max_n) + ", max-m=" + std::to_string(max_m),
                 {}};
    for (long n = 0; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            OperatorPoly s = symmetrize(OperatorPoly::monomial(1, n, m));
            bool ok = s == weyl_order(n, m) && s == weyl_closed_form(n, m);
            run.row(label_nm(n, m), ok);
        }
    return run;
}

CheckRun check_theorem4(long max_n, long max_m, long rho_deg) {
    CheckRun run{"theorem4",
                 "max-n=" + std::to_string(max_n) + ", max-m=" +
                     std::to_string(max_m) + ", rho-degree=" +
                     std::to_string(rho_deg),
                 {}};
    for (long n = 0; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            OperatorPoly hamiltonian = weyl_closed_form(n, m);
            for (long i = 0; i <= rho_deg; ++i)
                for (long j = 0; i + j <= rho_deg; ++j) {
                    auto rep =
                        theorem4_check(hamiltonian, OperatorPoly::monomial(1, i, j));
                    run.row(label_nm(n, m) + " rho=q^" + std::to_string(i) +
                                " p^" + std::to_string(j),
                            rep.holds);
                }
            auto atomic = theorem4_check(hamiltonian, OperatorPoly::state_atom());
            run.row(label_nm(n, m) + " rho=atomic", atomic.holds);
        }
    return run;
}

CheckRun check_lemma51(long max_n, long max_m) {
    CheckRun run{"lemma51",
                 "max-n=" + std::to_string(max_n) + ", max-m=" + std::to_string(max_m),
                 {}};
    for (long n = 0; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            Word w;
            for (long i = 0; i < m; ++i) w.letters.push_back(Generator::p());
            for (long i = 0; i < n; ++i) w.letters.push_back(Generator::q());
            bool ok = pq_normal_expand(m, n) == normalize(Term(1, 0, w));
            run.row(label_nm(n, m), ok);
        }
    return run;
}

CheckRun check_lemma52(long max_n, long max_m) {
    CheckRun run{"lemma52",
                 "max-n=" + std::to_string(max_n) + ", max-m=" + std::to_string(max_m),
                 {}};
    for (long n = 0; n <= max_n; ++n)
        for (long m = 0; m <= max_m; ++m) {
            run.row("i1 " + label_nm(n, m),
                    check_identity("L52-i1", {{"n", n}, {"m", m}}).holds);
            run.row("i2 " + label_nm(n, m),
                    check_identity("L52-i2", {{"n", n}, {"m", m}}).holds);
            for (long i = 0; i <= n; ++i)
                run.row("i3 " + label_nm(n, m) + " i=" + std::to_string(i),
                        check_identity("L52-i3", {{"n", n}, {"m", m}, {"i", i}})
                            .holds);
            for (long j = 0; j <= n; ++j)
                run.row("i4 " + label_nm(n, m) + " j=" + std::to_string(j),
                        check_identity("L52-i4", {{"n", n}, {"m", m}, {"j", j}})
                            .holds);
        }
    return run;
}

CheckRun check_identities(long max_n) {
    CheckRun run{"identities", "max-n=" + std::to_string(max_n), {}};
    for (long n = 0; n <= max_n; ++n) {
        for (long k = 0; k <= n; ++k)
            run.row("id1 n=" + std::to_string(n) + " k=" + std::to_string(k),
                    check_identity("id1", {{"n", n}, {"k", k}}).holds);
        for (long j = 0; j <= n; ++j)
            run.row("id2 n=" + std::to_string(n) + " j=" + std::to_string(j),
                    check_identity("id2", {{"n", n}, {"j", j}}).holds);
    }
    return run;
}

CheckRun check_prop1(long max_n, long max_m) {
    CheckRun run{"prop1",
                 "max-n=" + std::to_string(max_n) + ", max-m=" + std::to_string(max_m),
                 {}};
    for (long a = 0; a <= max_n; ++a)
        for (long b = 0; b <= max_m; ++b)
            for (long c = 0; c <= max_n; ++c)
                for (long d = 0; d <= max_m; ++d) {
                    OperatorPoly left =
                        sym_product(OperatorPoly::monomial(1, a, 0),
                                    OperatorPoly::monomial(1, 0, b));
                    OperatorPoly right =
                        sym_product(OperatorPoly::monomial(1, c, 0),
                                    OperatorPoly::monomial(1, 0, d));
                    bool commutes =
                        sym_product(left, right) == sym_product(right, left);
                    bool composes = sym_product(left, right) ==
                                    weyl_closed_form(a + c, b + d);
                    run.row("a=" + std::to_string(a) + " b=" + std::to_string(b) +
                                " c=" + std::to_string(c) +
                                " d=" + std::to_string(d),
                            commutes && composes);
                }
    return run;
}

CheckRun check_prop2(long max_n, long max_jk, long trials, unsigned seed) {
    CheckRun run{"prop2",
                 "max-n=" + std::to_string(max_n) + ", max-jk=" +
                     std::to_string(max_jk) + ", trials=" +
                     std::to_string(trials) + ", seed=" + std::to_string(seed),
                 {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> deg(0, max_n);
    for (long t = 0; t < trials; ++t) {
        long n = deg(rng);
        OperatorPoly f;
        std::vector<Rational> cs;
        for (long j = 0; j <= n; ++j) {
            cs.push_back(check_rational(rng));
            f += OperatorPoly::monomial(cs.back(), j, 0);
        }
        OperatorPoly p = OperatorPoly::p();
        OperatorPoly lhs =
            (multiply(f, p) + multiply(p, f)).scaled(make_rational(1, 2));
        OperatorPoly rhs;
        for (long j = 0; j <= n; ++j)
            rhs += sym_product(OperatorPoly::monomial(1, j, 0), p).scaled(cs[j]);
        run.row("(a) trial " + std::to_string(t) + " n=" + std::to_string(n),
                lhs == rhs);
    }
    for (long j = 0; j <= max_jk; ++j)
        for (long k = 0; k <= max_jk; ++k) {
            OperatorPoly s = weyl_closed_form(j, k);
            OperatorPoly dq_want = j == 0 ? OperatorPoly::zero()
                                          : weyl_closed_form(j - 1, k).scaled(j);
            OperatorPoly dp_want = k == 0 ? OperatorPoly::zero()
                                          : weyl_closed_form(j, k - 1).scaled(k);
            run.row("(b) j=" + std::to_string(j) + " k=" + std::to_string(k),
                    d_dq(s) == dq_want);
            run.row("(c) j=" + std::to_string(j) + " k=" + std::to_string(k),
                    d_dp(s) == dp_want);
        }
    return run;
}

CheckRun check_prop3(long max_deg, long trials, unsigned seed) {
    CheckRun run{"prop3",
                 "degree=" + std::to_string(max_deg) + ", trials=" +
                     std::to_string(trials) + ", seed=" + std::to_string(seed),
                 {}};
    std::mt19937 rng(seed);
    for (long t = 0; t < trials; ++t) {
        OperatorPoly a = random_span_monomial(rng, max_deg);
        OperatorPoly b = random_span_monomial(rng, max_deg);
        OperatorPoly c = random_span_monomial(rng, max_deg);
        bool anti = poisson_sym(a, b) == -poisson_sym(b, a);
        OperatorPoly cyc = poisson_sym(a, poisson_sym(b, c)) +
                           poisson_sym(b, poisson_sym(c, a)) +
                           poisson_sym(c, poisson_sym(a, b));
        bool jacobi = cyc.is_zero();
        bool leibniz = poisson_sym(a, sym_product(b, c)) ==
                       sym_product(poisson_sym(a, b), c) +
                           sym_product(b, poisson_sym(a, c));
        run.row("trial " + std::to_string(t), anti && jacobi && leibniz);
    }
    return run;
}

// ---------------------------------------------------------------------------
// Matrix evaluation of an AST: products, powers and commutators become
// genuine matrix operations; the symmetrizer-family nodes fall back to the
// symbolic engine for their subtree.

struct MatrixValue {
    MatrixRep mat;
    long degree = 0;
};

MatrixValue eval_matrix(const Expr& e, long dim, double hbar) {
    using K = Expr::Kind;
    auto scalar = [&](std::complex<double> v) {
        return MatrixValue{mat_scale(MatrixRep::identity(dim, hbar), v), 0};
    };
    switch (e.kind) {
        case K::GenQ: return {position_matrix(dim, hbar), 1};
        case K::GenP: return {momentum_matrix(dim, hbar), 1};
        case K::GenH: return scalar({0.0, -hbar});
        case K::RationalLit: return scalar(e.value.get_d());
        case K::Power: {
            MatrixValue base = eval_matrix(*e.lhs, dim, hbar);
            return {mat_pow(base.mat, e.exponent), base.degree * e.exponent};
        }
        case K::Product: {
            MatrixValue a = eval_matrix(*e.lhs, dim, hbar);
            MatrixValue b = eval_matrix(*e.rhs, dim, hbar);
            return {mat_mul(a.mat, b.mat), a.degree + b.degree};
        }
        case K::Sum: {
            MatrixValue a = eval_matrix(*e.lhs, dim, hbar);
            MatrixValue b = eval_matrix(*e.rhs, dim, hbar);
            return {mat_add(a.mat, b.mat), std::max(a.degree, b.degree)};
        }
        case K::Difference: {
            MatrixValue a = eval_matrix(*e.lhs, dim, hbar);
            MatrixValue b = eval_matrix(*e.rhs, dim, hbar);
            return {mat_sub(a.mat, b.mat), std::max(a.degree, b.degree)};
        }
        case K::Negate: {
            MatrixValue a = eval_matrix(*e.lhs, dim, hbar);
            return {mat_scale(a.mat, -1.0), a.degree};
        }
        case K::Commutator: {
            MatrixValue a = eval_matrix(*e.lhs, dim, hbar);
            MatrixValue b = eval_matrix(*e.rhs, dim, hbar);
            return {mat_sub(mat_mul(a.mat, b.mat), mat_mul(b.mat, a.mat)),
                    a.degree + b.degree};
        }
        case K::Group: return eval_matrix(*e.lhs, dim, hbar);
        case K::SymProduct:
        case K::Symmetrize:
        case K::PoissonBracket: {
            OperatorPoly value = eval(e);
            return {represent(value, dim, hbar), value.qp_degree()};
        }
        case K::GenRho:
        case K::GenDqRho:
        case K::GenDpRho:
            throw PreconditionError("oracle expressions must be atom-free");
    }
    throw PreconditionError("unreachable expression kind");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic engine for Weyl-symmetrized operator algebra "
                 "on the Heisenberg enveloping algebra"};
    app.require_subcommand(1);

    Options opt;
    std::string format_name = "text";
    app.add_option("--format", format_name, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--verbose", opt.verbose, "Per-case tables for checks");

    std::string expr_a, expr_b;
    long weyl_n = 0, weyl_m = 0;
    bool closed_form = false;
    std::string ham_text, state_text;
    long evolve_order = 0;
    long oracle_dim = 32;
    double oracle_hbar = 1.0;
    double oracle_tol = 1e-9;
    std::string check_name;
    long max_n = -1, max_m = -1;
    long trials = -1, degree = -1, rho_degree = 3;
    unsigned seed = 1;

    auto* cmd_normalize = app.add_subcommand("normalize", "Canonical PBW form");
    cmd_normalize->add_option("expr", expr_a, "Expression")->required();

    auto* cmd_symmetrize =
        app.add_subcommand("symmetrize", "Apply the symmetrizer S");
    cmd_symmetrize->add_option("expr", expr_a, "Expression")->required();

    auto* cmd_weyl =
        app.add_subcommand("weyl", "Weyl-ordered monomial of q^n p^m");
    cmd_weyl->add_option("n", weyl_n, "q power")->required();
    cmd_weyl->add_option("m", weyl_m, "p power")->required();
    cmd_weyl->add_flag("--closed-form", closed_form,
                       "Build from the alpha coefficients instead of rewriting");

    auto* cmd_bracket =
        app.add_subcommand("bracket", "Symmetrized Poisson bracket");
    cmd_bracket->add_option("a", expr_a, "First expression")->required();
    cmd_bracket->add_option("b", expr_b, "Second expression")->required();

    auto* cmd_comm = app.add_subcommand("commutator", "a b - b a");
    cmd_comm->add_option("a", expr_a, "First expression")->required();
    cmd_comm->add_option("b", expr_b, "Second expression")->required();

    auto* cmd_quantize =
        app.add_subcommand("quantize", "Classical polynomial to operator");
    cmd_quantize->add_option("expr", expr_a, "Classical expression")->required();

    auto* cmd_dequantize =
        app.add_subcommand("dequantize", "Operator to h-graded classical");
    cmd_dequantize->add_option("expr", expr_a, "Expression")->required();

    auto* cmd_evolve = app.add_subcommand(
        "evolve", "Truncated series for d(rho)/dt = {H, rho}_S");
    cmd_evolve->add_option("--hamiltonian", ham_text, "Hamiltonian expression")
        ->required();
    cmd_evolve->add_option("--state", state_text, "Initial state expression")
        ->required();
    cmd_evolve->add_option("--order", evolve_order, "Series order")->required();

    auto* cmd_oracle = app.add_subcommand(
        "oracle", "Compare two expressions as truncated oscillator matrices");
    cmd_oracle->add_option("--dim", oracle_dim, "Matrix dimension");
    cmd_oracle->add_option("--hbar", oracle_hbar, "Value of hbar");
    cmd_oracle->add_option("--tol", oracle_tol, "Pass threshold");
    cmd_oracle->add_option("a", expr_a, "First expression")->required();
    cmd_oracle->add_option("b", expr_b, "Second expression")->required();

    auto* cmd_check = app.add_subcommand("check", "Run a theorem check sweep");
    cmd_check->add_option("which", check_name, "Check name")
        ->required()
        ->check(CLI::IsMember({"theorem5", "theorem4", "lemma51", "lemma52",
                               "identities", "prop1", "prop2", "prop3"}));
    cmd_check->add_option("--max-n", max_n, "Max n");
    cmd_check->add_option("--max-m", max_m, "Max m");
    cmd_check->add_option("--trials", trials, "Random trials");
    cmd_check->add_option("--degree", degree, "Max total degree");
    cmd_check->add_option("--rho-degree", rho_degree, "Max state degree");
    cmd_check->add_option("--seed", seed, "Random seed");

    // Global flags (--format, --verbose) are accepted after a subcommand too.
    for (auto* sub : app.get_subcommands([](CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opt.mode = format_name == "json" ? FormatMode::Json : FormatMode::Text;

    try {
        if (cmd_normalize->parsed())
            return emit_poly(opt, "normalize", eval(*parse(expr_a)));
        if (cmd_symmetrize->parsed())
            return emit_poly(opt, "symmetrize", symmetrize(eval(*parse(expr_a))));
        if (cmd_weyl->parsed()) {
            if (weyl_n < 0 || weyl_m < 0)
                throw PreconditionError("weyl requires nonnegative n and m");
            OperatorPoly value = closed_form ? weyl_closed_form(weyl_n, weyl_m)
                                             : weyl_order(weyl_n, weyl_m);
            return emit_poly(opt, "weyl", value);
        }
        if (cmd_bracket->parsed())
            return emit_poly(
                opt, "bracket",
                poisson_sym(eval(*parse(expr_a)), eval(*parse(expr_b))));
        if (cmd_comm->parsed())
            return emit_poly(
                opt, "commutator",
                commutator(eval(*parse(expr_a)), eval(*parse(expr_b))));
        if (cmd_quantize->parsed())
            return emit_poly(opt, "quantize",
                             quantize(eval_classical(*parse(expr_a))));
        if (cmd_dequantize->parsed())
            return emit_classical(opt, "dequantize",
                                  dequantize(eval(*parse(expr_a))));
        if (cmd_evolve->parsed()) {
            EvolutionSeries series = evolve_series(
                eval(*parse(ham_text)), eval(*parse(state_text)), evolve_order);
            if (opt.mode == FormatMode::Text) {
                for (std::size_t k = 0; k < series.coefficients.size(); ++k)
                    std::cout << "k=" << k << ": "
                              << format(series.coefficients[k], FormatMode::Text)
                              << "\n";
            } else {
                Json coeffs = Json::array();
                for (const auto& c : series.coefficients)
                    coeffs.push_back(Json::parse(format(c, FormatMode::Json)));
                emit_report(opt, "evolve", "pass",
                            Json{{"order", series.order()},
                                 {"coefficients", std::move(coeffs)}});
            }
            return 0;
        }
        if (cmd_oracle->parsed()) {
            ExprPtr ast_a = parse(expr_a);
            ExprPtr ast_b = parse(expr_b);
            MatrixValue ma = eval_matrix(*ast_a, oracle_dim, oracle_hbar);
            MatrixValue mb = eval_matrix(*ast_b, oracle_dim, oracle_hbar);
            auto rep =
                compare_matrices(ma.mat, mb.mat, std::max(ma.degree, mb.degree));
            bool pass = rep.max_abs_diff < oracle_tol;
            if (opt.mode == FormatMode::Text) {
                std::printf(
                    "oracle: %s maxAbsDiff=%.3e safeDim=%ld (dim=%ld hbar=%g)\n",
                    pass ? "PASS" : "FAIL", rep.max_abs_diff, rep.safe_dim,
                    oracle_dim, oracle_hbar);
            } else {
                emit_report(opt, "oracle", pass ? "pass" : "fail",
                            Json{{"maxAbsDiff", rep.max_abs_diff},
                                 {"safeDim", rep.safe_dim},
                                 {"dim", oracle_dim},
                                 {"hbar", oracle_hbar},
                                 {"tol", oracle_tol}});
            }
            return pass ? 0 : 1;
        }
        if (cmd_check->parsed()) {
            auto def = [](long v, long fallback) { return v < 0 ? fallback : v; };
            CheckRun run;
            if (check_name == "theorem5")
                run = check_theorem5(def(max_n, 8), def(max_m, 8));
            else if (check_name == "theorem4")
                run = check_theorem4(def(max_n, 4), def(max_m, 4), rho_degree);
            else if (check_name == "lemma51")
                run = check_lemma51(def(max_n, 10), def(max_m, 10));
            else if (check_name == "lemma52")
                run = check_lemma52(def(max_n, 12), def(max_m, 12));
            else if (check_name == "identities")
                run = check_identities(def(max_n, 12));
            else if (check_name == "prop1")
                run = check_prop1(def(max_n, 4), def(max_m, 4));
            else if (check_name == "prop2")
                run = check_prop2(def(max_n, 8), 6, def(trials, 20), seed);
            else
                run = check_prop3(def(degree, 6), def(trials, 100), seed);
            return emit_check(opt, run);
        }
    } catch (const ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 2;
}
