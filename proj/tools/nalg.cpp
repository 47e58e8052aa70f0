#include "nalg/constants.hpp"
#include "nalg/expr.hpp"
#include "nalg/rep.hpp"
#include "nalg/series.hpp"
#include "nalg/taylor.hpp"
#include "nalg/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

using namespace nalg;

namespace {

struct Options {
    std::string flavor = "magma";
    std::string format = "text";

    Flavor parsed_flavor() const { return flavor_from_string(flavor); }
    bool json_out() const { return format == "json"; }
};

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--flavor", opt.flavor, "magma|commutative|associative")
        ->check(CLI::IsMember({"magma", "commutative", "associative"}));
    cmd->add_option("--format", opt.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
}

MultiDegree parse_degree_spec(const std::string& spec) {
    MultiDegree d;
    std::stringstream ss(spec);
    std::string part;
    int var = 1;
    while (std::getline(ss, part, ',')) {
        int e = std::stoi(part);
        if (e < 0) throw std::invalid_argument("negative exponent in degree spec");
        if (e > 0) d[var] = e;
        ++var;
    }
    return d;
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) out.push_back(rational_from_string(part));
    return out;
}

json basis_to_json(const ConstantsBasis& cb) {
    json basis = json::array();
    for (auto& p : cb.basis) basis.push_back(polynomial_to_json(p));
    json deg = json::object();
    for (auto& [v, e] : cb.degree) deg[std::to_string(v)] = e;
    return {{"flavor", to_string(cb.flavor)},
            {"multidegree", deg},
            {"dimension", cb.dimension()},
            {"basis", basis}};
}

void print_basis_text(const ConstantsBasis& cb) {
    std::cout << "flavor " << to_string(cb.flavor) << ", multidegree (";
    bool first = true;
    for (auto& [v, e] : cb.degree) {
        if (!first) std::cout << ",";
        std::cout << "x" << v << "^" << e;
        first = false;
    }
    std::cout << "), dimension " << cb.dimension() << "\n";
    for (auto& p : cb.basis) std::cout << "  " << to_string(p) << "\n";
}

int run_verify(const std::string& suite, const Options& opt) {
    std::vector<CheckResult> results = verify_suite(suite);
    bool all = true;
    if (opt.json_out()) {
        json out = json::array();
        for (auto& r : results) {
            out.push_back({{"name", r.name},
                           {"pass", r.pass},
                           {"expected", r.expected},
                           {"computed", r.computed}});
            all = all && r.pass;
        }
        std::cout << out.dump(2) << "\n";
    } else {
        for (auto& r : results) {
            std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name << "\n";
            std::cout << "      expected: " << r.expected << "\n";
            std::cout << "      computed: " << r.computed << "\n";
            all = all && r.pass;
        }
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations in free non-associative algebras"};
    app.require_subcommand(1);

    Options opt;

    // parse
    auto* cmd_parse = app.add_subcommand("parse", "parse and reprint an expression");
    std::string expr;
    cmd_parse->add_option("--expr", expr, "expression")->required();
    add_common(cmd_parse, opt);

    // derive
    auto* cmd_derive = app.add_subcommand("derive", "formal partial derivative");
    int derive_var = 1;
    cmd_derive->add_option("--expr", expr, "expression")->required();
    cmd_derive->add_option("--var", derive_var, "variable index (default 1)");
    add_common(cmd_derive, opt);

    // taylor-expand
    auto* cmd_taylor = app.add_subcommand("taylor-expand", "Taylor expansion with constant coefficients");
    std::string family = "rho";
    cmd_taylor->add_option("--expr", expr, "expression")->required();
    cmd_taylor->add_option("--family", family,
                           "operator family: rho (plain right powers) or jordan")
        ->check(CLI::IsMember({"rho", "jordan"}));
    add_common(cmd_taylor, opt);

    // constants
    auto* cmd_constants = app.add_subcommand("constants", "basis of the constants in one component");
    int vars = 1;
    std::string degree_spec = "0";
    cmd_constants->add_option("--vars", vars, "number of variables");
    cmd_constants->add_option("--degree", degree_spec,
                              "multidegree 'e1,e2,...' or a total degree");
    add_common(cmd_constants, opt);

    // generators
    auto* cmd_generators = app.add_subcommand("generators", "free generators of the constants of K{x}");
    int gen_degree = 3;
    cmd_generators->add_option("--degree", gen_degree, "degree n >= 3")->required();
    add_common(cmd_generators, opt);

    // hilbert
    auto* cmd_hilbert = app.add_subcommand("hilbert", "verify the Hilbert product identity");
    int max_degree = 6;
    cmd_hilbert->add_option("--vars", vars, "number of variables");
    cmd_hilbert->add_option("--max-degree", max_degree, "total degree bound");
    add_common(cmd_hilbert, opt);

    // decompose
    auto* cmd_decompose = app.add_subcommand("decompose", "isotypic decomposition of the multilinear constants");
    int weight = 2;
    std::string method = "both";
    cmd_decompose->add_option("--k", weight, "multilinear weight")->required();
    cmd_decompose->add_option("--method", method, "kernel|recursion|both")
        ->check(CLI::IsMember({"kernel", "recursion", "both"}));
    add_common(cmd_decompose, opt);

    // ode solve / homogeneous
    auto* cmd_ode = app.add_subcommand("ode", "linear ODEs over formal power series");
    cmd_ode->require_subcommand(1);
    auto* cmd_solve = cmd_ode->add_subcommand("solve", "unique solution with prescribed initial constants");
    int ode_order = 1;
    std::string coeffs_str, rhs_str = "0", init_str;
    int N = 10;
    cmd_solve->add_option("--order", ode_order, "order n")->required();
    cmd_solve->add_option("--coeffs", coeffs_str, "a_1,...,a_n")->required();
    cmd_solve->add_option("--rhs", rhs_str, "right-hand side expression");
    cmd_solve->add_option("--init", init_str, "c_0;...;c_{n-1} (constant expressions)");
    cmd_solve->add_option("--N", N, "truncation order");
    add_common(cmd_solve, opt);

    auto* cmd_homog = cmd_ode->add_subcommand("homogeneous", "general solution from characteristic roots");
    std::string roots_str, cij_str;
    cmd_homog->add_option("--roots", roots_str, "root:multiplicity,... e.g. '1:2,0:1'")->required();
    cmd_homog->add_option("--cij", cij_str, "constants per (root,power), ';'-separated (default all 1)");
    cmd_homog->add_option("--N", N, "truncation order");
    add_common(cmd_homog, opt);

    // exp
    auto* cmd_exp = app.add_subcommand("exp", "the non-associative exponential E(x)");
    cmd_exp->add_option("--N", N, "truncation order");
    add_common(cmd_exp, opt);

    // verify
    auto* cmd_verify = app.add_subcommand("verify", "run the bundled verification suites");
    std::string suite = "all";
    cmd_verify->add_option("suite", suite, "hilbert|decompositions|ode|exp|all")
        ->check(CLI::IsMember({"hilbert", "decompositions", "ode", "exp", "all"}));
    add_common(cmd_verify, opt);

    CLI11_PARSE(app, argc, argv);

    try {
        Flavor flavor = opt.parsed_flavor();

        if (cmd_parse->parsed()) {
            Polynomial p = parse_polynomial(expr, flavor);
            if (opt.json_out())
                std::cout << polynomial_to_json(p).dump(2) << "\n";
            else
                std::cout << to_string(p) << "\n";
            return 0;
        }

        if (cmd_derive->parsed()) {
            Polynomial p = partial_derivative(parse_polynomial(expr, flavor), derive_var);
            if (opt.json_out())
                std::cout << polynomial_to_json(p).dump(2) << "\n";
            else
                std::cout << to_string(p) << "\n";
            return 0;
        }

        if (cmd_taylor->parsed()) {
            Polynomial input = parse_polynomial(expr, flavor);
            TaylorExpansion e =
                family == "jordan"
                    ? generalized_expand(input, OperatorFamily::jordan())
                    : taylor_expand(input);
            if (opt.json_out()) {
                std::cout << expansion_to_json(e).dump(2) << "\n";
            } else {
                for (auto& [a, coeff] : e.coefficients) {
                    std::cout << "a = (";
                    for (size_t i = 0; i < a.size(); ++i)
                        std::cout << (i ? "," : "") << a[i];
                    std::cout << "): " << to_string(coeff) << "\n";
                }
                if (e.coefficients.empty()) std::cout << "0\n";
            }
            return 0;
        }

        if (cmd_constants->parsed()) {
            std::vector<MultiDegree> degs;
            if (degree_spec.find(',') == std::string::npos && vars > 1) {
                // a bare total degree with several variables: every component
                degs = multidegrees_of_total(vars, std::stoi(degree_spec));
            } else {
                degs.push_back(parse_degree_spec(degree_spec));
            }
            json out = json::array();
            for (auto& d : degs) {
                ConstantsBasis cb = constants_basis(d, flavor);
                if (opt.json_out())
                    out.push_back(basis_to_json(cb));
                else
                    print_basis_text(cb);
            }
            if (opt.json_out()) std::cout << out.dump(2) << "\n";
            return 0;
        }

        if (cmd_generators->parsed()) {
            GeneratorSet gs = free_generators(gen_degree);
            if (opt.json_out()) {
                json out = json::array();
                for (auto& e : gs.elements)
                    out.push_back({{"word", monomial_to_json(e.source)},
                                   {"forms", e.forms},
                                   {"value", polynomial_to_json(e.value)}});
                std::cout << json{{"degree", gs.degree},
                                  {"count", gs.count()},
                                  {"elements", out}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "degree " << gs.degree << ": " << gs.count()
                          << " generators\n";
                for (auto& e : gs.elements) {
                    std::cout << "  " << to_string(e.source) << "  [";
                    for (size_t i = 0; i < e.forms.size(); ++i)
                        std::cout << (i ? ", " : "") << e.forms[i];
                    std::cout << "]\n    phi = " << to_string(e.value) << "\n";
                }
            }
            return 0;
        }

        if (cmd_hilbert->parsed()) {
            HilbertProductReport rep = verify_hilbert_product(flavor, vars, max_degree);
            if (opt.json_out()) {
                json rows = json::array();
                for (auto& row : rep.rows) {
                    json deg = json::object();
                    for (auto& [v, e] : row.degree) deg[std::to_string(v)] = e;
                    rows.push_back({{"multidegree", deg},
                                    {"component_dim", row.component_dim.get_str()},
                                    {"constants_sum", row.constants_sum.get_str()},
                                    {"pass", row.pass}});
                }
                std::cout << json{{"flavor", to_string(flavor)},
                                  {"vars", vars},
                                  {"max_degree", max_degree},
                                  {"all_pass", rep.all_pass},
                                  {"rows", rows}}
                                 .dump(2)
                          << "\n";
            } else {
                for (auto& row : rep.rows) {
                    std::cout << (row.pass ? "PASS" : "FAIL") << "  d=(";
                    bool first = true;
                    for (auto& [v, e] : row.degree) {
                        if (!first) std::cout << ",";
                        std::cout << "x" << v << "^" << e;
                        first = false;
                    }
                    if (row.degree.empty()) std::cout << "0";
                    std::cout << ")  dim R = " << row.component_dim.get_str()
                              << ", sum dim R_0 = " << row.constants_sum.get_str()
                              << "\n";
                }
                std::cout << (rep.all_pass ? "identity holds" : "identity FAILS")
                          << "\n";
            }
            return rep.all_pass ? 0 : 1;
        }

        if (cmd_decompose->parsed()) {
            std::vector<std::pair<std::string, Decomposition>> results;
            if (method == "kernel" || method == "both")
                results.emplace_back(
                    "kernel", constants_decomposition(weight, flavor, DecompMethod::Kernel));
            if (method == "recursion" || method == "both")
                results.emplace_back(
                    "recursion",
                    constants_decomposition(weight, flavor, DecompMethod::Recursion));
            bool agree = results.size() < 2 ||
                         results[0].second == results[1].second;
            if (opt.json_out()) {
                json out = json::object();
                for (auto& [name, dec] : results)
                    out[name] = decomposition_to_json(dec);
                out["methods_agree"] = agree;
                std::cout << out.dump(2) << "\n";
            } else {
                for (auto& [name, dec] : results) {
                    std::cout << name << ":\n";
                    for (auto it = dec.multiplicities.rbegin();
                         it != dec.multiplicities.rend(); ++it)
                        std::cout << "  partition " << partition_to_string(it->first)
                                  << "  multiplicity " << it->second << "\n";
                    std::cout << "  dimension " << dec.dimension().get_str() << "\n";
                }
                if (results.size() == 2)
                    std::cout << (agree ? "methods agree" : "METHODS DISAGREE")
                              << "\n";
            }
            return agree ? 0 : 1;
        }

        if (cmd_solve->parsed()) {
            std::vector<Rational> a = parse_rational_list(coeffs_str);
            LinearODE ode{ode_order, a,
                          TruncatedElement::from_polynomial(
                              parse_polynomial(rhs_str, flavor), N),
                          {}};
            std::stringstream ss(init_str);
            std::string part;
            while (std::getline(ss, part, ';'))
                ode.initial.push_back(TruncatedElement::from_polynomial(
                    parse_polynomial(part, flavor), N));
            while (static_cast<int>(ode.initial.size()) < ode_order)
                ode.initial.push_back(TruncatedElement::zero(flavor, N));
            for (auto& c : ode.initial)
                if (!c.is_constant_series())
                    throw std::invalid_argument("initial data must be constants");
            TruncatedElement y = solve_linear_ode(ode, N).materialize();
            if (opt.json_out()) {
                json comps = json::array();
                for (int n = 0; n <= N; ++n)
                    comps.push_back(polynomial_to_json(y.component(n)));
                std::cout << json{{"N", N}, {"components", comps}}.dump(2) << "\n";
            } else {
                for (int n = 0; n <= N; ++n)
                    std::cout << "deg " << n << ": " << to_string(y.component(n))
                              << "\n";
            }
            return 0;
        }

        if (cmd_homog->parsed()) {
            RootData roots;
            std::stringstream ss(roots_str);
            std::string part;
            while (std::getline(ss, part, ',')) {
                auto colon = part.find(':');
                if (colon == std::string::npos)
                    throw std::invalid_argument("roots must be 'root:multiplicity'");
                roots.roots.emplace_back(rational_from_string(part.substr(0, colon)),
                                         std::stoi(part.substr(colon + 1)));
            }
            int n = roots.total_multiplicity();
            // monic characteristic polynomial from the roots
            std::vector<Rational> poly = {Rational(1)};
            for (auto& [lambda, mult] : roots.roots)
                for (int s = 0; s < mult; ++s) {
                    std::vector<Rational> next(poly.size() + 1, Rational(0));
                    for (size_t i = 0; i < poly.size(); ++i) {
                        next[i] += poly[i];
                        next[i + 1] -= lambda * poly[i];
                    }
                    poly = std::move(next);
                }
            std::vector<Rational> a(poly.begin() + 1, poly.end());
            std::vector<std::vector<TruncatedElement>> c;
            std::vector<TruncatedElement> flat;
            if (!cij_str.empty()) {
                std::stringstream cs(cij_str);
                while (std::getline(cs, part, ';'))
                    flat.push_back(TruncatedElement::from_polynomial(
                        parse_polynomial(part, flavor), N));
            }
            size_t next_c = 0;
            for (auto& [lambda, mult] : roots.roots) {
                std::vector<TruncatedElement> block;
                for (int j = 0; j < mult; ++j)
                    block.push_back(next_c < flat.size()
                                        ? flat[next_c++]
                                        : TruncatedElement::scalar(flavor, N, 1));
                c.push_back(std::move(block));
            }
            TruncatedElement y = homogeneous_general_solution(roots, a, c, N).materialize();
            LinearODE check{n, a, TruncatedElement::zero(flavor, N), {}};
            bool residual_zero = ode_residual(check, y).is_zero();
            if (opt.json_out()) {
                json comps = json::array();
                for (int d = 0; d <= N; ++d)
                    comps.push_back(polynomial_to_json(y.component(d)));
                std::cout << json{{"N", N},
                                  {"residual_zero", residual_zero},
                                  {"components", comps}}
                                 .dump(2)
                          << "\n";
            } else {
                for (int d = 0; d <= N; ++d)
                    std::cout << "deg " << d << ": " << to_string(y.component(d))
                              << "\n";
                std::cout << "residual through degree " << N - n << ": "
                          << (residual_zero ? "0" : "NONZERO") << "\n";
            }
            return 0;
        }

        if (cmd_exp->parsed()) {
            TruncatedElement e = nonassoc_exponential(N);
            if (opt.json_out()) {
                json comps = json::array();
                for (int d = 0; d <= N; ++d)
                    comps.push_back(polynomial_to_json(e.component(d)));
                std::cout << json{{"N", N}, {"components", comps}}.dump(2) << "\n";
            } else {
                for (int d = 0; d <= N; ++d)
                    std::cout << "deg " << d << ": " << to_string(e.component(d))
                              << "\n";
            }
            return 0;
        }

        if (cmd_verify->parsed()) return run_verify(suite, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error at column " << e.column << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
