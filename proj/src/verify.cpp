#include "nalg/verify.hpp"

#include "nalg/constants.hpp"
#include "nalg/expr.hpp"
#include "nalg/rep.hpp"
#include "nalg/series.hpp"
#include "nalg/taylor.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace nalg {

namespace {

const Flavor kFlavors[] = {Flavor::Magma, Flavor::Commutative, Flavor::Associative};

using Rng = std::mt19937_64;

int rand_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

Monomial random_tree(Rng& rng, int degree, int vars) {
    if (degree == 0) return Monomial::unit(Flavor::Magma);
    if (degree == 1) return Monomial::leaf(Flavor::Magma, rand_int(rng, 1, vars));
    int s = rand_int(rng, 1, degree - 1);
    return Monomial::node(random_tree(rng, s, vars), random_tree(rng, degree - s, vars));
}

Polynomial random_polynomial(Rng& rng, Flavor flavor, int maxdeg, int vars,
                             int terms) {
    Polynomial p(flavor);
    for (int t = 0; t < terms; ++t) {
        int num = rand_int(rng, -9, 9);
        if (num == 0) num = 1;
        Rational c = make_rational(num, rand_int(rng, 1, 4));
        p.add_term(canonicalize(random_tree(rng, rand_int(rng, 0, maxdeg), vars),
                                flavor),
                   c);
    }
    return p;
}

// random element of the completed constants algebra, as a truncated series
TruncatedElement random_constant_series(Rng& rng, Flavor flavor, int order) {
    TruncatedElement c(flavor, order);
    c.set_component(0, Polynomial::scalar(flavor, make_rational(rand_int(rng, -5, 5))));
    for (int d = 1; d <= std::min(order, 4); ++d) {
        ConstantsBasis cb = constants_basis(MultiDegree{{1, d}}, flavor);
        Polynomial comp(flavor);
        for (auto& b : cb.basis)
            comp += b * make_rational(rand_int(rng, -3, 3));
        c.set_component(d, std::move(comp));
    }
    return c;
}

std::string join_ints(const std::vector<Integer>& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

std::string decomposition_str(const Decomposition& d) {
    if (d.multiplicities.empty()) return "0";
    std::string s;
    for (auto it = d.multiplicities.rbegin(); it != d.multiplicities.rend(); ++it) {
        if (!s.empty()) s += " + ";
        if (it->second != 1) s += std::to_string(it->second);
        s += partition_to_string(it->first);
    }
    return s;
}

Decomposition make_decomposition(int weight,
                                 std::vector<std::pair<Partition, int>> mults) {
    Decomposition d;
    d.weight = weight;
    for (auto& [p, m] : mults) d.multiplicities[p] = m;
    return d;
}

} // namespace

CheckResult check_constants_dimensions() {
    CheckResult r{"constants dimensions: dim C^(n) = c_n - c_{n-1}, n <= 10", true, "", ""};
    std::vector<Integer> expected = gamma_series(10);
    std::vector<Integer> computed;
    for (int n = 0; n <= 10; ++n) {
        MultiDegree d;
        if (n > 0) d[1] = n;
        computed.emplace_back(constants_dimension(d, Flavor::Magma));
    }
    r.expected = join_ints(expected);
    r.computed = join_ints(computed);
    r.pass = expected == computed;
    return r;
}

CheckResult check_taylor_roundtrip() {
    CheckResult r{"taylor round-trip: reconstruct(expand(r)) = r, 500 random inputs", true,
                  "500 exact round trips and expand(0) empty", ""};
    Rng rng(20240311);
    int ok = 0;
    const int total = 500;
    for (int i = 0; i < total; ++i) {
        Flavor f = kFlavors[i % 3];
        Polynomial p = random_polynomial(rng, f, 6, 3, rand_int(rng, 1, 6));
        TaylorExpansion e = taylor_expand(p);
        bool good = taylor_reconstruct(e) == p;
        for (auto& [a, coeff] : e.coefficients)
            good = good && is_constant(coeff);
        if (good) ++ok;
    }
    bool zero_ok = taylor_expand(Polynomial::zero(Flavor::Magma)).coefficients.empty();
    std::ostringstream os;
    os << ok << "/" << total << " round trips, expand(0) "
       << (zero_ok ? "empty" : "nonempty");
    r.computed = os.str();
    r.pass = (ok == total) && zero_ok;
    return r;
}

CheckResult check_decomposition_tables() {
    CheckResult r{"decomposition tables: C^(k) and commutative R_0^(k), both methods",
                  true, "", ""};
    struct Case {
        Flavor flavor;
        int k;
        Decomposition expected;
    };
    std::vector<Case> cases = {
        {Flavor::Magma, 2, make_decomposition(2, {{{1, 1}, 1}})},
        {Flavor::Magma, 3,
         make_decomposition(3, {{{3}, 1}, {{2, 1}, 3}, {{1, 1, 1}, 1}})},
        {Flavor::Magma, 4,
         make_decomposition(4, {{{4}, 3},
                                {{3, 1}, 10},
                                {{2, 2}, 7},
                                {{2, 1, 1}, 10},
                                {{1, 1, 1, 1}, 4}})},
        {Flavor::Commutative, 2, make_decomposition(2, {})},
        {Flavor::Commutative, 3, make_decomposition(3, {{{2, 1}, 1}})},
        {Flavor::Commutative, 4,
         make_decomposition(4, {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}})},
    };
    std::ostringstream exp, got;
    for (auto& c : cases) {
        Decomposition kernel = constants_decomposition(c.k, c.flavor, DecompMethod::Kernel);
        Decomposition recur = constants_decomposition(c.k, c.flavor, DecompMethod::Recursion);
        bool ok = kernel == c.expected && recur == c.expected;
        r.pass = r.pass && ok;
        exp << to_string(c.flavor) << " k=" << c.k << ": "
            << decomposition_str(c.expected) << "; ";
        got << to_string(c.flavor) << " k=" << c.k << ": "
            << decomposition_str(kernel)
            << (kernel == recur ? "" : " (methods disagree)") << "; ";
    }
    for (Flavor f : {Flavor::Magma, Flavor::Commutative}) {
        for (int k = 0; k <= 5; ++k) {
            bool agree = constants_decomposition(k, f, DecompMethod::Kernel) ==
                         constants_decomposition(k, f, DecompMethod::Recursion);
            r.pass = r.pass && agree;
            if (!agree)
                got << to_string(f) << " k=" << k << ": methods disagree; ";
        }
    }
    exp << "methods agree for k <= 5";
    r.expected = exp.str();
    r.computed = r.pass ? got.str() + "methods agree for k <= 5" : got.str();
    return r;
}

CheckResult check_free_generators() {
    CheckResult r{"free generators: |Y_n| = g_n for n = 3..7; products span through degree 6",
                  true, "", ""};
    std::vector<Integer> g = generator_series(7);
    std::ostringstream exp, got;
    exp << "counts 1,3,9,27,84; span ranks = gamma with 27+1 at degree 6";
    got << "counts ";
    for (int n = 3; n <= 7; ++n) {
        int count = free_generators(n).count();
        if (n > 3) got << ",";
        got << count;
        r.pass = r.pass && Integer(count) == g[static_cast<size_t>(n)];
    }
    SpanCheckReport span = span_check_generators(6);
    r.pass = r.pass && span.all_pass;
    for (auto& row : span.rows) {
        if (row.degree == 6) {
            got << "; degree 6: " << row.product_count << " products, rank "
                << row.rank << " (gamma_6 = " << row.expected_dim.get_str() << ")";
            r.pass = r.pass && row.product_count == 28 && row.rank == 28;
        }
    }
    got << (span.all_pass ? "; spans complete" : "; span check failed");
    r.expected = exp.str();
    r.computed = got.str();
    return r;
}

CheckResult check_hilbert_product() {
    CheckResult r{"Hilbert product identity: dim R^(d) = sum_{e<=d} dim R_0^(e), m <= 2, |d| <= 6",
                  true, "identity holds at every multidegree, all flavors", ""};
    std::ostringstream got;
    int checked = 0;
    for (Flavor f : kFlavors) {
        for (int m = 1; m <= 2; ++m) {
            HilbertProductReport rep = verify_hilbert_product(f, m, 6);
            checked += static_cast<int>(rep.rows.size());
            if (!rep.all_pass) {
                r.pass = false;
                for (auto& row : rep.rows)
                    if (!row.pass)
                        got << to_string(f) << " m=" << m << " d="
                            << total_degree(row.degree) << ": "
                            << row.component_dim.get_str()
                            << " != " << row.constants_sum.get_str() << "; ";
            }
        }
    }
    if (r.pass) got << "identity holds at all " << checked << " multidegrees";
    r.computed = got.str();
    return r;
}

CheckResult check_commutative_series() {
    CheckResult r{"commutative Hilbert series: recursion matches enumeration, degree <= 8",
                  true, "", ""};
    std::ostringstream exp, got;
    exp << "m=1: 1,1,1,2,3,6,11,23";
    bool first = true;
    for (int m = 1; m <= 2; ++m) {
        std::vector<Integer> table = commutative_hilbert(m, 8);
        std::vector<Integer> census;
        for (int n = 1; n <= 8; ++n) {
            Integer count = 0;
            for (auto& d : multidegrees_of_total(m, n))
                count += enumerate_monomials(d, Flavor::Commutative).size();
            census.push_back(count);
        }
        std::vector<Integer> tail(table.begin() + 1, table.end());
        if (!first) got << "; ";
        got << "m=" << m << ": " << join_ints(census)
            << (tail == census ? "" : " (recursion disagrees)");
        r.pass = r.pass && tail == census;
        first = false;
    }
    std::vector<Integer> expect1 = {1, 1, 1, 2, 3, 6, 11, 23};
    std::vector<Integer> got1 = commutative_hilbert(1, 8);
    r.pass = r.pass && std::vector<Integer>(got1.begin() + 1, got1.end()) == expect1;
    r.expected = exp.str();
    r.computed = got.str();
    return r;
}

CheckResult check_associative_constants() {
    CheckResult r{"associative constants: dims match prod(1-t_j)/(1-t_1-t_2), |d| <= 6",
                  true, "coefficients match; (1,1) basis = {x1x2 - x2x1}", ""};
    std::ostringstream got;
    bool dims_ok = true;
    for (int total = 0; total <= 6; ++total) {
        for (auto& d : multidegrees_of_total(2, total)) {
            Integer predicted = associative_constants_coefficient(d, 2);
            Integer computed = constants_dimension(d, Flavor::Associative);
            if (predicted != computed) {
                dims_ok = false;
                got << "d total " << total << ": " << computed.get_str()
                    << " != " << predicted.get_str() << "; ";
            }
        }
    }
    ConstantsBasis cb = constants_basis(MultiDegree{{1, 1}, {2, 1}}, Flavor::Associative);
    Polynomial commutator(Flavor::Associative);
    commutator.add_term(Monomial::word(Flavor::Associative, {1, 2}), 1);
    commutator.add_term(Monomial::word(Flavor::Associative, {2, 1}), -1);
    bool basis_ok = cb.basis.size() == 1 && cb.basis[0] == commutator;
    r.pass = dims_ok && basis_ok;
    if (r.pass)
        got << "all coefficients match; (1,1) basis is {" << to_string(commutator) << "}";
    else if (!basis_ok)
        got << "(1,1) basis: "
            << (cb.basis.empty() ? std::string("empty") : to_string(cb.basis[0]));
    r.computed = got.str();
    return r;
}

CheckResult check_ode_suite() {
    CheckResult r{"linear ODEs: zero residuals, uniqueness, both solution paths agree",
                  true, "100 residual checks, uniqueness, 20 path agreements", ""};
    Rng rng(77210345);
    const int N = 10;
    int residual_ok = 0;
    for (int trial = 0; trial < 100; ++trial) {
        Flavor f = kFlavors[trial % 3];
        int n = rand_int(rng, 1, 3);
        LinearODE ode{n, {}, TruncatedElement::zero(f, N), {}};
        for (int i = 0; i < n; ++i)
            ode.a.push_back(make_rational(rand_int(rng, -4, 4), rand_int(rng, 1, 3)));
        ode.rhs = TruncatedElement::from_polynomial(
            random_polynomial(rng, f, 5, 1, rand_int(rng, 1, 4)), N);
        for (int i = 0; i < n; ++i)
            ode.initial.push_back(random_constant_series(rng, f, N));
        TruncatedElement y = solve_linear_ode(ode, N).materialize();
        if (ode_residual(ode, y).is_zero()) ++residual_ok;
    }
    // uniqueness: zero data, zero solution
    LinearODE zero{2,
                   {make_rational(1), make_rational(-2)},
                   TruncatedElement::zero(Flavor::Magma, N),
                   {TruncatedElement::zero(Flavor::Magma, N),
                    TruncatedElement::zero(Flavor::Magma, N)}};
    bool unique_ok = solve_linear_ode(zero, N).materialize().is_zero();

    int path_ok = 0;
    for (int trial = 0; trial < 20; ++trial) {
        Flavor f = kFlavors[trial % 3];
        // distinct small rational roots with multiplicities summing to n <= 3
        RootData roots;
        int n = 0;
        std::vector<Rational> pool = {make_rational(0), make_rational(1),
                                      make_rational(-1), make_rational(2),
                                      make_rational(1, 2), make_rational(-3, 2)};
        std::shuffle(pool.begin(), pool.end(), rng);
        int nroots = rand_int(rng, 1, 2);
        for (int i = 0; i < nroots && n < 3; ++i) {
            int mult = rand_int(rng, 1, 3 - n);
            roots.roots.emplace_back(pool[static_cast<size_t>(i)], mult);
            n += mult;
        }
        // a_i from the monic product of (t - lambda_i)^{k_i}
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

        std::vector<TruncatedElement> initial;
        for (int i = 0; i < n; ++i)
            initial.push_back(random_constant_series(rng, f, N));
        LinearODE ode{n, a, TruncatedElement::zero(f, N), initial};
        TaylorSeries via_recursion = solve_linear_ode(ode, N);
        auto c = fit_initial_constants(roots, initial, N);
        TaylorSeries via_roots = homogeneous_general_solution(roots, a, c, N);
        if (via_recursion.materialize() == via_roots.materialize()) ++path_ok;
    }
    std::ostringstream got;
    got << residual_ok << "/100 residuals zero, uniqueness "
        << (unique_ok ? "holds" : "fails") << ", " << path_ok
        << "/20 path agreements";
    r.computed = got.str();
    r.pass = residual_ok == 100 && unique_ok && path_ok == 20;
    return r;
}

CheckResult check_exponential() {
    CheckResult r{"exponential: E' = E, E(0) = 1, E(x)E(x) = E(2x) at N = 8", true,
                  "all three identities exact; e_2 = (x x)/2, e_3 = (x(xx) + (xx)x)/12",
                  ""};
    const int N = 8;
    TruncatedElement e = nonassoc_exponential(N);
    bool deriv_ok = e.derivative() == e.truncate(N - 1);
    bool unit_ok = e.component(0) == Polynomial::scalar(Flavor::Magma, 1);
    bool square_ok = multiply(e, e) == e.scale_substitute(2);

    // closed forms recomputed from the recursion: e_3 carries 1/12 (anything
    // else breaks E' = E against e_2)
    Polynomial x = Polynomial::variable(Flavor::Magma, 1);
    Polynomial e2 = (x * x) * make_rational(1, 2);
    Polynomial e3 = (x * (x * x) + (x * x) * x) * make_rational(1, 12);
    bool closed_ok = e.component(2) == e2 && e.component(3) == e3;

    std::ostringstream got;
    got << "E'-E " << (deriv_ok ? "= 0" : "!= 0") << ", E(0) "
        << (unit_ok ? "= 1" : "!= 1") << ", EE-E(2x) "
        << (square_ok ? "= 0" : "!= 0") << ", low components "
        << (closed_ok ? "match" : "differ");
    r.computed = got.str();
    r.pass = deriv_ok && unit_ok && square_ok && closed_ok;
    return r;
}

CheckResult check_characters() {
    CheckResult r{"character infrastructure: orthogonality, regular decomposition, trivial part",
                  true, "<chi_l,chi_m> = delta for weights <= 7; regular -> dims; trivial part = gamma",
                  ""};
    bool orth_ok = true;
    for (int n = 1; n <= 7 && orth_ok; ++n) {
        std::vector<Partition> ps = partitions(n);
        std::vector<ClassFunction> chars;
        for (auto& p : ps) chars.push_back(irreducible_character(p));
        for (size_t i = 0; i < ps.size() && orth_ok; ++i)
            for (size_t j = 0; j < ps.size() && orth_ok; ++j) {
                Rational ip = inner_product(chars[i], chars[j]);
                orth_ok = ip == (i == j ? 1 : 0);
            }
    }
    // regular character of S_4: n! at the identity, 0 elsewhere
    ClassFunction reg;
    reg.weight = 4;
    for (auto& mu : partitions(4))
        reg.values[mu] = (static_cast<int>(mu.size()) == 4) ? Rational(24) : Rational(0);
    Decomposition reg_dec = decompose(reg);
    bool reg_ok = true;
    for (auto& lambda : partitions(4)) {
        auto it = reg_dec.multiplicities.find(lambda);
        Integer dim = irrep_dimension(lambda);
        reg_ok = reg_ok && it != reg_dec.multiplicities.end() && Integer(it->second) == dim;
    }
    std::vector<Integer> gamma = gamma_series(5);
    bool trivial_ok = true;
    for (int k = 1; k <= 5; ++k) {
        Decomposition d = constants_decomposition(k, Flavor::Magma, DecompMethod::Kernel);
        Partition triv(1, k);
        auto it = d.multiplicities.find(triv);
        Integer mult = it == d.multiplicities.end() ? 0 : it->second;
        trivial_ok = trivial_ok && mult == gamma[static_cast<size_t>(k)];
    }
    std::ostringstream got;
    got << "orthogonality " << (orth_ok ? "holds" : "fails") << ", regular "
        << (reg_ok ? "-> dims" : "wrong") << ", trivial part "
        << (trivial_ok ? "= gamma" : "!= gamma");
    r.computed = got.str();
    r.pass = orth_ok && reg_ok && trivial_ok;
    return r;
}

std::vector<CheckResult> acceptance_criteria() {
    return {
        check_constants_dimensions(), check_taylor_roundtrip(),
        check_decomposition_tables(), check_free_generators(),
        check_hilbert_product(),      check_commutative_series(),
        check_associative_constants(), check_ode_suite(),
        check_exponential(),          check_characters(),
    };
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
    if (suite == "hilbert")
        return {check_constants_dimensions(), check_hilbert_product(),
                check_commutative_series(), check_associative_constants()};
    if (suite == "decompositions")
        return {check_decomposition_tables(), check_characters()};
    if (suite == "ode") return {check_ode_suite()};
    if (suite == "exp") return {check_exponential()};
    if (suite == "all") return acceptance_criteria();
    throw std::invalid_argument("unknown verification suite: '" + suite + "'");
}

} // namespace nalg
