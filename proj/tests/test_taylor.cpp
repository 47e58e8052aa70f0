#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalg/expr.hpp"
#include "nalg/taylor.hpp"

#include <random>

using namespace nalg;

namespace {

Polynomial parse(const std::string& s, Flavor f = Flavor::Magma) {
    return parse_polynomial(s, f);
}

std::mt19937_64 rng(24601);
int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_tree(int degree, int vars) {
    if (degree == 0) return Monomial::unit(Flavor::Magma);
    if (degree == 1) return Monomial::leaf(Flavor::Magma, rnd(1, vars));
    int s = rnd(1, degree - 1);
    return Monomial::node(random_tree(s, vars), random_tree(degree - s, vars));
}

Polynomial random_poly(Flavor f, int maxdeg, int vars, int terms) {
    Polynomial p(f);
    for (int t = 0; t < terms; ++t) {
        int c = rnd(-9, 9);
        p.add_term(canonicalize(random_tree(rnd(0, maxdeg), vars), f), c == 0 ? 1 : c);
    }
    return p;
}

// apply rho powers by hand
Polynomial rho_power(Polynomial p, int var, int k) {
    Polynomial x = Polynomial::variable(p.flavor(), var);
    for (int i = 0; i < k; ++i) p = p * x;
    return p;
}

} // namespace

TEST_CASE("constant remainder") {
    CHECK(constant_remainder(parse("(x x)"), 1).is_zero());
    CHECK(constant_remainder(parse("(x (x x))"), 1) == parse("(x (x x)) - ((x x) x)"));
    Polynomial c = parse("(x (x x)) - ((x x) x)");
    CHECK(constant_remainder(c, 1) == c); // already constant
    CHECK(partial_derivative(constant_remainder(parse("(x (x x))"), 1), 1).is_zero());
}

TEST_CASE("taylor expansion of the worked examples") {
    // x(xx) = [x(xx) - (xx)x] + 1 * rho^3
    TaylorExpansion e = taylor_expand(parse("(x (x x))"));
    REQUIRE(e.coefficients.size() == 2);
    CHECK(e.coefficients.at({0}) == parse("(x (x x)) - ((x x) x)"));
    CHECK(e.coefficients.at({3}) == Polynomial::scalar(Flavor::Magma, 1));

    // x2 x1 over two variables
    TaylorExpansion e2 = taylor_expand(parse("(x2 x1)"));
    CHECK(e2.nvars == 2);
    REQUIRE(e2.coefficients.size() == 2);
    CHECK(e2.coefficients.at({1, 1}) == Polynomial::scalar(Flavor::Magma, 1));
    CHECK(e2.coefficients.at({0, 0}) == parse("(x2 x1) - (x1 x2)"));

    // constants expand to themselves at exponent zero
    TaylorExpansion e3 = taylor_expand(Polynomial::scalar(Flavor::Magma, make_rational(7, 2)));
    REQUIRE(e3.coefficients.size() == 1);
    CHECK(e3.coefficients.at({}) == Polynomial::scalar(Flavor::Magma, make_rational(7, 2)));

    CHECK(taylor_expand(Polynomial::zero(Flavor::Magma)).coefficients.empty());
}

TEST_CASE("reconstruction") {
    TaylorExpansion e;
    e.flavor = Flavor::Magma;
    e.nvars = 2;
    e.coefficients.emplace(std::vector<int>{1, 1}, Polynomial::scalar(Flavor::Magma, 1));
    CHECK(taylor_reconstruct(e) == parse("(x1 x2)"));

    TaylorExpansion bad = e;
    bad.coefficients.begin()->second = parse("x");
    CHECK_THROWS_AS(taylor_reconstruct(bad), std::invalid_argument);

    Polynomial r = parse("(x ((x x) x)) + 2*x");
    CHECK(taylor_reconstruct(taylor_expand(r)) == r);
}

TEST_CASE("round trip and constancy across flavors") {
    for (Flavor f : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int i = 0; i < 60; ++i) {
            Polynomial p = random_poly(f, 6, 3, rnd(1, 5));
            TaylorExpansion e = taylor_expand(p);
            CHECK(taylor_reconstruct(e) == p);
            for (auto& [a, coeff] : e.coefficients) {
                CHECK(!coeff.is_zero());
                CHECK(is_constant(coeff));
            }
        }
    }
}

TEST_CASE("perturbing any expansion coefficient changes the reconstruction") {
    for (int i = 0; i < 40; ++i) {
        Polynomial p = random_poly(Flavor::Magma, 5, 2, 3);
        if (p.is_zero()) continue;
        TaylorExpansion e = taylor_expand(p);
        TaylorExpansion perturbed = e;
        auto it = perturbed.coefficients.begin();
        std::advance(it, rnd(0, static_cast<int>(perturbed.coefficients.size()) - 1));
        it->second *= make_rational(2);
        CHECK(taylor_reconstruct(perturbed) != taylor_reconstruct(e));

        // adding a fresh constant coefficient also separates
        TaylorExpansion extended = e;
        std::vector<int> key(static_cast<size_t>(std::max(e.nvars, 1)), 0);
        key[0] = 7; // beyond any exponent the degree bound allows
        bool fresh = extended.coefficients
                         .emplace(key, Polynomial::scalar(Flavor::Magma, 1))
                         .second;
        CHECK(fresh);
        CHECK(taylor_reconstruct(extended) != taylor_reconstruct(e));
    }
}

TEST_CASE("generalized expansion with the default family is the taylor expansion") {
    OperatorFamily rho = OperatorFamily::right_powers();
    for (Flavor f : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int i = 0; i < 12; ++i) {
            Polynomial p = random_poly(f, 4, 2, 3);
            CHECK(generalized_expand(p, rho) == taylor_expand(p));
        }
    }
}

TEST_CASE("generalized expansion with the Jordan family") {
    OperatorFamily jordan = OperatorFamily::jordan();
    Flavor f = Flavor::Associative;
    // x = (1/2) mu_{11}(1)
    TaylorExpansion ex = generalized_expand(parse("x", f), jordan);
    REQUIRE(ex.coefficients.size() == 1);
    CHECK(ex.coefficients.at({1}) == Polynomial::scalar(f, make_rational(1, 2)));
    // x^2 = (1/4) mu_{12}(1)
    TaylorExpansion ex2 = generalized_expand(parse("(x x)", f), jordan);
    REQUIRE(ex2.coefficients.size() == 1);
    CHECK(ex2.coefficients.at({2}) == Polynomial::scalar(f, make_rational(1, 4)));

    // reconstruction through the family reproduces the input
    for (int i = 0; i < 10; ++i) {
        Polynomial p = random_poly(f, 4, 2, 3);
        TaylorExpansion e = generalized_expand(p, jordan);
        Polynomial back(f);
        for (auto& [a, coeff] : e.coefficients) {
            Polynomial term = coeff;
            for (size_t j = 0; j < a.size(); ++j)
                if (a[j] > 0)
                    term = jordan.op(f, static_cast<int>(j) + 1, a[j]).apply(term);
            back += term;
        }
        CHECK(back == p);
        for (auto& [a, coeff] : e.coefficients) CHECK(is_constant(coeff));
    }
}

TEST_CASE("derivative identity behind the generalized expansion") {
    // d^k (r_0 mu_{1k}) / dx_1^k = k! mu_{1k}(1) r_0 with the scalar counit
    OperatorFamily jordan = OperatorFamily::jordan();
    Flavor f = Flavor::Associative;
    Polynomial commutator = parse("(x1 x2) - (x2 x1)", f);
    for (int k = 1; k <= 4; ++k) {
        for (Polynomial r0 :
             {Polynomial::scalar(f, make_rational(3, 7)), commutator,
              commutator * commutator}) {
            Polynomial lhs = jordan.op(f, 1, k).apply(r0);
            for (int i = 0; i < k; ++i) lhs = partial_derivative(lhs, 1);
            Rational scale =
                Rational(factorial(static_cast<unsigned>(k))) * jordan.counit(f, 1, k);
            CHECK(lhs == r0 * scale);
        }
    }
}

TEST_CASE("expansion coefficients recombine with rho powers") {
    Polynomial r = parse("(x2 (x1 x1)) - 3*(x1 x2)");
    TaylorExpansion e = taylor_expand(r);
    Polynomial sum(r.flavor());
    for (auto& [a, coeff] : e.coefficients) {
        Polynomial term = coeff;
        for (size_t j = 0; j < a.size(); ++j)
            term = rho_power(term, static_cast<int>(j) + 1, a[j]);
        sum += term;
    }
    CHECK(sum == r);
}
