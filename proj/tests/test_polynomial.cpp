#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalg/expr.hpp"
#include "nalg/operators.hpp"
#include "nalg/polynomial.hpp"

#include <random>

using namespace nalg;

namespace {

Polynomial parse(const std::string& s, Flavor f = Flavor::Magma) {
    return parse_polynomial(s, f);
}

// leaf-removal oracle: the derivative of a monomial is the sum over all
// occurrences of x_var of the tree with that leaf deleted
Polynomial derivative_oracle(const Monomial& u, int var) {
    Polynomial out(u.flavor());
    std::vector<int> w = u.letters();
    for (size_t i = 0; i < w.size(); ++i) {
        if (w[i] != var) continue;
        // rebuild the tree skipping leaf i
        size_t seen = 0;
        auto rec = [&](auto&& self, const Monomial& m) -> Monomial {
            if (m.is_leaf()) {
                size_t mine = seen++;
                return mine == i ? Monomial::unit(m.flavor()) : m;
            }
            if (m.is_unit()) return m;
            auto [l, r] = m.split();
            Monomial left = self(self, l); // sequenced: seen counts left first
            Monomial right = self(self, r);
            return Monomial::node(left, right);
        };
        out.add_term(rec(rec, u), 1);
    }
    return out;
}

std::mt19937_64 rng(987654);

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
        p.add_term(canonicalize(random_tree(rnd(0, maxdeg), vars), f),
                   c == 0 ? 1 : c);
    }
    return p;
}

} // namespace

TEST_CASE("multiplication basics") {
    CHECK(to_string(parse("x") * parse("x")) == "(x x)");
    CHECK(parse("x1 + x2") * parse("x1") == parse("(x1 x1) + (x2 x1)"));
    // unit laws
    Polynomial one = Polynomial::scalar(Flavor::Magma, 1);
    Polynomial p = parse("3*(x (x x)) - 2*x");
    CHECK(one * p == p);
    CHECK(p * one == p);
    // commutative canonical form
    CHECK(to_string(parse("x2", Flavor::Commutative) * parse("x1", Flavor::Commutative)) ==
          "(x x2)");
    CHECK_THROWS_AS(multiply(parse("x"), parse("x", Flavor::Associative)),
                    std::invalid_argument);
}

TEST_CASE("partial derivative matches the leaf-removal oracle") {
    CHECK(partial_derivative(parse("x1"), 1) == Polynomial::scalar(Flavor::Magma, 1));
    CHECK(partial_derivative(parse("x1"), 2).is_zero());
    CHECK(partial_derivative(parse("(x (x x))"), 1) == parse("3*(x x)"));
    // the commutator is a constant
    CHECK(partial_derivative(parse("(x1 x2) - (x2 x1)"), 1).is_zero());
    CHECK(partial_derivative(parse("(x1 x2) - (x2 x1)"), 2).is_zero());

    for (int i = 0; i < 300; ++i) {
        Monomial u = random_tree(rnd(1, 6), 3);
        int var = rnd(1, 3);
        CHECK(partial_derivative(u, var) == derivative_oracle(u, var));
    }
}

TEST_CASE("Leibniz rule and commuting derivatives on random polynomials") {
    for (Flavor flavor : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int i = 0; i < 40; ++i) {
            Polynomial f = random_poly(flavor, 5, 3, 3);
            Polynomial g = random_poly(flavor, 5, 3, 3);
            int k = rnd(1, 3);
            CHECK(partial_derivative(f * g, k) ==
                  partial_derivative(f, k) * g + f * partial_derivative(g, k));
            int l = rnd(1, 3);
            CHECK(partial_derivative(partial_derivative(f, k), l) ==
                  partial_derivative(partial_derivative(f, l), k));
        }
    }
}

TEST_CASE("derivative of a degree-n word has total coefficient n") {
    for (int i = 0; i < 100; ++i) {
        int deg = rnd(1, 7);
        Monomial u = random_tree(deg, 1);
        CHECK(partial_derivative(u, 1).augmentation() == deg);
    }
}

TEST_CASE("leading terms") {
    auto lt = [](const std::string& s) { return leading_term(parse(s)); };
    CHECK(to_string(lt("x + (x (x x))").first) == "(x (x x))");
    CHECK(lt("x + (x (x x))").second == 1);
    CHECK(to_string(lt("3*(x x) - x").first) == "(x x)");
    CHECK(lt("3*(x x) - x").second == 3);
    CHECK_THROWS_AS(leading_term(Polynomial::zero(Flavor::Magma)), std::domain_error);

    // lt((x + x^2) x) = lt(x + x^2) lt(x)
    Polynomial f = parse("x + (x x)");
    Polynomial g = parse("x");
    auto [m, c] = leading_term(f * g);
    CHECK(m == Monomial::node(leading_term(f).first, leading_term(g).first));
    CHECK(c == leading_term(f).second * leading_term(g).second);

    // multiplicativity on random nonzero magma polynomials
    for (int i = 0; i < 100; ++i) {
        Polynomial a = random_poly(Flavor::Magma, 4, 2, 3);
        Polynomial b = random_poly(Flavor::Magma, 4, 2, 3);
        if (a.is_zero() || b.is_zero()) continue;
        auto [am, ac] = leading_term(a);
        auto [bm, bc] = leading_term(b);
        auto [pm, pc] = leading_term(a * b);
        CHECK(pm == Monomial::node(am, bm));
        CHECK(pc == ac * bc);
    }
}

TEST_CASE("multiplication operators") {
    Polynomial x = parse("x");
    CHECK(MultiplicationOperator::right(x).apply(x) == parse("(x x)"));
    CHECK(MultiplicationOperator::left(x).apply(parse("(x x)")) == parse("(x (x x))"));
    // rho_x^3 on 1 is the left-normed cube
    Polynomial one = Polynomial::scalar(Flavor::Magma, 1);
    CHECK(MultiplicationOperator::right_power(x, 3).apply(one) == parse("((x x) x)"));
    CHECK(MultiplicationOperator::identity().apply(x) == x);
    // linearity in the argument
    Polynomial p = parse("x + 2*(x x)");
    auto rho = MultiplicationOperator::right(x);
    CHECK(rho.apply(p) == rho.apply(parse("x")) + rho.apply(parse("2*(x x)")));
}

TEST_CASE("operator sums compose and expand") {
    Polynomial x = parse("x", Flavor::Associative);
    OperatorSum jordan = OperatorSum::left(x) + OperatorSum::right(x);
    Polynomial one = Polynomial::scalar(Flavor::Associative, 1);
    CHECK(jordan.apply(one) == parse("2*x", Flavor::Associative));
    CHECK(jordan.pow(2).apply(one) == parse("4*(x x)", Flavor::Associative));
    OperatorFamily fam = OperatorFamily::jordan();
    CHECK(fam.counit(Flavor::Associative, 1, 3) == 8);
    CHECK(fam.one_image(Flavor::Associative, 1, 2) ==
          parse("4*(x x)", Flavor::Associative));
    // lambda^3 - rho^3 has nonzero image of 1 in the magma but zero counit
    OperatorFamily bad("bad", [](Flavor f, int var, int k) {
        Polynomial xv = Polynomial::variable(f, var);
        OperatorSum l = OperatorSum::left(xv).pow(k);
        OperatorSum r = OperatorSum::right(xv).pow(k);
        r *= Rational(-1);
        return l + r;
    });
    CHECK(bad.counit(Flavor::Magma, 1, 3) == 0);
    CHECK(!bad.one_image(Flavor::Magma, 1, 3).is_zero());
    CHECK_THROWS_AS(bad.validate(Flavor::Magma, 1, 3), std::invalid_argument);
}

TEST_CASE("component extraction") {
    Polynomial p = parse("(x1 x2) + 2*(x1 x1) - x2");
    auto comps = p.multihomogeneous_components();
    CHECK(comps.size() == 3);
    CHECK(p.component(MultiDegree{{1, 1}, {2, 1}}) == parse("(x1 x2)"));
    CHECK(p.homogeneous_component(2) == parse("(x1 x2) + 2*(x1 x1)"));
    CHECK(p.augmentation() == 2);
    CHECK(p.max_variable() == 2);
}
