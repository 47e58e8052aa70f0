#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalg/expr.hpp"

#include <random>

using namespace nalg;

namespace {

std::mt19937_64 rng(5150);
int rnd(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Monomial random_tree(int degree, int vars) {
    if (degree == 0) return Monomial::unit(Flavor::Magma);
    if (degree == 1) return Monomial::leaf(Flavor::Magma, rnd(1, vars));
    int s = rnd(1, degree - 1);
    return Monomial::node(random_tree(s, vars), random_tree(degree - s, vars));
}

Polynomial random_poly(Flavor f) {
    Polynomial p(f);
    int terms = rnd(1, 5);
    for (int t = 0; t < terms; ++t) {
        Rational c = make_rational(rnd(-9, 9), rnd(1, 5));
        if (c == 0) c = 1;
        p.add_term(canonicalize(random_tree(rnd(0, 5), 3), f), c);
    }
    return p;
}

} // namespace

TEST_CASE("parsing the grammar") {
    CHECK(to_string(parse_polynomial("(x (x x))", Flavor::Magma)) == "(x (x x))");
    CHECK(to_string(parse_polynomial("x2", Flavor::Magma)) == "x2");
    CHECK(to_string(parse_polynomial("3*(x x)", Flavor::Magma)) == "3*(x x)");
    CHECK(to_string(parse_polynomial("3 (x x)", Flavor::Magma)) == "3*(x x)");
    CHECK(to_string(parse_polynomial("1/2 x - 3", Flavor::Magma)) == "-3 + 1/2*x");
    CHECK(to_string(parse_polynomial("-x + x", Flavor::Magma)) == "0");
    CHECK(to_string(parse_polynomial("7", Flavor::Magma)) == "7");
    // flavors canonicalize while parsing
    CHECK(to_string(parse_polynomial("(x2 x1)", Flavor::Commutative)) == "(x x2)");
    CHECK(to_string(parse_polynomial("((x1 x2) x3)", Flavor::Associative)) ==
          to_string(parse_polynomial("(x1 (x2 x3))", Flavor::Associative)));
}

TEST_CASE("parse errors carry a column") {
    auto column_of = [](const std::string& text) -> size_t {
        try {
            parse_polynomial(text, Flavor::Magma);
        } catch (const ParseError& e) {
            return e.column;
        }
        return 0;
    };
    CHECK(column_of("((x1)") > 0);
    CHECK(column_of("(x1 x2") == 1);  // the unmatched opener
    CHECK(column_of("(x1") > 0);
    CHECK(column_of("x +") > 0);
    CHECK(column_of("3*") > 0);
    CHECK(column_of("x x") == 3);     // trailing input
    CHECK(column_of("y") == 1);
    CHECK(column_of("") > 0);
}

TEST_CASE("print-parse round trip on random polynomials") {
    for (Flavor f : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int i = 0; i < 120; ++i) {
            Polynomial p = random_poly(f);
            CHECK(parse_polynomial(to_string(p), f) == p);
        }
    }
}

TEST_CASE("json round trip mirrors the text form") {
    for (Flavor f : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int i = 0; i < 60; ++i) {
            Polynomial p = random_poly(f);
            json j = polynomial_to_json(p);
            CHECK(polynomial_from_json(j) == p);
            CHECK(j.at("flavor").get<std::string>() == to_string(f));
        }
    }
    // encoding shapes: leaf, node, unit, word
    CHECK(monomial_to_json(Monomial::leaf(Flavor::Magma, 3)) == json(3));
    CHECK(monomial_to_json(Monomial::unit(Flavor::Magma)) == json::array());
    Monomial node = Monomial::node(Monomial::leaf(Flavor::Magma, 1),
                                   Monomial::leaf(Flavor::Magma, 2));
    CHECK(monomial_to_json(node) == json::array({1, 2}));
    CHECK(monomial_to_json(Monomial::word(Flavor::Associative, {1, 2, 1})) ==
          json::array({1, 2, 1}));
}
