#pragma once

#include "nalg/monomial.hpp"
#include "nalg/rational.hpp"

#include <map>
#include <vector>

namespace nalg {

class Polynomial;
Polynomial multiply(const Polynomial& p, const Polynomial& q);

// Finite Q-linear combination of canonical monomials of one flavor. Zero
// coefficients are never stored; equality is equality of the term maps.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational, MonomialLess>;

    explicit Polynomial(Flavor f) : flavor_(f) {}

    static Polynomial zero(Flavor f) { return Polynomial(f); }
    static Polynomial scalar(Flavor f, const Rational& c);
    static Polynomial variable(Flavor f, int var);
    static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);

    Flavor flavor() const { return flavor_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    // degree-0 element of the base field (includes 0)
    bool is_scalar() const;
    int degree() const; // max total degree, -1 for the zero polynomial
    Rational coefficient(const Monomial& m) const;
    // sum of all coefficients (the counit)
    Rational augmentation() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Rational& c);
    Polynomial operator-() const;

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
    friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        return multiply(a, b);
    }

    bool operator==(const Polynomial& o) const {
        return flavor_ == o.flavor_ && terms_ == o.terms_;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    // set of variables occurring, and the largest index (0 if none)
    std::vector<int> variables() const;
    int max_variable() const;

    std::map<MultiDegree, Polynomial> multihomogeneous_components() const;
    Polynomial component(const MultiDegree& d) const;
    // part of the given total degree
    Polynomial homogeneous_component(int n) const;

private:
    Flavor flavor_;
    TermMap terms_;
};

// formal partial derivative: the derivation with x_l -> delta_{kl}
Polynomial partial_derivative(const Polynomial& p, int var);
Polynomial partial_derivative(const Monomial& u, int var);

// true iff every formal partial derivative of p vanishes
bool is_constant(const Polynomial& p);

// the <=-maximal monomial with its coefficient; throws on zero
std::pair<Monomial, Rational> leading_term(const Polynomial& p);

// applies var -> rename[var] to all monomials and re-canonicalizes
Polynomial rename_variables(const Polynomial& p, const std::map<int, int>& rename);

} // namespace nalg
