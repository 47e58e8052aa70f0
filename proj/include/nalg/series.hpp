#pragma once

#include "nalg/polynomial.hpp"
#include "nalg/rational.hpp"

#include <vector>

namespace nalg {

// Truncated formal power series in the completion of a one-variable algebra:
// homogeneous components h_0..h_N in the single variable x; arithmetic
// discards everything above degree N.
class TruncatedElement {
public:
    TruncatedElement(Flavor f, int order);

    static TruncatedElement zero(Flavor f, int order) { return {f, order}; }
    static TruncatedElement scalar(Flavor f, int order, const Rational& c);
    // embeds a polynomial, dropping degrees above `order`
    static TruncatedElement from_polynomial(const Polynomial& p, int order);

    Flavor flavor() const { return flavor_; }
    int order() const { return order_; }

    const Polynomial& component(int n) const;
    void set_component(int n, Polynomial p);

    bool is_zero() const;
    bool is_zero_through(int degree) const;
    // true iff every component is a constant (an element of R_0-hat)
    bool is_constant_series() const;

    TruncatedElement& operator+=(const TruncatedElement& o);
    TruncatedElement& operator-=(const TruncatedElement& o);
    TruncatedElement& operator*=(const Rational& c);
    friend TruncatedElement operator+(TruncatedElement a, const TruncatedElement& b) { return a += b; }
    friend TruncatedElement operator-(TruncatedElement a, const TruncatedElement& b) { return a -= b; }
    friend TruncatedElement operator*(TruncatedElement a, const Rational& c) { return a *= c; }
    // bidegree convolution, truncated at the common order
    friend TruncatedElement multiply(const TruncatedElement& a, const TruncatedElement& b);
    friend TruncatedElement operator*(const TruncatedElement& a, const TruncatedElement& b) {
        return multiply(a, b);
    }
    bool operator==(const TruncatedElement& o) const;

    // x -> alpha x: multiplies component n by alpha^n
    TruncatedElement scale_substitute(const Rational& alpha) const;
    // d/dx; the result is of order N-1
    TruncatedElement derivative() const;
    // right multiplication by x^k (left-normed); keeps the order, degrees
    // above it fall away
    TruncatedElement right_mul_x(int k) const;
    TruncatedElement truncate(int order) const;

private:
    Flavor flavor_;
    int order_;
    std::vector<Polynomial> comp_;
};

// y = sum_k c_k rho^k / k! with constant-series coefficients (the
// divided-power convention); coefficient c_k is truncated at degree N-k.
class TaylorSeries {
public:
    TaylorSeries(Flavor f, int order);

    Flavor flavor() const { return flavor_; }
    int order() const { return order_; }

    const TruncatedElement& coefficient(int k) const;
    void set_coefficient(int k, TruncatedElement c);

    // the element sum_k c_k rho^k / k! of the completion
    TruncatedElement materialize() const;

    bool operator==(const TaylorSeries& o) const;

private:
    Flavor flavor_;
    int order_;
    std::vector<TruncatedElement> c_;
};

// divided-power coefficients of f: c_k = k! * (expansion coefficient at
// rho^k), extracted per homogeneous component
TaylorSeries to_taylor_series(const TruncatedElement& f);

// y^(n) + a_1 y^(n-1) + ... + a_n y = f with constant initial data
struct LinearODE {
    int order;                        // n >= 1
    std::vector<Rational> a;          // a_1..a_n
    TruncatedElement rhs;             // f
    std::vector<TruncatedElement> initial; // c_0..c_{n-1}, constant series
};

// the unique solution with the prescribed first n coefficients, filled by
// the recursion c_{j+n} + a_1 c_{j+n-1} + ... + a_n c_j = f_j
TaylorSeries solve_linear_ode(const LinearODE& ode, int N);

// y^(n) + a_1 y^(n-1) + ... + a_n y - f, materialized; exact through
// degree N - n
TruncatedElement ode_residual(const LinearODE& ode, const TruncatedElement& y);

// exp(lambda rho) = sum lambda^k rho^k / k!, as an operator series
struct ExpRho {
    Rational lambda;

    Rational coefficient(int k) const; // lambda^k / k!
    // c exp(lambda rho) for a constant series c
    TaylorSeries apply(const TruncatedElement& c) const;
};

// pairwise distinct rational roots with multiplicities
struct RootData {
    std::vector<std::pair<Rational, int>> roots;

    int total_multiplicity() const;
};

// checks that each root has exactly the declared multiplicity in
// t^n + a_1 t^{n-1} + ... + a_n (exact polynomial division); throws otherwise
void validate_roots(const RootData& roots, const std::vector<Rational>& a);

// y = sum_i (c_{i0} + c_{i1} rho + ... + c_{i,k_i-1} rho^{k_i-1}) exp(lambda_i rho)
TaylorSeries homogeneous_general_solution(const RootData& roots,
                                          const std::vector<Rational>& a,
                                          const std::vector<std::vector<TruncatedElement>>& c,
                                          int N);

// solves the n x n linear system matching prescribed initial coefficients
// c_0..c_{n-1}; the matrix is invertible for valid root data
std::vector<std::vector<TruncatedElement>>
fit_initial_constants(const RootData& roots, const std::vector<TruncatedElement>& initial,
                      int N);

// E(x) with E' = E, E(0) = 1, E(x)E(x) = E(2x) in the completed free magma
// algebra; component recursion e_n = (2^n - 2)^{-1} sum_{p+q=n} e_p e_q
TruncatedElement nonassoc_exponential(int N);

} // namespace nalg
