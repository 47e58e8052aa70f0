#pragma once

#include "nalg/linalg.hpp"
#include "nalg/polynomial.hpp"

#include <string>
#include <vector>

namespace nalg {

// Exact basis of the constants (the joint kernel of all formal partial
// derivatives) in one multihomogeneous component. Echelonized against the
// monomial basis in descending order: distinct leading monomials, leading
// coefficient 1.
struct ConstantsBasis {
    Flavor flavor;
    MultiDegree degree;
    std::vector<Polynomial> basis;

    int dimension() const { return static_cast<int>(basis.size()); }
};

// monomials of multidegree d in descending order (leading monomial first)
std::vector<Monomial> component_basis_desc(const MultiDegree& d, Flavor flavor);

// stacked matrix of all partial derivatives on the multidegree-d component;
// columns follow `cols` (descending component basis)
SparseMatrix derivation_matrix(const MultiDegree& d, Flavor flavor,
                               const std::vector<Monomial>& cols);

ConstantsBasis constants_basis(const MultiDegree& d, Flavor flavor);
// dimension only (rank defect); avoids materializing the kernel
int constants_dimension(const MultiDegree& d, Flavor flavor);

// phi(u) = sum (-1)^p u^{(p)} rho^p / p!, a constant attached to the word u;
// vanishes exactly on words of the form v*x. One-variable magma input only.
Polynomial integrated_word(const Monomial& u);

// { phi(u) : u of degree n, u not of the form v*x }; spans the degree-n
// constants of K{x} with c_n - c_{n-1} elements
std::vector<Polynomial> one_var_constant_basis(int n);

// The free-generator census of the constants algebra of K{x}: phi(u) over
// the degree-n words matching one of the five closed forms.
struct GeneratorSet {
    struct Element {
        Monomial source;
        Polynomial value;
        std::vector<std::string> forms;
    };
    int degree = 0;
    std::vector<Element> elements;

    int count() const { return static_cast<int>(elements.size()); }
    std::vector<Polynomial> values() const;
};

GeneratorSet free_generators(int n);

// --- series tables (always exact integer coefficients) --------------------

// c_0..c_N via the convolution c_n = sum c_p c_{n-p}; c_0 = c_1 = 1
std::vector<Integer> catalan_numbers(int N);
// the closed form (1/n) binom(2n-2, n-1), n >= 1
Integer catalan_closed_form(int n);
// coefficients of c(g) = 1 + h, h = g + h^2, for a series g with g_0 = 0
std::vector<Integer> catalan_compose(const std::vector<Integer>& g);
// gamma_n = c_n - c_{n-1}: Hilbert series of the constants of K{x}
std::vector<Integer> gamma_series(int N);
// generating function of the free generators: t^3 + 3 sum_{n>=4}(c_{n-1}-c_{n-2})t^n
std::vector<Integer> generator_series(int N);
// the same series from the closed form -3t^2 + t^3 + 3t(1-t)h(t)
std::vector<Integer> generator_series_closed_form(int N);
// Hilbert series of K{x_1..x_m} by total degree: c(m t)
std::vector<Integer> magma_hilbert(int m, int N);
// Hilbert series of the free commutative non-associative algebra by total
// degree, from H = m t + H^2/2 + H(t^2)/2; index 0 carries the unit
std::vector<Integer> commutative_hilbert(int m, int N);
// coefficient of prod_j (1-t_j) / (1 - sum_j t_j): predicted dimension of the
// associative constants in one multidegree
Integer associative_constants_coefficient(const MultiDegree& d, int m);
// the same series aggregated by total degree: (1-t)^m / (1-mt)
std::vector<Integer> associative_constants_hilbert(int m, int N);

struct SeriesTable {
    std::string name;
    std::vector<Integer> coefficients; // index = degree
};

// name in {catalan, gamma, generators, magmaHilb, commHilb, assocConstHilb};
// m used by the Hilbert tables
SeriesTable series(const std::string& name, int N, int m = 1);

// --- verification reports --------------------------------------------------

struct HilbertProductReport {
    struct Row {
        MultiDegree degree;
        Integer component_dim;  // dim R^{(d)}
        Integer constants_sum;  // sum_{e <= d} dim R_0^{(e)}
        bool pass;
    };
    Flavor flavor;
    int vars;
    int max_degree;
    std::vector<Row> rows;
    bool all_pass;
};

// coefficientwise form of Hilb(R) = prod 1/(1-t_j) * Hilb(R_0)
HilbertProductReport verify_hilbert_product(Flavor flavor, int m, int D);

struct SpanCheckReport {
    struct Row {
        int degree;
        Integer expected_dim;  // gamma_n
        int product_count;     // formal products of generators
        int rank;
        bool pass;
    };
    int max_degree;
    std::vector<Row> rows;
    bool all_pass;
};

// checks that the magma products of the free generators span the constants
// in every degree <= D and stay linearly independent
SpanCheckReport span_check_generators(int D);

} // namespace nalg
