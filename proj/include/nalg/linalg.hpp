#pragma once

#include "nalg/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace nalg {

// Sparse row vector: (column, value) pairs sorted by column, no zero values.
struct SparseVector {
    std::vector<std::pair<int, Rational>> entries;

    bool is_zero() const { return entries.empty(); }
    int leading_column() const; // throws on zero vector
    Rational at(int col) const;
    void set(int col, const Rational& v);
    // *this -= f * other
    void axpy_sub(const Rational& f, const SparseVector& other);
    void scale(const Rational& f);
    bool operator==(const SparseVector& o) const { return entries == o.entries; }
};

class SparseMatrix {
public:
    SparseMatrix(int rows, int cols) : cols_(cols), rows_(rows) {}

    int rows() const { return static_cast<int>(rows_.size()); }
    int cols() const { return cols_; }

    SparseVector& row(int i) { return rows_[static_cast<size_t>(i)]; }
    const SparseVector& row(int i) const { return rows_[static_cast<size_t>(i)]; }
    void set(int i, int j, const Rational& v) { rows_[static_cast<size_t>(i)].set(j, v); }
    void add(int i, int j, const Rational& v);

    size_t nonzeros() const;

private:
    int cols_;
    std::vector<SparseVector> rows_;
};

// Result of exact Gaussian elimination: the surviving pivot rows, reduced so
// that each pivot column is 1 in its own row and 0 in every other pivot row.
struct EchelonResult {
    std::vector<SparseVector> rows;            // one per pivot
    std::vector<std::pair<int, int>> pivots;   // (column, index into rows)
    int rank() const { return static_cast<int>(pivots.size()); }
};

// Exact elimination over Q with Markowitz-style pivoting (minimizes fill on
// the very sparse derivation matrices). `parallel` switches the row-update
// loops to OpenMP; results are identical either way.
EchelonResult eliminate(SparseMatrix m, bool parallel = true);

// Textbook serial reduction with leftmost-column pivoting. Reference
// implementation used by the tests and the benchmark.
EchelonResult eliminate_reference(SparseMatrix m);

int rank(SparseMatrix m, bool parallel = true);

// Canonical basis of the right kernel {x : M x = 0}: echelonized, leading
// entry 1, ordered by leading column. Independent of the pivot strategy.
std::vector<SparseVector> nullspace(SparseMatrix m, bool parallel = true);
std::vector<SparseVector> nullspace_reference(SparseMatrix m);

// Gauss-Jordan on a list of vectors: returns the canonical reduced basis of
// their span (leftmost leading columns, leading coefficient 1), ordered by
// leading column.
std::vector<SparseVector> reduced_basis(std::vector<SparseVector> vecs);

// Dense exact solve A x = b for square A; throws std::domain_error if A is
// singular. The right-hand side lives in any Q-vector space T that supports
// T -= Rational * T and zero-construction from b.
using DenseMatrix = std::vector<std::vector<Rational>>;

std::vector<Rational> solve_dense(DenseMatrix a, std::vector<Rational> b);

template <typename T>
std::vector<T> solve_dense_vector_rhs(DenseMatrix a, std::vector<T> b, const T& zero) {
    const size_t n = a.size();
    if (b.size() != n) throw std::invalid_argument("solve: size mismatch");
    std::vector<size_t> perm(n);
    for (size_t i = 0; i < n; ++i) perm[i] = i;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[perm[p]][k] == 0) ++p;
        if (p == n) throw std::domain_error("solve: singular system");
        std::swap(perm[k], perm[p]);
        for (size_t i = k + 1; i < n; ++i) {
            Rational f = a[perm[i]][k] / a[perm[k]][k];
            if (f == 0) continue;
            for (size_t j = k; j < n; ++j) a[perm[i]][j] -= f * a[perm[k]][j];
            T t = b[perm[k]];
            t *= f;
            b[perm[i]] -= t;
        }
    }
    std::vector<T> x(n, zero);
    for (size_t k = n; k-- > 0;) {
        T acc = b[perm[k]];
        for (size_t j = k + 1; j < n; ++j) {
            T t = x[j];
            t *= a[perm[k]][j];
            acc -= t;
        }
        acc *= Rational(1) / a[perm[k]][k];
        x[k] = acc;
    }
    return x;
}

} // namespace nalg
