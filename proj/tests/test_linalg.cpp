#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalg/constants.hpp"
#include "nalg/linalg.hpp"

#include <random>

using namespace nalg;

namespace {

SparseMatrix random_matrix(int rows, int cols, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-5, 5);
    SparseMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (coin(rng) < density) {
                int v = val(rng);
                if (v == 0) v = 1;
                m.set(i, j, Rational(v));
            }
    return m;
}

Rational dot_row(const SparseVector& row, const SparseVector& x) {
    Rational s = 0;
    for (auto& [j, v] : row.entries) s += v * x.at(j);
    return s;
}

} // namespace

TEST_CASE("sparse vector arithmetic") {
    SparseVector a, b;
    a.set(0, 2);
    a.set(3, -1);
    b.set(0, 1);
    b.set(1, 4);
    a.axpy_sub(Rational(2), b); // a - 2b
    CHECK(a.at(0) == 0);
    CHECK(a.at(1) == -8);
    CHECK(a.at(3) == -1);
    CHECK(a.entries.size() == 2); // exact cancellation drops the entry
    a.scale(make_rational(-1, 2));
    CHECK(a.at(1) == 4);
}

TEST_CASE("markowitz, serial and reference elimination agree") {
    for (uint64_t seed = 1; seed <= 6; ++seed) {
        SparseMatrix m = random_matrix(30, 50, 0.12, seed);
        int r_omp = rank(m, true);
        int r_serial = rank(m, false);
        int r_ref = eliminate_reference(m).rank();
        CHECK(r_omp == r_serial);
        CHECK(r_serial == r_ref);

        auto k_fast = nullspace(m, true);
        auto k_serial = nullspace(m, false);
        auto k_ref = nullspace_reference(m);
        CHECK(k_fast.size() == k_ref.size());
        CHECK(k_fast == k_serial);
        CHECK(k_fast == k_ref); // canonical reduced basis is pivot-order free
        for (auto& basis : {k_fast, k_ref})
            for (auto& v : basis)
                for (int i = 0; i < m.rows(); ++i)
                    CHECK(dot_row(m.row(i), v) == 0);
        CHECK(static_cast<int>(k_fast.size()) + r_ref == m.cols());
    }
}

TEST_CASE("elimination handles dependent rows and zero matrices") {
    SparseMatrix zero(4, 5);
    CHECK(rank(zero) == 0);
    CHECK(nullspace(zero).size() == 5);

    SparseMatrix m(3, 3);
    m.set(0, 0, 1);
    m.set(0, 1, 2);
    m.set(1, 0, 2);
    m.set(1, 1, 4); // row 1 = 2 * row 0
    m.set(2, 2, 1);
    CHECK(rank(m) == 2);
    auto k = nullspace(m);
    REQUIRE(k.size() == 1);
    CHECK(k[0].at(0) * 1 + k[0].at(1) * 2 == 0);
}

TEST_CASE("nullspace of a derivation matrix agrees with the reference path") {
    MultiDegree d{{1, 6}};
    std::vector<Monomial> cols = component_basis_desc(d, Flavor::Magma);
    SparseMatrix m = derivation_matrix(d, Flavor::Magma, cols);
    auto fast = nullspace(m, true);
    auto ref = nullspace_reference(m);
    CHECK(fast == ref);
    CHECK(fast.size() == 42 - 14); // c_6 - c_5
}

TEST_CASE("reduced basis is canonical and reduced") {
    std::vector<SparseVector> vecs(3);
    vecs[0].set(1, 2);
    vecs[0].set(2, 2);
    vecs[1].set(1, 1);
    vecs[1].set(3, 5);
    vecs[2].set(2, 1);
    vecs[2].set(3, -5); // dependent on the first two
    auto basis = reduced_basis(vecs);
    REQUIRE(basis.size() == 2);
    CHECK(basis[0].leading_column() == 1);
    CHECK(basis[1].leading_column() == 2);
    for (auto& b : basis) CHECK(b.entries.front().second == 1);
    // no basis vector touches another's leading column
    CHECK(basis[0].at(2) == 0);
    CHECK(basis[1].at(1) == 0);
}

TEST_CASE("dense solve") {
    DenseMatrix a = {{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    std::vector<Rational> b = {Rational(5), Rational(10)};
    auto x = solve_dense(a, b);
    CHECK(x[0] == 1);
    CHECK(x[1] == 3);
    DenseMatrix sing = {{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_THROWS_AS(solve_dense(sing, b), std::domain_error);
}
