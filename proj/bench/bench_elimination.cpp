// Times the exact elimination kernels on the matrices this project actually
// produces: stacked derivation matrices of K{x} components and random sparse
// rational matrices. Compares the OpenMP row-update path against the serial
// path and the reference implementation.

#include "nalg/constants.hpp"
#include "nalg/linalg.hpp"

#include <chrono>
#include <cstdio>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace nalg;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

SparseMatrix derivation_matrix_of_degree(int n) {
    MultiDegree d{{1, n}};
    std::vector<Monomial> cols = component_basis_desc(d, Flavor::Magma);
    return derivation_matrix(d, Flavor::Magma, cols);
}

SparseMatrix random_matrix(int rows, int cols, double density, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::uniform_int_distribution<int> val(-9, 9);
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

void bench_case(const char* name, const SparseMatrix& m, bool run_reference) {
    auto t0 = std::chrono::steady_clock::now();
    int r_par = rank(m, true);
    double t_par = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    int r_ser = rank(m, false);
    double t_ser = ms_since(t0);

    double t_ref = -1;
    int r_ref = r_ser;
    if (run_reference) {
        t0 = std::chrono::steady_clock::now();
        r_ref = eliminate_reference(m).rank();
        t_ref = ms_since(t0);
    }

    std::printf("%-28s %5dx%-5d nnz %-7zu rank %-5d omp %9.2f ms  serial %9.2f ms",
                name, m.rows(), m.cols(), m.nonzeros(), r_par, t_par, t_ser);
    if (run_reference)
        std::printf("  reference %9.2f ms", t_ref);
    std::printf("%s\n", (r_par == r_ser && r_ser == r_ref) ? "" : "  RANK MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled\n");
#endif
    for (int n = 7; n <= 10; ++n) {
        char name[64];
        std::snprintf(name, sizeof(name), "derivation K{x} degree %d", n);
        bench_case(name, derivation_matrix_of_degree(n), n <= 8);
    }
    bench_case("random 200x400 d=0.05", random_matrix(200, 400, 0.05, 1), true);
    bench_case("random 400x600 d=0.02", random_matrix(400, 600, 0.02, 2), false);
    return 0;
}
