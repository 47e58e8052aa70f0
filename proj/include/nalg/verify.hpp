#pragma once

#include <string>
#include <vector>

namespace nalg {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string expected;
    std::string computed;
};

// The bundled verification checks. Each one pins its thresholds in code and
// reports expected vs computed values; failures are report content, never
// crashes.
CheckResult check_constants_dimensions();   // kernel dims vs catalan table, n <= 10
CheckResult check_taylor_roundtrip();       // 500 random round trips, all flavors
CheckResult check_decomposition_tables();   // the Young-diagram tables, both methods
CheckResult check_free_generators();        // |Y_n| = g_n, spans through degree 6
CheckResult check_hilbert_product();        // product identity, all flavors, m <= 2
CheckResult check_commutative_series();     // recursion vs enumeration, degree <= 8
CheckResult check_associative_constants();  // dims vs prod(1-t_j)/(1-sum t_j)
CheckResult check_ode_suite();              // residuals, uniqueness, both paths
CheckResult check_exponential();            // E' = E, E(0) = 1, EE = E(2x)
CheckResult check_characters();             // orthogonality, regular, trivial part

std::vector<CheckResult> verify_suite(const std::string& suite); // hilbert|decompositions|ode|exp|all
std::vector<CheckResult> acceptance_criteria();                  // all ten, in order

} // namespace nalg
