#pragma once

#include "nalg/polynomial.hpp"
#include "nalg/rational.hpp"

#include <map>
#include <vector>

namespace nalg {

// weakly decreasing positive parts; the empty partition has weight 0
using Partition = std::vector<int>;

int partition_weight(const Partition& p);
// all partitions of n in lexicographically decreasing order, [n] first
std::vector<Partition> partitions(int n);
std::string partition_to_string(const Partition& p);

// size of the conjugacy class with the given cycle type: n! / prod i^{m_i} m_i!
Integer class_size(const Partition& cycle_type);
// a representative permutation (1-indexed images) with the given cycle type
std::vector<int> permutation_from_cycle_type(const Partition& cycle_type);

// irreducible character value chi_lambda(mu), Murnaghan-Nakayama
Integer mn_character(const Partition& lambda, const Partition& mu);
Integer irrep_dimension(const Partition& lambda);

// class function on S_n: cycle type -> value
struct ClassFunction {
    int weight = 0;
    std::map<Partition, Rational> values;

    Rational at(const Partition& mu) const;
};

ClassFunction irreducible_character(const Partition& lambda);
Rational inner_product(const ClassFunction& a, const ClassFunction& b);

// isotypic multiplicities of an S_n-module
struct Decomposition {
    int weight = 0;
    std::map<Partition, int> multiplicities;

    Integer dimension() const; // sum mult * dim
    bool operator==(const Decomposition& o) const {
        return weight == o.weight && multiplicities == o.multiplicities;
    }
};

// multiplicities <chi, chi_lambda>; throws if any comes out negative or
// non-integral (i.e. chi is not the character of a representation)
Decomposition decompose(const ClassFunction& chi);

// Young's rule: tensor with the one-row diagram of size r = add horizontal
// r-strips to every constituent
Decomposition pieri_row(const Decomposition& d, int r);

// character of variable permutation acting on the span of `basis` inside the
// multilinear component in x_1..x_k; throws if the span is not stable
ClassFunction action_character(const std::vector<Polynomial>& basis, int k);

// decomposition of the full multilinear component R^{(k)}: c_k copies of the
// regular representation for the magma flavor, one copy for the associative
// flavor, a fixed-monomial count for the commutative flavor
Decomposition component_decomposition(int k, Flavor flavor);

enum class DecompMethod { Kernel, Recursion };

// decomposition of the multilinear constants C^{(k)}: either the traced
// action on the computed kernel, or peeling horizontal strips off the full
// component; the two must agree
Decomposition constants_decomposition(int k, Flavor flavor, DecompMethod method);

} // namespace nalg
