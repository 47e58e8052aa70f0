#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nalg {

// The three built-in algebra laws. Canonical forms:
//   Magma        - planar binary trees, no identifications
//   Commutative  - each internal node has its children in <= order
//   Associative  - flat words (all bracketings of the same word identified)
enum class Flavor { Magma, Commutative, Associative };

const char* to_string(Flavor f);
Flavor flavor_from_string(const std::string& s);

// variable index -> exponent, no zero entries
using MultiDegree = std::map<int, int>;

int total_degree(const MultiDegree& d);
MultiDegree multidegree_add(const MultiDegree& a, const MultiDegree& b);
// componentwise a - b; requires b <= a
MultiDegree multidegree_sub(const MultiDegree& a, const MultiDegree& b);
bool multidegree_leq(const MultiDegree& a, const MultiDegree& b);
// all multidegrees e with e <= d componentwise (including 0 and d)
std::vector<MultiDegree> multidegrees_below(const MultiDegree& d);
// all multidegrees in m variables with given total degree
std::vector<MultiDegree> multidegrees_of_total(int m, int total);

// A canonical monomial of one of the three flavors. Storage is a preorder
// code: positive entries are leaf variable indices, -1 opens an internal
// node (magma/commutative); associative monomials are the bare letter
// sequence. The empty code is the unit 1.
class Monomial {
public:
    static Monomial unit(Flavor f) { return Monomial(f, {}); }
    static Monomial leaf(Flavor f, int var);
    // grafting product of canonical monomials; canonicalizes, absorbs units
    static Monomial node(const Monomial& left, const Monomial& right);
    static Monomial word(Flavor f, const std::vector<int>& letters);

    Flavor flavor() const { return flavor_; }
    const std::vector<int32_t>& code() const { return code_; }

    bool is_unit() const { return code_.empty(); }
    bool is_leaf() const;
    int leaf_var() const; // requires is_leaf()

    int degree() const { return degree_; }
    MultiDegree multidegree() const;
    int degree_in(int var) const;

    // children of the root; requires degree() >= 2 and non-associative flavor
    std::pair<Monomial, Monomial> split() const;
    // letters of an associative word (or leaf sequence of a tree)
    std::vector<int> letters() const;

    // applies var -> rename[var] to every leaf and re-canonicalizes
    Monomial rename_variables(const std::map<int, int>& rename) const;

    bool operator==(const Monomial& o) const {
        return flavor_ == o.flavor_ && code_ == o.code_;
    }
    bool operator!=(const Monomial& o) const { return !(*this == o); }

private:
    Monomial(Flavor f, std::vector<int32_t> code);

    Flavor flavor_;
    std::vector<int32_t> code_;
    int degree_ = 0;

    friend int compare(const Monomial& u, const Monomial& v);
};

// Total order on monomials of one flavor, degree first; equal-degree ties are
// broken on trees by the right factor, then the left factor, and on leaves by
// variable index. Associative words of equal degree compare by their last
// letters first, mirroring the right-factor rule. Returns -1/0/+1.
int compare(const Monomial& u, const Monomial& v);

struct MonomialLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return compare(a, b) < 0;
    }
};

// Reinterprets a magma tree in the given flavor (the raw-tree entry point
// used by the parser). Idempotent per flavor.
Monomial canonicalize(const Monomial& magma_tree, Flavor flavor);

// All canonical monomials of exactly the given multidegree, ascending order.
std::vector<Monomial> enumerate_monomials(const MultiDegree& d, Flavor flavor);

} // namespace nalg
