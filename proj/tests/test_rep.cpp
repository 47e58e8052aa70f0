#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nalg/constants.hpp"
#include "nalg/expr.hpp"
#include "nalg/rep.hpp"

using namespace nalg;

namespace {

// hook length formula, an independent route to the dimension
Integer hook_dimension(const Partition& lambda) {
    int n = partition_weight(lambda);
    std::vector<int> conj(static_cast<size_t>(lambda.empty() ? 0 : lambda[0]), 0);
    for (int part : lambda)
        for (int j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
    Integer hooks = 1;
    for (size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int arm = lambda[i] - j - 1;
            int leg = conj[static_cast<size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    return factorial(static_cast<unsigned>(n)) / hooks;
}

Decomposition dec(int weight, std::vector<std::pair<Partition, int>> mults) {
    Decomposition d;
    d.weight = weight;
    for (auto& [p, m] : mults) d.multiplicities[p] = m;
    return d;
}

} // namespace

TEST_CASE("partitions enumeration") {
    CHECK(partitions(0) == std::vector<Partition>{{}});
    CHECK(partitions(4) == std::vector<Partition>{
                               {4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions(7).size() == 15);
    Integer total = 0;
    for (auto& mu : partitions(6)) total += class_size(mu);
    CHECK(total == factorial(6)); // class sizes exhaust S_6
    CHECK(class_size({2, 1}) == 3);
    CHECK(class_size({3}) == 2);
}

TEST_CASE("murnaghan-nakayama values") {
    // trivial and sign representations
    for (int n = 1; n <= 6; ++n) {
        Partition triv(1, n);
        Partition sign(static_cast<size_t>(n), 1);
        for (auto& mu : partitions(n)) {
            CHECK(mn_character(triv, mu) == 1);
            int even_cycles = 0;
            for (int c : mu)
                if (c % 2 == 0) ++even_cycles;
            CHECK(mn_character(sign, mu) == (even_cycles % 2 ? -1 : 1));
        }
    }
    // the standard representation of S_3 on classes (1^3), (2,1), (3)
    CHECK(mn_character({2, 1}, {1, 1, 1}) == 2);
    CHECK(mn_character({2, 1}, {2, 1}) == 0);
    CHECK(mn_character({2, 1}, {3}) == -1);
    CHECK_THROWS_AS(mn_character({2, 1}, {2, 2}), std::invalid_argument);

    // dimensions agree with the hook length formula
    for (int n = 1; n <= 8; ++n)
        for (auto& lambda : partitions(n))
            CHECK(irrep_dimension(lambda) == hook_dimension(lambda));
}

TEST_CASE("character orthogonality") {
    for (int n = 1; n <= 7; ++n) {
        auto ps = partitions(n);
        std::vector<ClassFunction> chars;
        for (auto& p : ps) chars.push_back(irreducible_character(p));
        for (size_t i = 0; i < ps.size(); ++i)
            for (size_t j = 0; j < ps.size(); ++j)
                CHECK(inner_product(chars[i], chars[j]) == (i == j ? 1 : 0));
    }
    // column orthogonality: sum_l chi_l(mu) chi_l(nu) = delta * n!/|class mu|
    for (int n = 1; n <= 6; ++n) {
        auto ps = partitions(n);
        for (auto& mu : ps)
            for (auto& nu : ps) {
                Integer sum = 0;
                for (auto& lambda : ps)
                    sum += mn_character(lambda, mu) * mn_character(lambda, nu);
                Integer expect =
                    mu == nu ? factorial(static_cast<unsigned>(n)) / class_size(mu)
                             : Integer(0);
                CHECK(sum == expect);
            }
    }
}

TEST_CASE("decompose recognizes the regular representation") {
    ClassFunction reg;
    reg.weight = 4;
    for (auto& mu : partitions(4))
        reg.values[mu] = static_cast<int>(mu.size()) == 4 ? Rational(24) : Rational(0);
    Decomposition d = decompose(reg);
    for (auto& lambda : partitions(4))
        CHECK(Integer(d.multiplicities.at(lambda)) == irrep_dimension(lambda));
    CHECK(d.dimension() == 24);

    ClassFunction bogus;
    bogus.weight = 2;
    bogus.values[{1, 1}] = 1;
    bogus.values[{2}] = make_rational(1, 2);
    CHECK_THROWS_AS(decompose(bogus), std::invalid_argument);
}

TEST_CASE("pieri rule") {
    Decomposition d = dec(2, {{{1, 1}, 1}});
    CHECK(pieri_row(d, 1) == dec(3, {{{2, 1}, 1}, {{1, 1, 1}, 1}}));
    CHECK(pieri_row(d, 2) == dec(4, {{{3, 1}, 1}, {{2, 1, 1}, 1}}));
    CHECK(pieri_row(d, 0) == d);
    // induced dimension bookkeeping: dim ind = dim * binom(n+r, r)
    for (auto& lambda : partitions(4)) {
        Decomposition base = dec(4, {{lambda, 1}});
        for (int r = 1; r <= 3; ++r) {
            Integer expect = irrep_dimension(lambda) *
                             binomial(static_cast<unsigned>(4 + r), static_cast<unsigned>(r));
            CHECK(pieri_row(base, r).dimension() == expect);
        }
    }
}

TEST_CASE("action characters of the worked examples") {
    // full multilinear magma component at k = 3: c_3 copies of the regular
    std::vector<Polynomial> monomials;
    for (auto& m : enumerate_monomials(MultiDegree{{1, 1}, {2, 1}, {3, 1}}, Flavor::Magma))
        monomials.push_back(Polynomial::from_monomial(m));
    ClassFunction chi = action_character(monomials, 3);
    CHECK(chi.at({1, 1, 1}) == 12);
    CHECK(chi.at({2, 1}) == 0);
    CHECK(chi.at({3}) == 0);

    // the commutator spans the sign representation of S_2
    std::vector<Polynomial> comm = {
        parse_polynomial("(x1 x2) - (x2 x1)", Flavor::Magma)};
    ClassFunction sign = action_character(comm, 2);
    CHECK(sign.at({1, 1}) == 1);
    CHECK(sign.at({2}) == -1);

    // the symmetric element of the commutative flavor carries the trivial one
    std::vector<Polynomial> sym = {
        parse_polynomial("(x1 x2)", Flavor::Commutative)};
    ClassFunction triv = action_character(sym, 2);
    CHECK(triv.at({1, 1}) == 1);
    CHECK(triv.at({2}) == 1);

    // an unstable span is detected
    std::vector<Polynomial> unstable = {
        parse_polynomial("(x1 x2)", Flavor::Magma)};
    CHECK_THROWS_AS(action_character(unstable, 2), std::invalid_argument);
}

TEST_CASE("component decompositions") {
    CHECK(component_decomposition(3, Flavor::Magma) ==
          dec(3, {{{3}, 2}, {{2, 1}, 4}, {{1, 1, 1}, 2}}));
    CHECK(component_decomposition(3, Flavor::Associative) ==
          dec(3, {{{3}, 1}, {{2, 1}, 2}, {{1, 1, 1}, 1}}));
    CHECK(component_decomposition(4, Flavor::Commutative) ==
          dec(4, {{{4}, 2}, {{3, 1}, 2}, {{2, 2}, 2}, {{2, 1, 1}, 1}}));
    CHECK(component_decomposition(1, Flavor::Magma) == dec(1, {{{1}, 1}}));
    CHECK(component_decomposition(0, Flavor::Commutative) == dec(0, {{{}, 1}}));
    // dimension audit against the multilinear census
    for (Flavor f : {Flavor::Magma, Flavor::Commutative, Flavor::Associative}) {
        for (int k = 1; k <= 4; ++k) {
            MultiDegree d;
            for (int v = 1; v <= k; ++v) d[v] = 1;
            CHECK(component_decomposition(k, f).dimension() ==
                  Integer(enumerate_monomials(d, f).size()));
        }
    }
}

TEST_CASE("constants decompositions reproduce the tables") {
    CHECK(constants_decomposition(2, Flavor::Magma, DecompMethod::Kernel) ==
          dec(2, {{{1, 1}, 1}}));
    CHECK(constants_decomposition(3, Flavor::Magma, DecompMethod::Kernel) ==
          dec(3, {{{3}, 1}, {{2, 1}, 3}, {{1, 1, 1}, 1}}));
    CHECK(constants_decomposition(4, Flavor::Magma, DecompMethod::Recursion) ==
          dec(4, {{{4}, 3}, {{3, 1}, 10}, {{2, 2}, 7}, {{2, 1, 1}, 10}, {{1, 1, 1, 1}, 4}}));
    CHECK(constants_decomposition(2, Flavor::Commutative, DecompMethod::Kernel)
              .multiplicities.empty());
    CHECK(constants_decomposition(3, Flavor::Commutative, DecompMethod::Recursion) ==
          dec(3, {{{2, 1}, 1}}));
    CHECK(constants_decomposition(4, Flavor::Commutative, DecompMethod::Kernel) ==
          dec(4, {{{4}, 1}, {{3, 1}, 1}, {{2, 2}, 1}}));

    // the two methods agree and the dimensions audit against the kernel
    std::vector<Integer> c = catalan_numbers(4);
    for (Flavor f : {Flavor::Magma, Flavor::Commutative}) {
        for (int k = 0; k <= 4; ++k) {
            Decomposition a = constants_decomposition(k, f, DecompMethod::Kernel);
            Decomposition b = constants_decomposition(k, f, DecompMethod::Recursion);
            CHECK(a == b);
            MultiDegree d;
            for (int v = 1; v <= k; ++v) d[v] = 1;
            CHECK(a.dimension() == Integer(constants_dimension(d, f)));
        }
    }
    // magma k=3: dim 1 + 3*2 + 1 = 8 inside the 12-dimensional component
    CHECK(constants_decomposition(3, Flavor::Magma, DecompMethod::Kernel).dimension() == 8);
}
