#pragma once

#include "nalg/polynomial.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

namespace nalg {

// One left- or right-multiplication by a fixed polynomial.
struct OpAtom {
    enum Side { Left, Right };
    Side side;
    Polynomial factor;

    Polynomial apply(const Polynomial& p) const {
        return side == Left ? multiply(factor, p) : multiply(p, factor);
    }
};

// A word of multiplication atoms, applied left to right; the empty word is
// the identity. Elements lambda_u, rho_u and their compositions live here.
class MultiplicationOperator {
public:
    MultiplicationOperator() = default;
    explicit MultiplicationOperator(std::vector<OpAtom> word)
        : word_(std::move(word)) {}

    static MultiplicationOperator identity() { return {}; }
    static MultiplicationOperator left(const Polynomial& u) {
        return MultiplicationOperator({OpAtom{OpAtom::Left, u}});
    }
    static MultiplicationOperator right(const Polynomial& u) {
        return MultiplicationOperator({OpAtom{OpAtom::Right, u}});
    }
    static MultiplicationOperator right_power(const Polynomial& u, int k);

    const std::vector<OpAtom>& word() const { return word_; }

    Polynomial apply(const Polynomial& p) const;

    // composition: this first, then o
    MultiplicationOperator then(const MultiplicationOperator& o) const;

private:
    std::vector<OpAtom> word_;
};

// Finite Q-linear combination of multiplication words: a general element of
// the multiplication algebra M(R).
class OperatorSum {
public:
    OperatorSum() = default;
    explicit OperatorSum(MultiplicationOperator op, Rational c = 1) {
        terms_.emplace_back(std::move(c), std::move(op));
    }

    static OperatorSum identity() { return OperatorSum(MultiplicationOperator::identity()); }
    static OperatorSum left(const Polynomial& u) { return OperatorSum(MultiplicationOperator::left(u)); }
    static OperatorSum right(const Polynomial& u) { return OperatorSum(MultiplicationOperator::right(u)); }

    const std::vector<std::pair<Rational, MultiplicationOperator>>& terms() const {
        return terms_;
    }

    Polynomial apply(const Polynomial& p) const;

    OperatorSum& operator+=(const OperatorSum& o);
    friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) { return a += b; }
    OperatorSum& operator*=(const Rational& c);
    // composition: this first, then o (distributes over the sums)
    OperatorSum then(const OperatorSum& o) const;
    OperatorSum pow(int k) const;

private:
    std::vector<std::pair<Rational, MultiplicationOperator>> terms_;
};

// The operator family of the generalized expansion: for each variable j and
// k >= 1 an element mu_{jk} of M(R), homogeneous of degree k in x_j alone,
// whose augmentation scalar mu_{jk}(1) is nonzero.
class OperatorFamily {
public:
    using Rule = std::function<OperatorSum(Flavor, int var, int k)>;

    OperatorFamily(std::string name, Rule rule)
        : name_(std::move(name)), rule_(std::move(rule)) {}

    // mu_{jk} = rho_j^k; the family of the plain Taylor expansion
    static OperatorFamily right_powers();
    // mu_{jk} = (lambda_j + rho_j)^k, the k-fold Jordan multiplication
    static OperatorFamily jordan();

    const std::string& name() const { return name_; }

    const OperatorSum& op(Flavor f, int var, int k) const;
    // the image mu_{jk}(1), an element of degree k
    Polynomial one_image(Flavor f, int var, int k) const;
    // the scalar mu_{jk}(1) of the expansion theorem: the sum of the word
    // coefficients, i.e. the augmentation of the image of 1
    Rational counit(Flavor f, int var, int k) const;

    // throws unless mu_{jk} is homogeneous of degree k in x_j alone with
    // nonzero counit, for all j <= vars, k <= maxdeg
    void validate(Flavor f, int vars, int maxdeg) const;

private:
    std::string name_;
    Rule rule_;
    mutable std::mutex mutex_;
    mutable std::map<std::tuple<Flavor, int, int>, OperatorSum> cache_;
};

} // namespace nalg
