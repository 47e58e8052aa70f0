#include "nalg/operators.hpp"

#include <stdexcept>
#include <string>

namespace nalg {

MultiplicationOperator MultiplicationOperator::right_power(const Polynomial& u, int k) {
    std::vector<OpAtom> w(static_cast<size_t>(k), OpAtom{OpAtom::Right, u});
    return MultiplicationOperator(std::move(w));
}

Polynomial MultiplicationOperator::apply(const Polynomial& p) const {
    Polynomial r = p;
    for (const OpAtom& a : word_) r = a.apply(r);
    return r;
}

MultiplicationOperator MultiplicationOperator::then(const MultiplicationOperator& o) const {
    std::vector<OpAtom> w = word_;
    w.insert(w.end(), o.word_.begin(), o.word_.end());
    return MultiplicationOperator(std::move(w));
}

Polynomial OperatorSum::apply(const Polynomial& p) const {
    Polynomial r(p.flavor());
    for (auto& [c, op] : terms_) {
        Polynomial t = op.apply(p);
        t *= c;
        r += t;
    }
    return r;
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& o) {
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    return *this;
}

OperatorSum& OperatorSum::operator*=(const Rational& c) {
    for (auto& [coeff, op] : terms_) coeff *= c;
    return *this;
}

OperatorSum OperatorSum::then(const OperatorSum& o) const {
    OperatorSum r;
    for (auto& [a, u] : terms_)
        for (auto& [b, v] : o.terms_)
            r.terms_.emplace_back(a * b, u.then(v));
    return r;
}

OperatorSum OperatorSum::pow(int k) const {
    OperatorSum r = identity();
    for (int i = 0; i < k; ++i) r = r.then(*this);
    return r;
}

OperatorFamily OperatorFamily::right_powers() {
    return OperatorFamily("right-powers", [](Flavor f, int var, int k) {
        return OperatorSum(
            MultiplicationOperator::right_power(Polynomial::variable(f, var), k));
    });
}

OperatorFamily OperatorFamily::jordan() {
    return OperatorFamily("jordan", [](Flavor f, int var, int k) {
        Polynomial x = Polynomial::variable(f, var);
        OperatorSum s = OperatorSum::left(x) + OperatorSum::right(x);
        return s.pow(k);
    });
}

const OperatorSum& OperatorFamily::op(Flavor f, int var, int k) const {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_tuple(f, var, k);
    auto it = cache_.find(key);
    if (it == cache_.end()) it = cache_.emplace(key, rule_(f, var, k)).first;
    return it->second;
}

Polynomial OperatorFamily::one_image(Flavor f, int var, int k) const {
    return op(f, var, k).apply(Polynomial::scalar(f, 1));
}

Rational OperatorFamily::counit(Flavor f, int var, int k) const {
    return one_image(f, var, k).augmentation();
}

void OperatorFamily::validate(Flavor f, int vars, int maxdeg) const {
    for (int j = 1; j <= vars; ++j) {
        for (int k = 1; k <= maxdeg; ++k) {
            Polynomial img = one_image(f, j, k);
            MultiDegree expect{{j, k}};
            for (auto& [m, c] : img.terms()) {
                if (m.multidegree() != expect)
                    throw std::invalid_argument(
                        "operator family '" + name_ + "': mu_{" +
                        std::to_string(j) + "," + std::to_string(k) +
                        "} is not homogeneous of degree k in x_j alone");
            }
            if (img.augmentation() == 0)
                throw std::invalid_argument(
                    "operator family '" + name_ + "': mu_{" + std::to_string(j) +
                    "," + std::to_string(k) + "}(1) = 0");
        }
    }
}

} // namespace nalg
