#include "nalg/polynomial.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nalg {

Polynomial Polynomial::scalar(Flavor f, const Rational& c) {
    Polynomial p(f);
    p.add_term(Monomial::unit(f), c);
    return p;
}

Polynomial Polynomial::variable(Flavor f, int var) {
    return from_monomial(Monomial::leaf(f, var));
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
    Polynomial p(m.flavor());
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_scalar() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_unit());
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    // map is ordered by degree-first compare, so the last term is maximal
    return terms_.rbegin()->first.degree();
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::augmentation() const {
    Rational s = 0;
    for (auto& [m, c] : terms_) s += c;
    return s;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (m.flavor() != flavor_)
        throw std::invalid_argument("flavor mismatch in add_term");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (flavor_ != o.flavor_)
        throw std::invalid_argument("flavor mismatch in addition");
    for (auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (flavor_ != o.flavor_)
        throw std::invalid_argument("flavor mismatch in subtraction");
    for (auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial p(flavor_);
    for (auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

std::vector<int> Polynomial::variables() const {
    std::set<int> vars;
    for (auto& [m, c] : terms_)
        for (auto& [v, e] : m.multidegree()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

int Polynomial::max_variable() const {
    auto vs = variables();
    return vs.empty() ? 0 : vs.back();
}

std::map<MultiDegree, Polynomial> Polynomial::multihomogeneous_components() const {
    std::map<MultiDegree, Polynomial> out;
    for (auto& [m, c] : terms_) {
        auto [it, inserted] = out.emplace(m.multidegree(), Polynomial(flavor_));
        it->second.add_term(m, c);
    }
    return out;
}

Polynomial Polynomial::component(const MultiDegree& d) const {
    Polynomial p(flavor_);
    for (auto& [m, c] : terms_)
        if (m.multidegree() == d) p.add_term(m, c);
    return p;
}

Polynomial Polynomial::homogeneous_component(int n) const {
    Polynomial p(flavor_);
    for (auto& [m, c] : terms_)
        if (m.degree() == n) p.add_term(m, c);
    return p;
}

// bilinear extension of the grafting product; 1 is the two-sided unit
Polynomial multiply(const Polynomial& p, const Polynomial& q) {
    if (p.flavor() != q.flavor())
        throw std::invalid_argument("flavor mismatch in multiplication");
    Polynomial r(p.flavor());
    for (auto& [u, a] : p.terms())
        for (auto& [v, b] : q.terms())
            r.add_term(Monomial::node(u, v), a * b);
    return r;
}

Polynomial partial_derivative(const Monomial& u, int var) {
    Flavor f = u.flavor();
    if (u.is_unit()) return Polynomial::zero(f);
    if (u.is_leaf())
        return u.leaf_var() == var ? Polynomial::scalar(f, 1)
                                   : Polynomial::zero(f);
    if (f == Flavor::Associative) {
        // remove one occurrence of the letter at each position
        Polynomial r(f);
        std::vector<int> w = u.letters();
        for (size_t i = 0; i < w.size(); ++i) {
            if (w[i] != var) continue;
            std::vector<int> rest;
            rest.reserve(w.size() - 1);
            for (size_t j = 0; j < w.size(); ++j)
                if (j != i) rest.push_back(w[j]);
            r.add_term(Monomial::word(f, rest), 1);
        }
        return r;
    }
    auto [l, rgt] = u.split();
    Polynomial r = partial_derivative(l, var) * Polynomial::from_monomial(rgt);
    r += Polynomial::from_monomial(l) * partial_derivative(rgt, var);
    return r;
}

Polynomial partial_derivative(const Polynomial& p, int var) {
    Polynomial r(p.flavor());
    for (auto& [m, c] : p.terms()) {
        Polynomial d = partial_derivative(m, var);
        d *= c;
        r += d;
    }
    return r;
}

bool is_constant(const Polynomial& p) {
    for (int v : p.variables())
        if (!partial_derivative(p, v).is_zero()) return false;
    return true;
}

std::pair<Monomial, Rational> leading_term(const Polynomial& p) {
    if (p.is_zero())
        throw std::domain_error("leading term of the zero polynomial");
    auto it = p.terms().rbegin();
    return {it->first, it->second};
}

Polynomial rename_variables(const Polynomial& p, const std::map<int, int>& rename) {
    Polynomial r(p.flavor());
    for (auto& [m, c] : p.terms()) r.add_term(m.rename_variables(rename), c);
    return r;
}

} // namespace nalg
