#include "nalg/taylor.hpp"

#include "nalg/constants.hpp"
#include "nalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nalg {

Polynomial constant_remainder(const Polynomial& r, int var) {
    Polynomial acc(r.flavor());
    Polynomial d = r;
    Polynomial x = Polynomial::variable(r.flavor(), var);
    Rational sign = 1;
    Rational fact = 1;
    int p = 0;
    while (!d.is_zero()) {
        Polynomial term = d;
        for (int i = 0; i < p; ++i) term = term * x;
        term *= sign / fact;
        acc += term;
        d = partial_derivative(d, var);
        ++p;
        sign = -sign;
        fact *= p;
    }
    return acc;
}

namespace {

// expansion of r in the single variable var: a -> r_a with d r_a/d var = 0.
// If dr = sum_b s_b rho^b then r_{b+1} = s_b/(b+1), and r_0 is what is left.
std::map<int, Polynomial> expand_in_var(const Polynomial& r, int var) {
    std::map<int, Polynomial> res;
    if (r.is_zero()) return res;
    Polynomial d = partial_derivative(r, var);
    Polynomial x = Polynomial::variable(r.flavor(), var);
    Polynomial rest = r;
    if (!d.is_zero()) {
        for (auto& [b, s] : expand_in_var(d, var)) {
            Polynomial coeff = s * (Rational(1) / Rational(b + 1));
            Polynomial term = coeff;
            for (int i = 0; i <= b; ++i) term = term * x;
            rest -= term;
            res.emplace(b + 1, std::move(coeff));
        }
    }
    if (!rest.is_zero()) res.emplace(0, std::move(rest));
    return res;
}

} // namespace

TaylorExpansion taylor_expand(const Polynomial& r) {
    TaylorExpansion out;
    out.flavor = r.flavor();
    out.nvars = r.max_variable();
    if (r.is_zero()) return out;

    // exponent suffix (a_j, ..., a_m) -> coefficient, peeled from the top
    std::map<std::vector<int>, Polynomial> work;
    work.emplace(std::vector<int>{}, r);
    for (int var = out.nvars; var >= 1; --var) {
        std::map<std::vector<int>, Polynomial> next;
        for (auto& [suffix, poly] : work) {
            for (auto& [a, coeff] : expand_in_var(poly, var)) {
                std::vector<int> key;
                key.reserve(suffix.size() + 1);
                key.push_back(a);
                key.insert(key.end(), suffix.begin(), suffix.end());
                next.emplace(std::move(key), coeff);
            }
        }
        work = std::move(next);
    }
    out.coefficients = std::move(work);
    return out;
}

Polynomial taylor_reconstruct(const TaylorExpansion& e) {
    Polynomial r(e.flavor);
    for (auto& [a, coeff] : e.coefficients) {
        if (!is_constant(coeff))
            throw std::invalid_argument("taylor_reconstruct: non-constant coefficient");
        Polynomial term = coeff;
        for (size_t j = 0; j < a.size(); ++j) {
            Polynomial x = Polynomial::variable(e.flavor, static_cast<int>(j) + 1);
            for (int i = 0; i < a[j]; ++i) term = term * x;
        }
        r += term;
    }
    return r;
}

TaylorExpansion generalized_expand(const Polynomial& r, const OperatorFamily& fam) {
    TaylorExpansion out;
    out.flavor = r.flavor();
    out.nvars = r.max_variable();
    if (r.is_zero()) return out;

    int maxdeg = 0;
    for (auto& [d, comp] : r.multihomogeneous_components())
        for (auto& [v, e] : d) maxdeg = std::max(maxdeg, e);
    fam.validate(r.flavor(), out.nvars, maxdeg);

    for (auto& [d, comp] : r.multihomogeneous_components()) {
        // spanning set: r_n mu_{1 a_1} ... mu_{m a_m} over a <= d and the
        // constants basis of multidegree d - a; square by the Hilbert series
        std::vector<Monomial> monos = enumerate_monomials(d, r.flavor());
        std::sort(monos.begin(), monos.end(),
                  [](const Monomial& a, const Monomial& b) { return compare(b, a) < 0; });
        std::map<Monomial, int, MonomialLess> index;
        for (size_t i = 0; i < monos.size(); ++i)
            index.emplace(monos[i], static_cast<int>(i));
        const size_t dim = monos.size();

        std::vector<std::pair<std::vector<int>, Polynomial>> span; // (a, r_n)
        DenseMatrix cols;
        for (auto& a : multidegrees_below(d)) {
            ConstantsBasis cb = constants_basis(multidegree_sub(d, a), r.flavor());
            std::vector<int> avec(static_cast<size_t>(out.nvars), 0);
            for (auto& [v, e] : a) avec[static_cast<size_t>(v - 1)] = e;
            for (const Polynomial& rn : cb.basis) {
                Polynomial elem = rn;
                for (int j = 1; j <= out.nvars; ++j) {
                    int aj = avec[static_cast<size_t>(j - 1)];
                    if (aj > 0) elem = fam.op(r.flavor(), j, aj).apply(elem);
                }
                std::vector<Rational> col(dim, Rational(0));
                for (auto& [m, c] : elem.terms())
                    col[static_cast<size_t>(index.at(m))] = c;
                cols.push_back(std::move(col));
                span.emplace_back(avec, rn);
            }
        }
        if (cols.size() != dim)
            throw std::logic_error("generalized_expand: spanning set size mismatch");

        DenseMatrix a(dim, std::vector<Rational>(dim));
        for (size_t j = 0; j < dim; ++j)
            for (size_t i = 0; i < dim; ++i) a[i][j] = cols[j][i];
        std::vector<Rational> b(dim, Rational(0));
        for (auto& [m, c] : comp.terms()) b[static_cast<size_t>(index.at(m))] = c;

        std::vector<Rational> beta;
        try {
            beta = solve_dense(std::move(a), std::move(b));
        } catch (const std::domain_error&) {
            throw std::logic_error("generalized_expand: singular expansion system");
        }
        for (size_t j = 0; j < dim; ++j) {
            if (beta[j] == 0) continue;
            auto& [avec, rn] = span[j];
            auto [it, inserted] =
                out.coefficients.emplace(avec, Polynomial::zero(r.flavor()));
            it->second += rn * beta[j];
        }
    }
    // coefficients that cancelled across basis elements
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();)
        it = it->second.is_zero() ? out.coefficients.erase(it) : std::next(it);
    return out;
}

} // namespace nalg
