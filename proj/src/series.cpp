#include "nalg/series.hpp"

#include "nalg/linalg.hpp"
#include "nalg/taylor.hpp"

#include <stdexcept>

namespace nalg {

TruncatedElement::TruncatedElement(Flavor f, int order)
    : flavor_(f), order_(order),
      comp_(static_cast<size_t>(order) + 1, Polynomial(f)) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
}

TruncatedElement TruncatedElement::scalar(Flavor f, int order, const Rational& c) {
    TruncatedElement t(f, order);
    t.set_component(0, Polynomial::scalar(f, c));
    return t;
}

TruncatedElement TruncatedElement::from_polynomial(const Polynomial& p, int order) {
    TruncatedElement t(p.flavor(), order);
    for (int n = 0; n <= order; ++n) t.set_component(n, p.homogeneous_component(n));
    return t;
}

const Polynomial& TruncatedElement::component(int n) const {
    if (n < 0 || n > order_) throw std::out_of_range("component degree");
    return comp_[static_cast<size_t>(n)];
}

void TruncatedElement::set_component(int n, Polynomial p) {
    if (n < 0 || n > order_) throw std::out_of_range("component degree");
    for (auto& [m, c] : p.terms())
        if (m.degree() != n || m.degree_in(1) != n)
            throw std::invalid_argument(
                "component must be homogeneous of its degree in x alone");
    comp_[static_cast<size_t>(n)] = std::move(p);
}

bool TruncatedElement::is_zero() const { return is_zero_through(order_); }

bool TruncatedElement::is_zero_through(int degree) const {
    for (int n = 0; n <= std::min(degree, order_); ++n)
        if (!comp_[static_cast<size_t>(n)].is_zero()) return false;
    return true;
}

bool TruncatedElement::is_constant_series() const {
    for (auto& p : comp_)
        if (!is_constant(p)) return false;
    return true;
}

TruncatedElement& TruncatedElement::operator+=(const TruncatedElement& o) {
    if (flavor_ != o.flavor_ || order_ != o.order_)
        throw std::invalid_argument("mismatched truncated elements");
    for (int n = 0; n <= order_; ++n) comp_[static_cast<size_t>(n)] += o.comp_[static_cast<size_t>(n)];
    return *this;
}

TruncatedElement& TruncatedElement::operator-=(const TruncatedElement& o) {
    if (flavor_ != o.flavor_ || order_ != o.order_)
        throw std::invalid_argument("mismatched truncated elements");
    for (int n = 0; n <= order_; ++n) comp_[static_cast<size_t>(n)] -= o.comp_[static_cast<size_t>(n)];
    return *this;
}

TruncatedElement& TruncatedElement::operator*=(const Rational& c) {
    for (auto& p : comp_) p *= c;
    return *this;
}

TruncatedElement multiply(const TruncatedElement& a, const TruncatedElement& b) {
    if (a.flavor_ != b.flavor_ || a.order_ != b.order_)
        throw std::invalid_argument("mismatched truncated elements");
    TruncatedElement r(a.flavor_, a.order_);
    for (int n = 0; n <= a.order_; ++n) {
        Polynomial sum(a.flavor_);
        for (int p = 0; p <= n; ++p)
            sum += multiply(a.comp_[static_cast<size_t>(p)],
                            b.comp_[static_cast<size_t>(n - p)]);
        r.comp_[static_cast<size_t>(n)] = std::move(sum);
    }
    return r;
}

bool TruncatedElement::operator==(const TruncatedElement& o) const {
    return flavor_ == o.flavor_ && order_ == o.order_ && comp_ == o.comp_;
}

TruncatedElement TruncatedElement::scale_substitute(const Rational& alpha) const {
    TruncatedElement r(flavor_, order_);
    Rational power = 1;
    for (int n = 0; n <= order_; ++n) {
        Polynomial p = comp_[static_cast<size_t>(n)];
        p *= power;
        r.comp_[static_cast<size_t>(n)] = std::move(p);
        power *= alpha;
    }
    return r;
}

TruncatedElement TruncatedElement::derivative() const {
    if (order_ == 0) return TruncatedElement(flavor_, 0);
    TruncatedElement r(flavor_, order_ - 1);
    for (int n = 1; n <= order_; ++n)
        r.comp_[static_cast<size_t>(n - 1)] =
            partial_derivative(comp_[static_cast<size_t>(n)], 1);
    return r;
}

TruncatedElement TruncatedElement::right_mul_x(int k) const {
    Polynomial x = Polynomial::variable(flavor_, 1);
    TruncatedElement r(flavor_, order_);
    for (int n = 0; n + k <= order_; ++n) {
        Polynomial p = comp_[static_cast<size_t>(n)];
        for (int i = 0; i < k; ++i) p = p * x;
        r.comp_[static_cast<size_t>(n + k)] = std::move(p);
    }
    return r;
}

TruncatedElement TruncatedElement::truncate(int order) const {
    TruncatedElement r(flavor_, order);
    for (int n = 0; n <= std::min(order, order_); ++n)
        r.comp_[static_cast<size_t>(n)] = comp_[static_cast<size_t>(n)];
    return r;
}

// ---------------------------------------------------------------------------

TaylorSeries::TaylorSeries(Flavor f, int order) : flavor_(f), order_(order) {
    c_.reserve(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c_.emplace_back(f, order - k);
}

const TruncatedElement& TaylorSeries::coefficient(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient index");
    return c_[static_cast<size_t>(k)];
}

void TaylorSeries::set_coefficient(int k, TruncatedElement c) {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient index");
    if (!c.is_constant_series())
        throw std::invalid_argument("taylor coefficient is not a constant series");
    c_[static_cast<size_t>(k)] = c.truncate(order_ - k);
}

TruncatedElement TaylorSeries::materialize() const {
    TruncatedElement y(flavor_, order_);
    Rational fact = 1;
    for (int k = 0; k <= order_; ++k) {
        if (k > 0) fact *= k;
        TruncatedElement term =
            c_[static_cast<size_t>(k)].truncate(order_).right_mul_x(k);
        term *= Rational(1) / fact;
        y += term;
    }
    return y;
}

bool TaylorSeries::operator==(const TaylorSeries& o) const {
    return flavor_ == o.flavor_ && order_ == o.order_ && c_ == o.c_;
}

TaylorSeries to_taylor_series(const TruncatedElement& f) {
    const int N = f.order();
    TaylorSeries s(f.flavor(), N);
    std::vector<TruncatedElement> coeffs;
    coeffs.reserve(static_cast<size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) coeffs.emplace_back(f.flavor(), N - k);
    Rational fact = 1;
    std::vector<Rational> factorials(static_cast<size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        factorials[static_cast<size_t>(k)] = fact;
        fact *= k + 1;
    }
    for (int n = 0; n <= N; ++n) {
        TaylorExpansion e = taylor_expand(f.component(n));
        for (auto& [a, r] : e.coefficients) {
            int k = a.empty() ? 0 : a[0];
            Polynomial scaled = r * factorials[static_cast<size_t>(k)];
            coeffs[static_cast<size_t>(k)].set_component(n - k, std::move(scaled));
        }
    }
    for (int k = 0; k <= N; ++k)
        s.set_coefficient(k, std::move(coeffs[static_cast<size_t>(k)]));
    return s;
}

TaylorSeries solve_linear_ode(const LinearODE& ode, int N) {
    const int n = ode.order;
    if (n < 1) throw std::invalid_argument("ODE order must be >= 1");
    if (static_cast<int>(ode.a.size()) != n)
        throw std::invalid_argument("expected n coefficients a_1..a_n");
    if (static_cast<int>(ode.initial.size()) != n)
        throw std::invalid_argument("expected n initial constants c_0..c_{n-1}");
    Flavor f = ode.rhs.flavor();
    TaylorSeries rhs = to_taylor_series(ode.rhs.truncate(N));
    TaylorSeries y(f, N);
    for (int k = 0; k < n && k <= N; ++k) {
        if (!ode.initial[static_cast<size_t>(k)].is_constant_series())
            throw std::invalid_argument("initial data must be constant series");
        y.set_coefficient(k, ode.initial[static_cast<size_t>(k)].truncate(N - k));
    }
    for (int j = 0; j + n <= N; ++j) {
        // c_{j+n} = f_j - a_1 c_{j+n-1} - ... - a_n c_j
        TruncatedElement c = rhs.coefficient(j).truncate(N - (j + n));
        for (int i = 1; i <= n; ++i) {
            TruncatedElement t =
                y.coefficient(j + n - i).truncate(N - (j + n));
            t *= ode.a[static_cast<size_t>(i - 1)];
            c -= t;
        }
        y.set_coefficient(j + n, std::move(c));
    }
    return y;
}

TruncatedElement ode_residual(const LinearODE& ode, const TruncatedElement& y) {
    const int n = ode.order;
    std::vector<TruncatedElement> derivs{y};
    for (int i = 1; i <= n; ++i) derivs.push_back(derivs.back().derivative());
    int out_order = y.order() - n;
    if (out_order < 0) throw std::invalid_argument("order too small for residual");
    TruncatedElement r = derivs[static_cast<size_t>(n)].truncate(out_order);
    for (int i = 1; i <= n; ++i) {
        TruncatedElement t = derivs[static_cast<size_t>(n - i)].truncate(out_order);
        t *= ode.a[static_cast<size_t>(i - 1)];
        r += t;
    }
    r -= ode.rhs.truncate(out_order);
    return r;
}

Rational ExpRho::coefficient(int k) const {
    return pow(lambda, static_cast<unsigned>(k)) /
           Rational(factorial(static_cast<unsigned>(k)));
}

TaylorSeries ExpRho::apply(const TruncatedElement& c) const {
    if (!c.is_constant_series())
        throw std::invalid_argument("exp(lambda rho) applies to constant series");
    const int N = c.order();
    TaylorSeries s(c.flavor(), N);
    for (int k = 0; k <= N; ++k) {
        TruncatedElement ck = c.truncate(N - k);
        ck *= pow(lambda, static_cast<unsigned>(k));
        s.set_coefficient(k, std::move(ck));
    }
    return s;
}

int RootData::total_multiplicity() const {
    int n = 0;
    for (auto& [l, k] : roots) n += k;
    return n;
}

void validate_roots(const RootData& roots, const std::vector<Rational>& a) {
    const int n = static_cast<int>(a.size());
    if (roots.total_multiplicity() != n)
        throw std::invalid_argument("root multiplicities do not sum to the ODE order");
    for (size_t i = 0; i < roots.roots.size(); ++i)
        for (size_t j = i + 1; j < roots.roots.size(); ++j)
            if (roots.roots[i].first == roots.roots[j].first)
                throw std::invalid_argument("repeated root in root data");
    // monic characteristic polynomial, highest degree first
    std::vector<Rational> poly(static_cast<size_t>(n) + 1);
    poly[0] = 1;
    for (int i = 1; i <= n; ++i) poly[static_cast<size_t>(i)] = a[static_cast<size_t>(i - 1)];
    for (auto& [lambda, mult] : roots.roots) {
        for (int s = 0; s < mult; ++s) {
            // synthetic division by (t - lambda)
            std::vector<Rational> q(poly.size() - 1);
            Rational carry = 0;
            for (size_t i = 0; i + 1 < poly.size(); ++i) {
                carry = poly[i] + carry * lambda;
                q[i] = carry;
            }
            Rational rem = poly.back() + carry * lambda;
            if (rem != 0)
                throw std::invalid_argument(
                    "root " + to_string(lambda) + " does not have multiplicity " +
                    std::to_string(mult));
            poly = std::move(q);
        }
        // multiplicity is exact: lambda must not divide the quotient
        Rational value = 0;
        for (Rational& c : poly) value = value * lambda + c;
        if (value == 0)
            throw std::invalid_argument("root " + to_string(lambda) +
                                        " has multiplicity above the declared " +
                                        std::to_string(mult));
    }
}

TaylorSeries homogeneous_general_solution(const RootData& roots,
                                          const std::vector<Rational>& a,
                                          const std::vector<std::vector<TruncatedElement>>& c,
                                          int N) {
    validate_roots(roots, a);
    if (c.size() != roots.roots.size())
        throw std::invalid_argument("one constant block per root required");
    Flavor f = Flavor::Magma;
    if (!c.empty() && !c.front().empty()) f = c.front().front().flavor();
    TaylorSeries y(f, N);
    for (int k = 0; k <= N; ++k) {
        // d_k = sum_i sum_{j <= min(k, k_i-1)} k!/(k-j)! lambda_i^{k-j} c_{ij}
        TruncatedElement dk(f, N - k);
        for (size_t i = 0; i < roots.roots.size(); ++i) {
            auto& [lambda, mult] = roots.roots[i];
            if (static_cast<int>(c[i].size()) != mult)
                throw std::invalid_argument("constant block size must match multiplicity");
            for (int j = 0; j <= std::min(k, mult - 1); ++j) {
                Rational coeff =
                    Rational(factorial(static_cast<unsigned>(k))) /
                    Rational(factorial(static_cast<unsigned>(k - j))) *
                    pow(lambda, static_cast<unsigned>(k - j));
                if (coeff == 0) continue;
                TruncatedElement t = c[i][static_cast<size_t>(j)].truncate(N - k);
                t *= coeff;
                dk += t;
            }
        }
        y.set_coefficient(k, std::move(dk));
    }
    return y;
}

std::vector<std::vector<TruncatedElement>>
fit_initial_constants(const RootData& roots, const std::vector<TruncatedElement>& initial,
                      int N) {
    const int n = roots.total_multiplicity();
    if (static_cast<int>(initial.size()) != n)
        throw std::invalid_argument("expected n initial constants");
    Flavor f = initial.empty() ? Flavor::Magma : initial.front().flavor();
    // unknowns (i,j) flattened; row k states sum M[k][(i,j)] c_{ij} = c_k
    std::vector<std::pair<size_t, int>> unknowns;
    for (size_t i = 0; i < roots.roots.size(); ++i)
        for (int j = 0; j < roots.roots[i].second; ++j) unknowns.emplace_back(i, j);
    DenseMatrix m(static_cast<size_t>(n), std::vector<Rational>(static_cast<size_t>(n)));
    for (int k = 0; k < n; ++k) {
        for (size_t u = 0; u < unknowns.size(); ++u) {
            auto [i, j] = unknowns[u];
            const Rational& lambda = roots.roots[i].first;
            m[static_cast<size_t>(k)][u] =
                j > k ? Rational(0)
                      : Rational(factorial(static_cast<unsigned>(k))) /
                            Rational(factorial(static_cast<unsigned>(k - j))) *
                            pow(lambda, static_cast<unsigned>(k - j));
        }
    }
    std::vector<TruncatedElement> rhs;
    rhs.reserve(static_cast<size_t>(n));
    for (auto& c : initial) rhs.push_back(c.truncate(N));
    std::vector<TruncatedElement> sol = solve_dense_vector_rhs(
        std::move(m), std::move(rhs), TruncatedElement::zero(f, N));
    std::vector<std::vector<TruncatedElement>> out(roots.roots.size());
    for (size_t u = 0; u < unknowns.size(); ++u)
        out[unknowns[u].first].push_back(sol[u]);
    return out;
}

TruncatedElement nonassoc_exponential(int N) {
    if (N < 1) throw std::invalid_argument("exponential needs order >= 1");
    TruncatedElement e(Flavor::Magma, N);
    e.set_component(0, Polynomial::scalar(Flavor::Magma, 1));
    e.set_component(1, Polynomial::variable(Flavor::Magma, 1));
    for (int n = 2; n <= N; ++n) {
        Polynomial sum(Flavor::Magma);
        for (int p = 1; p < n; ++p)
            sum += multiply(e.component(p), e.component(n - p));
        Rational denom = pow(Rational(2), static_cast<unsigned>(n)) - 2;
        sum *= Rational(1) / denom;
        e.set_component(n, std::move(sum));
    }
    return e;
}

} // namespace nalg
