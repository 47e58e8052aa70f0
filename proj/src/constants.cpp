#include "nalg/constants.hpp"

#include "nalg/taylor.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nalg {

std::vector<Monomial> component_basis_desc(const MultiDegree& d, Flavor flavor) {
    std::vector<Monomial> monos = enumerate_monomials(d, flavor);
    std::reverse(monos.begin(), monos.end());
    return monos;
}

SparseMatrix derivation_matrix(const MultiDegree& d, Flavor flavor,
                               const std::vector<Monomial>& cols) {
    // rows: for each variable k in d, the component basis of d - e_k
    std::vector<int> vars;
    for (auto& [v, e] : d) vars.push_back(v);

    int nrows = 0;
    std::map<int, std::pair<int, std::map<Monomial, int, MonomialLess>>> blocks;
    for (int k : vars) {
        MultiDegree target = multidegree_sub(d, MultiDegree{{k, 1}});
        std::vector<Monomial> tm = component_basis_desc(target, flavor);
        std::map<Monomial, int, MonomialLess> idx;
        for (size_t i = 0; i < tm.size(); ++i)
            idx.emplace(tm[i], static_cast<int>(i));
        blocks.emplace(k, std::make_pair(nrows, std::move(idx)));
        nrows += static_cast<int>(tm.size());
    }

    const int ncols = static_cast<int>(cols.size());
    std::vector<std::vector<std::pair<int, Rational>>> col_entries(
        static_cast<size_t>(ncols));
#pragma omp parallel for schedule(dynamic) if (ncols > 256)
    for (int j = 0; j < ncols; ++j) {
        auto& entries = col_entries[static_cast<size_t>(j)];
        for (int k : vars) {
            auto& [offset, idx] = blocks.at(k);
            Polynomial d = partial_derivative(cols[static_cast<size_t>(j)], k);
            for (auto& [w, c] : d.terms())
                entries.emplace_back(offset + idx.at(w), c);
        }
    }
    SparseMatrix m(nrows, ncols);
    // ascending j keeps every row append-only
    for (int j = 0; j < ncols; ++j)
        for (auto& [i, c] : col_entries[static_cast<size_t>(j)]) m.add(i, j, c);
    return m;
}

ConstantsBasis constants_basis(const MultiDegree& d, Flavor flavor) {
    std::vector<Monomial> cols = component_basis_desc(d, flavor);
    ConstantsBasis out{flavor, d, {}};
    if (total_degree(d) == 0) {
        out.basis.push_back(Polynomial::scalar(flavor, 1));
        return out;
    }
    std::vector<SparseVector> kernel =
        nullspace(derivation_matrix(d, flavor, cols));
    for (auto& v : kernel) {
        Polynomial p(flavor);
        for (auto& [j, c] : v.entries) p.add_term(cols[static_cast<size_t>(j)], c);
        out.basis.push_back(std::move(p));
    }
    return out;
}

int constants_dimension(const MultiDegree& d, Flavor flavor) {
    if (total_degree(d) == 0) return 1;
    std::vector<Monomial> cols = component_basis_desc(d, flavor);
    int r = rank(derivation_matrix(d, flavor, cols));
    return static_cast<int>(cols.size()) - r;
}

Polynomial integrated_word(const Monomial& u) {
    if (u.flavor() != Flavor::Magma)
        throw std::invalid_argument("integrated_word: magma monomial required");
    MultiDegree d = u.multidegree();
    if (d.size() > 1 || (d.size() == 1 && d.begin()->first != 1))
        throw std::invalid_argument("integrated_word: one-variable word required");
    return constant_remainder(Polynomial::from_monomial(u), 1);
}

namespace {

bool is_leaf_x(const Monomial& m) { return m.is_leaf() && m.leaf_var() == 1; }

// u = v*x for some word v (including v = 1, i.e. u = x itself)
bool ends_in_x(const Monomial& u) {
    if (is_leaf_x(u)) return true;
    if (u.degree() < 2) return false;
    return is_leaf_x(u.split().second);
}

} // namespace

std::vector<Polynomial> one_var_constant_basis(int n) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<Polynomial> out;
    for (const Monomial& u : enumerate_monomials(
             n == 0 ? MultiDegree{} : MultiDegree{{1, n}}, Flavor::Magma)) {
        if (ends_in_x(u)) continue;
        out.push_back(integrated_word(u));
    }
    return out;
}

std::vector<Polynomial> GeneratorSet::values() const {
    std::vector<Polynomial> out;
    out.reserve(elements.size());
    for (auto& e : elements) out.push_back(e.value);
    return out;
}

GeneratorSet free_generators(int n) {
    if (n < 3) throw std::invalid_argument("free_generators: degree must be >= 3");
    auto is_x2 = [](const Monomial& m) {
        return m.degree() == 2 && is_leaf_x(m.split().first) &&
               is_leaf_x(m.split().second);
    };
    GeneratorSet out;
    out.degree = n;
    for (const Monomial& u : enumerate_monomials(MultiDegree{{1, n}}, Flavor::Magma)) {
        auto [l, r] = u.split();
        std::vector<std::string> forms;
        if (is_x2(r) && l.degree() >= 2) forms.push_back("v*(x^2)");
        if (is_leaf_x(l) && r.degree() >= 2) forms.push_back("x*w");
        if (is_x2(l) && r.degree() >= 2) forms.push_back("(x^2)*w");
        if (l.degree() >= 3 && is_leaf_x(l.split().second) &&
            l.split().first.degree() >= 2 && r.degree() >= 2)
            forms.push_back("(v1*x)*w");
        if (r.degree() >= 3 && is_leaf_x(r.split().second) &&
            r.split().first.degree() >= 2 && l.degree() >= 2)
            forms.push_back("v*(w1*x)");
        if (forms.empty()) continue;
        out.elements.push_back({u, integrated_word(u), std::move(forms)});
    }
    return out;
}

// ---------------------------------------------------------------------------
// series tables

std::vector<Integer> catalan_numbers(int N) {
    std::vector<Integer> c(static_cast<size_t>(N) + 1, 0);
    c[0] = 1;
    if (N >= 1) c[1] = 1;
    for (int n = 2; n <= N; ++n)
        for (int p = 1; p < n; ++p)
            c[static_cast<size_t>(n)] +=
                c[static_cast<size_t>(p)] * c[static_cast<size_t>(n - p)];
    return c;
}

Integer catalan_closed_form(int n) {
    if (n < 0) return 0;
    if (n == 0) return 1;
    return binomial(static_cast<unsigned>(2 * n - 2), static_cast<unsigned>(n - 1)) / n;
}

std::vector<Integer> catalan_compose(const std::vector<Integer>& g) {
    if (!g.empty() && g[0] != 0)
        throw std::invalid_argument("catalan_compose: series must have no constant term");
    const size_t N = g.empty() ? 0 : g.size() - 1;
    std::vector<Integer> h(N + 1, 0); // h = g + h^2
    for (size_t n = 1; n <= N; ++n) {
        h[n] = g[n];
        for (size_t p = 1; p < n; ++p) h[n] += h[p] * h[n - p];
    }
    h[0] = 1; // c(g) = 1 + h
    return h;
}

std::vector<Integer> gamma_series(int N) {
    std::vector<Integer> c = catalan_numbers(N);
    std::vector<Integer> g(static_cast<size_t>(N) + 1);
    g[0] = 1; // c_0 - c_{-1}
    for (int n = 1; n <= N; ++n)
        g[static_cast<size_t>(n)] =
            c[static_cast<size_t>(n)] - c[static_cast<size_t>(n - 1)];
    return g;
}

std::vector<Integer> generator_series(int N) {
    std::vector<Integer> c = catalan_numbers(std::max(N, 1));
    std::vector<Integer> g(static_cast<size_t>(N) + 1, 0);
    if (N >= 3) g[3] = 1;
    for (int n = 4; n <= N; ++n)
        g[static_cast<size_t>(n)] =
            3 * (c[static_cast<size_t>(n - 1)] - c[static_cast<size_t>(n - 2)]);
    return g;
}

std::vector<Integer> generator_series_closed_form(int N) {
    // -3t^2 + t^3 + 3t(1-t) h(t) with h = t + h^2 (so 1 + h is the catalan
    // table)
    std::vector<Integer> t(static_cast<size_t>(N) + 1, 0);
    if (N >= 1) t[1] = 1;
    std::vector<Integer> h = catalan_compose(t);
    h[0] = 0;
    std::vector<Integer> g(static_cast<size_t>(N) + 1, 0);
    if (N >= 2) g[2] = -3;
    if (N >= 3) g[3] += 1;
    for (int n = 0; n <= N; ++n) {
        if (h[static_cast<size_t>(n)] == 0) continue;
        if (n + 1 <= N) g[static_cast<size_t>(n + 1)] += 3 * h[static_cast<size_t>(n)];
        if (n + 2 <= N) g[static_cast<size_t>(n + 2)] -= 3 * h[static_cast<size_t>(n)];
    }
    return g;
}

std::vector<Integer> magma_hilbert(int m, int N) {
    std::vector<Integer> g(static_cast<size_t>(N) + 1, 0);
    if (N >= 1) g[1] = m;
    return catalan_compose(g);
}

std::vector<Integer> commutative_hilbert(int m, int N) {
    std::vector<Integer> h(static_cast<size_t>(N) + 1, 0);
    // H_n = m[n=1] + (1/2) sum_{p+q=n} H_p H_q + (1/2) H_{n/2 if even};
    // every coefficient comes out integral
    for (int n = 1; n <= N; ++n) {
        Integer twice = 0;
        if (n == 1) twice += 2 * m;
        for (int p = 1; p < n; ++p)
            twice += h[static_cast<size_t>(p)] * h[static_cast<size_t>(n - p)];
        if (n % 2 == 0) twice += h[static_cast<size_t>(n / 2)];
        if (twice % 2 != 0)
            throw std::logic_error("commutative Hilbert recursion not integral");
        h[static_cast<size_t>(n)] = twice / 2;
    }
    h[0] = 1;
    return h;
}

Integer associative_constants_coefficient(const MultiDegree& d, int m) {
    // prod_j (1-t_j) expanded by inclusion-exclusion against
    // 1/(1 - sum t_j), whose coefficient at multidegree e is the multinomial
    // (|e|)! / prod e_j!
    std::vector<int> exps(static_cast<size_t>(m), 0);
    for (auto& [v, e] : d) {
        if (v > m) throw std::invalid_argument("multidegree exceeds variable count");
        exps[static_cast<size_t>(v - 1)] = e;
    }
    auto multinomial = [](const std::vector<int>& e) -> Integer {
        int total = 0;
        for (int x : e) {
            if (x < 0) return 0;
            total += x;
        }
        Integer r = factorial(static_cast<unsigned>(total));
        for (int x : e) r /= factorial(static_cast<unsigned>(x));
        return r;
    };
    Integer sum = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        std::vector<int> e = exps;
        int bits = 0;
        for (int j = 0; j < m; ++j)
            if (mask >> j & 1u) {
                --e[static_cast<size_t>(j)];
                ++bits;
            }
        Integer term = multinomial(e);
        sum += (bits % 2 == 0) ? term : -term;
    }
    return sum;
}

std::vector<Integer> associative_constants_hilbert(int m, int N) {
    // (1-t)^m * sum m^n t^n
    std::vector<Integer> out(static_cast<size_t>(N) + 1, 0);
    for (int n = 0; n <= N; ++n) {
        Integer sum = 0;
        for (int k = 0; k <= std::min(m, n); ++k) {
            Integer term = binomial(static_cast<unsigned>(m), static_cast<unsigned>(k));
            Integer power = 1;
            for (int i = 0; i < n - k; ++i) power *= m;
            term *= power;
            sum += (k % 2 == 0) ? term : -term;
        }
        out[static_cast<size_t>(n)] = sum;
    }
    return out;
}

SeriesTable series(const std::string& name, int N, int m) {
    if (name == "catalan") return {name, catalan_numbers(N)};
    if (name == "gamma") return {name, gamma_series(N)};
    if (name == "generators") return {name, generator_series(N)};
    if (name == "magmaHilb") return {name, magma_hilbert(m, N)};
    if (name == "commHilb") return {name, commutative_hilbert(m, N)};
    if (name == "assocConstHilb") return {name, associative_constants_hilbert(m, N)};
    throw std::invalid_argument("unknown series table: '" + name + "'");
}

// ---------------------------------------------------------------------------
// verification reports

HilbertProductReport verify_hilbert_product(Flavor flavor, int m, int D) {
    HilbertProductReport rep{flavor, m, D, {}, true};
    std::map<MultiDegree, int> dim_cache;
    auto const_dim = [&](const MultiDegree& e) {
        auto it = dim_cache.find(e);
        if (it == dim_cache.end())
            it = dim_cache.emplace(e, constants_dimension(e, flavor)).first;
        return it->second;
    };
    for (int total = 0; total <= D; ++total) {
        for (auto& d : multidegrees_of_total(m, total)) {
            Integer lhs = enumerate_monomials(d, flavor).size();
            Integer rhs = 0;
            for (auto& e : multidegrees_below(d)) rhs += const_dim(e);
            bool pass = lhs == rhs;
            rep.all_pass = rep.all_pass && pass;
            rep.rows.push_back({d, lhs, rhs, pass});
        }
    }
    return rep;
}

SpanCheckReport span_check_generators(int D) {
    if (D < 3) throw std::invalid_argument("span check needs D >= 3");
    SpanCheckReport rep{D, {}, true};
    std::vector<Integer> gamma = gamma_series(D);

    // formal magma products of generators, grouped by total degree
    std::vector<std::vector<Polynomial>> prods(static_cast<size_t>(D) + 1);
    for (int n = 3; n <= D; ++n) {
        prods[static_cast<size_t>(n)] = free_generators(n).values();
        for (int a = 3; a + 3 <= n; ++a) {
            int b = n - a;
            if (b < 3) continue;
            for (auto& p : prods[static_cast<size_t>(a)])
                for (auto& q : prods[static_cast<size_t>(b)])
                    prods[static_cast<size_t>(n)].push_back(p * q);
        }
    }

    for (int n = 0; n <= D; ++n) {
        auto& elems = prods[static_cast<size_t>(n)];
        int rk = 0;
        if (!elems.empty()) {
            std::vector<Monomial> cols =
                component_basis_desc(MultiDegree{{1, n}}, Flavor::Magma);
            std::map<Monomial, int, MonomialLess> index;
            for (size_t i = 0; i < cols.size(); ++i)
                index.emplace(cols[i], static_cast<int>(i));
            std::vector<SparseVector> vecs;
            for (auto& p : elems) {
                SparseVector v;
                for (auto& [mono, c] : p.terms()) v.set(index.at(mono), c);
                vecs.push_back(std::move(v));
            }
            rk = static_cast<int>(reduced_basis(std::move(vecs)).size());
        }
        Integer expected = (n == 0) ? Integer(1) : gamma[static_cast<size_t>(n)];
        // scalars span degree 0; everywhere else the products must span the
        // constants and be linearly independent as formal products
        bool pass = (n == 0) ||
                    (Integer(rk) == expected &&
                     rk == static_cast<int>(elems.size()));
        rep.all_pass = rep.all_pass && pass;
        rep.rows.push_back({n, expected, static_cast<int>(elems.size()), rk, pass});
    }
    return rep;
}

} // namespace nalg
