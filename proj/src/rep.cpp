#include "nalg/rep.hpp"

#include "nalg/constants.hpp"
#include "nalg/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace nalg {

int partition_weight(const Partition& p) {
    int w = 0;
    for (int x : p) w += x;
    return w;
}

std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int left, int maxpart) -> void {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(left, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, left - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    if (n == 0) out.assign(1, Partition{});
    return out;
}

std::string partition_to_string(const Partition& p) {
    if (p.empty()) return "[]";
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(p[i]);
    }
    return s + "]";
}

Integer class_size(const Partition& cycle_type) {
    int n = partition_weight(cycle_type);
    Integer z = 1;
    std::map<int, int> mult;
    for (int c : cycle_type) ++mult[c];
    for (auto& [len, m] : mult) {
        for (int i = 0; i < m; ++i) z *= len;
        z *= factorial(static_cast<unsigned>(m));
    }
    return factorial(static_cast<unsigned>(n)) / z;
}

std::vector<int> permutation_from_cycle_type(const Partition& cycle_type) {
    int n = partition_weight(cycle_type);
    std::vector<int> sigma(static_cast<size_t>(n) + 1);
    int start = 1;
    for (int len : cycle_type) {
        for (int i = 0; i < len; ++i)
            sigma[static_cast<size_t>(start + i)] = start + (i + 1) % len;
        start += len;
    }
    return sigma;
}

namespace {

// beta-set form of the Murnaghan-Nakayama recursion: removing a border strip
// of length r moves one beta number down by r; the sign counts the beta
// numbers jumped over.
Integer mn_rec(const Partition& lambda, const Partition& mu,
               std::map<std::pair<Partition, Partition>, Integer>& memo) {
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int r = mu.front();
    Partition mu_rest(mu.begin() + 1, mu.end());

    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(static_cast<size_t>(l));
    for (int i = 0; i < l; ++i)
        beta[static_cast<size_t>(i)] = lambda[static_cast<size_t>(i)] + (l - 1 - i);

    Integer total = 0;
    for (int i = 0; i < l; ++i) {
        int b = beta[static_cast<size_t>(i)];
        int nb = b - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int crossings = 0;
        for (int x : beta)
            if (x > nb && x < b) ++crossings;
        std::vector<int> nbeta = beta;
        nbeta[static_cast<size_t>(i)] = nb;
        std::sort(nbeta.rbegin(), nbeta.rend());
        Partition nl;
        const int nl_len = static_cast<int>(nbeta.size());
        for (int j = 0; j < nl_len; ++j) {
            int part = nbeta[static_cast<size_t>(j)] - (nl_len - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        Integer sub = mn_rec(nl, mu_rest, memo);
        total += (crossings % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Integer mn_character(const Partition& lambda, const Partition& mu) {
    if (partition_weight(lambda) != partition_weight(mu))
        throw std::invalid_argument("mn_character: weight mismatch");
    std::map<std::pair<Partition, Partition>, Integer> memo;
    return mn_rec(lambda, mu, memo);
}

Integer irrep_dimension(const Partition& lambda) {
    Partition ones(static_cast<size_t>(partition_weight(lambda)), 1);
    return mn_character(lambda, ones);
}

Rational ClassFunction::at(const Partition& mu) const {
    auto it = values.find(mu);
    return it == values.end() ? Rational(0) : it->second;
}

ClassFunction irreducible_character(const Partition& lambda) {
    ClassFunction chi;
    chi.weight = partition_weight(lambda);
    for (auto& mu : partitions(chi.weight))
        chi.values[mu] = Rational(mn_character(lambda, mu));
    return chi;
}

Rational inner_product(const ClassFunction& a, const ClassFunction& b) {
    if (a.weight != b.weight)
        throw std::invalid_argument("inner_product: weight mismatch");
    Rational sum = 0;
    for (auto& mu : partitions(a.weight))
        sum += Rational(class_size(mu)) * a.at(mu) * b.at(mu);
    return sum / Rational(factorial(static_cast<unsigned>(a.weight)));
}

Integer Decomposition::dimension() const {
    Integer d = 0;
    for (auto& [lambda, m] : multiplicities) d += m * irrep_dimension(lambda);
    return d;
}

Decomposition decompose(const ClassFunction& chi) {
    Decomposition d;
    d.weight = chi.weight;
    for (auto& lambda : partitions(chi.weight)) {
        Rational m = inner_product(chi, irreducible_character(lambda));
        if (m == 0) continue;
        if (m.get_den() != 1 || m < 0)
            throw std::invalid_argument(
                "decompose: multiplicity of " + partition_to_string(lambda) +
                " is " + to_string(m) + ", not a nonnegative integer");
        d.multiplicities[lambda] = static_cast<int>(m.get_num().get_si());
    }
    return d;
}

namespace {

// all partitions obtained from lambda by adding a horizontal strip of size r
// (interlacing condition: mu_1 >= lambda_1 >= mu_2 >= lambda_2 >= ...)
std::vector<Partition> add_horizontal_strips(const Partition& lambda, int r) {
    std::vector<Partition> out;
    Partition cur;
    const int rows = static_cast<int>(lambda.size());
    auto rec = [&](auto&& self, int row, int left) -> void {
        if (row == rows) {
            // optional new bottom row of size <= lambda_last (or anything if
            // lambda is empty), absorbing the rest
            int cap = lambda.empty() ? left : lambda.back();
            if (left == 0) {
                out.push_back(cur);
            } else if (left <= cap) {
                cur.push_back(left);
                out.push_back(cur);
                cur.pop_back();
            }
            return;
        }
        int lo = lambda[static_cast<size_t>(row)];
        int hi = row == 0
                     ? lo + left
                     : std::min(lambda[static_cast<size_t>(row - 1)], lo + left);
        for (int v = hi; v >= lo; --v) {
            cur.push_back(v);
            self(self, row + 1, left - (v - lo));
            cur.pop_back();
        }
    };
    rec(rec, 0, r);
    return out;
}

} // namespace

Decomposition pieri_row(const Decomposition& d, int r) {
    if (r < 0) throw std::invalid_argument("pieri_row: negative strip size");
    Decomposition out;
    out.weight = d.weight + r;
    for (auto& [lambda, m] : d.multiplicities)
        for (auto& mu : add_horizontal_strips(lambda, r))
            out.multiplicities[mu] += m;
    return out;
}

namespace {

MultiDegree multilinear_degree(int k) {
    MultiDegree d;
    for (int v = 1; v <= k; ++v) d[v] = 1;
    return d;
}

std::map<int, int> renaming_from_permutation(const std::vector<int>& sigma) {
    std::map<int, int> rename;
    for (size_t v = 1; v < sigma.size(); ++v)
        rename[static_cast<int>(v)] = sigma[v];
    return rename;
}

} // namespace

ClassFunction action_character(const std::vector<Polynomial>& basis, int k) {
    ClassFunction chi;
    chi.weight = k;
    if (basis.empty()) {
        for (auto& mu : partitions(k)) chi.values[mu] = 0;
        return chi;
    }
    Flavor flavor = basis.front().flavor();
    MultiDegree md = multilinear_degree(k);
    for (auto& b : basis)
        for (auto& [m, c] : b.terms())
            if (m.multidegree() != md)
                throw std::invalid_argument(
                    "action_character: basis is not multilinear in x_1..x_k");

    std::vector<Monomial> monos = component_basis_desc(md, flavor);
    std::map<Monomial, int, MonomialLess> index;
    for (size_t i = 0; i < monos.size(); ++i)
        index.emplace(monos[i], static_cast<int>(i));

    std::vector<SparseVector> vecs;
    for (auto& b : basis) {
        SparseVector v;
        for (auto& [m, c] : b.terms()) v.set(index.at(m), c);
        vecs.push_back(std::move(v));
    }
    // the trace is read off pivot coordinates, which requires the reduced
    // echelon basis of the span
    std::vector<SparseVector> ech = reduced_basis(std::move(vecs));
    if (ech.size() != basis.size())
        throw std::invalid_argument("action_character: basis is linearly dependent");
    const int dim = static_cast<int>(ech.size());
    std::vector<int> pivot(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i)
        pivot[static_cast<size_t>(i)] = ech[static_cast<size_t>(i)].leading_column();

    // full stability verification is quadratic; sample on large spans
    const int stride = dim <= 256 ? 1 : dim / 16;

    for (auto& mu : partitions(k)) {
        auto rename = renaming_from_permutation(permutation_from_cycle_type(mu));
        Rational trace = 0;
        for (int i = 0; i < dim; ++i) {
            const SparseVector& v = ech[static_cast<size_t>(i)];
            SparseVector image;
            for (auto& [j, c] : v.entries) {
                Monomial m = monos[static_cast<size_t>(j)].rename_variables(rename);
                image.set(index.at(m), image.at(index.at(m)) + c);
            }
            trace += image.at(pivot[static_cast<size_t>(i)]);
            if (i % stride == 0) {
                SparseVector residual = image;
                for (int j = 0; j < dim; ++j) {
                    Rational coeff = image.at(pivot[static_cast<size_t>(j)]);
                    if (coeff != 0)
                        residual.axpy_sub(coeff, ech[static_cast<size_t>(j)]);
                }
                if (!residual.is_zero())
                    throw std::invalid_argument(
                        "action_character: span is not stable under variable "
                        "permutation");
            }
        }
        chi.values[mu] = trace;
    }
    return chi;
}

Decomposition component_decomposition(int k, Flavor flavor) {
    if (k < 0) throw std::invalid_argument("negative degree");
    Decomposition d;
    d.weight = k;
    if (k == 0) {
        d.multiplicities[Partition{}] = 1;
        return d;
    }
    switch (flavor) {
    case Flavor::Magma:
    case Flavor::Associative: {
        Integer copies =
            flavor == Flavor::Magma ? catalan_numbers(k)[static_cast<size_t>(k)] : 1;
        for (auto& lambda : partitions(k)) {
            Integer m = copies * irrep_dimension(lambda);
            d.multiplicities[lambda] = static_cast<int>(m.get_si());
        }
        return d;
    }
    case Flavor::Commutative: {
        // permutation action on the monomial basis: trace = fixed monomials
        std::vector<Monomial> monos =
            enumerate_monomials(multilinear_degree(k), flavor);
        ClassFunction chi;
        chi.weight = k;
        for (auto& mu : partitions(k)) {
            auto rename = renaming_from_permutation(permutation_from_cycle_type(mu));
            int fixed = 0;
            for (auto& m : monos)
                if (m.rename_variables(rename) == m) ++fixed;
            chi.values[mu] = fixed;
        }
        return decompose(chi);
    }
    }
    throw std::logic_error("unreachable");
}

Decomposition constants_decomposition(int k, Flavor flavor, DecompMethod method) {
    if (k < 0) throw std::invalid_argument("negative degree");
    if (k == 0) {
        Decomposition d;
        d.weight = 0;
        d.multiplicities[Partition{}] = 1;
        return d;
    }
    if (method == DecompMethod::Kernel) {
        ConstantsBasis cb = constants_basis(multilinear_degree(k), flavor);
        return decompose(action_character(cb.basis, k));
    }
    // peel horizontal strips off the full component, degree by degree
    std::vector<Decomposition> C(static_cast<size_t>(k) + 1);
    C[0].weight = 0;
    C[0].multiplicities[Partition{}] = 1;
    for (int j = 1; j <= k; ++j) {
        Decomposition rem = component_decomposition(j, flavor);
        for (int i = 0; i < j; ++i) {
            Decomposition layer = pieri_row(C[static_cast<size_t>(i)], j - i);
            for (auto& [lambda, m] : layer.multiplicities) {
                auto it = rem.multiplicities.find(lambda);
                int have = it == rem.multiplicities.end() ? 0 : it->second;
                if (have < m)
                    throw std::logic_error(
                        "constants_decomposition: negative multiplicity at " +
                        partition_to_string(lambda));
                if (have == m)
                    rem.multiplicities.erase(lambda);
                else
                    it->second = have - m;
            }
        }
        rem.weight = j;
        C[static_cast<size_t>(j)] = std::move(rem);
    }
    return C[static_cast<size_t>(k)];
}

} // namespace nalg
