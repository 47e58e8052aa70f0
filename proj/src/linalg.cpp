#include "nalg/linalg.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace nalg {

int SparseVector::leading_column() const {
    if (entries.empty()) throw std::domain_error("leading column of zero vector");
    return entries.front().first;
}

Rational SparseVector::at(int col) const {
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](auto& e, int c) { return e.first < c; });
    if (it == entries.end() || it->first != col) return Rational(0);
    return it->second;
}

void SparseVector::set(int col, const Rational& v) {
    auto it = std::lower_bound(entries.begin(), entries.end(), col,
                               [](auto& e, int c) { return e.first < c; });
    if (it != entries.end() && it->first == col) {
        if (v == 0)
            entries.erase(it);
        else
            it->second = v;
    } else if (v != 0) {
        entries.insert(it, {col, v});
    }
}

void SparseVector::axpy_sub(const Rational& f, const SparseVector& other) {
    if (f == 0) return;
    std::vector<std::pair<int, Rational>> merged;
    merged.reserve(entries.size() + other.entries.size());
    auto a = entries.begin();
    auto b = other.entries.begin();
    while (a != entries.end() || b != other.entries.end()) {
        if (b == other.entries.end() || (a != entries.end() && a->first < b->first)) {
            merged.push_back(*a++);
        } else if (a == entries.end() || b->first < a->first) {
            merged.emplace_back(b->first, -f * b->second);
            ++b;
        } else {
            Rational v = a->second - f * b->second;
            if (v != 0) merged.emplace_back(a->first, std::move(v));
            ++a;
            ++b;
        }
    }
    entries = std::move(merged);
}

void SparseVector::scale(const Rational& f) {
    if (f == 0) {
        entries.clear();
        return;
    }
    for (auto& [c, v] : entries) v *= f;
}

void SparseMatrix::add(int i, int j, const Rational& v) {
    SparseVector& r = rows_[static_cast<size_t>(i)];
    r.set(j, r.at(j) + v);
}

size_t SparseMatrix::nonzeros() const {
    size_t n = 0;
    for (auto& r : rows_) n += r.entries.size();
    return n;
}

namespace {

struct ForwardResult {
    SparseMatrix m;
    std::vector<std::pair<int, int>> pivots; // (col, row) in elimination order
};

// Markowitz pivoting: pick the entry minimizing (row_nnz-1)*(col_nnz-1),
// stopping the scan early at a zero score. On derivation matrices this keeps
// the elimination essentially fill-free.
ForwardResult forward_eliminate(SparseMatrix m, bool parallel) {
    const int nrows = m.rows();
    std::vector<char> active(static_cast<size_t>(nrows), 1);
    std::vector<int> colcount(static_cast<size_t>(m.cols()), 0);
    for (int i = 0; i < nrows; ++i)
        for (auto& [j, v] : m.row(i).entries) ++colcount[static_cast<size_t>(j)];

    std::vector<std::pair<int, int>> pivots;
    for (;;) {
        long best = -1;
        int pi = -1, pj = -1;
        for (int i = 0; i < nrows && best != 0; ++i) {
            if (!active[static_cast<size_t>(i)] || m.row(i).entries.empty()) continue;
            long rn = static_cast<long>(m.row(i).entries.size()) - 1;
            for (auto& [j, v] : m.row(i).entries) {
                long score = rn * (colcount[static_cast<size_t>(j)] - 1);
                if (best < 0 || score < best) {
                    best = score;
                    pi = i;
                    pj = j;
                    if (best == 0) break;
                }
            }
        }
        if (pi < 0) break;

        active[static_cast<size_t>(pi)] = 0;
        for (auto& [j, v] : m.row(pi).entries) --colcount[static_cast<size_t>(j)];
        pivots.emplace_back(pj, pi);

        std::vector<int> affected;
        for (int i = 0; i < nrows; ++i)
            if (active[static_cast<size_t>(i)] && m.row(i).at(pj) != 0)
                affected.push_back(i);
        if (affected.empty()) continue;

        const SparseVector& prow = m.row(pi);
        const Rational pval = prow.at(pj);
        const int naff = static_cast<int>(affected.size());

        for (int k = 0; k < naff; ++k)
            for (auto& [j, v] : m.row(affected[static_cast<size_t>(k)]).entries)
                --colcount[static_cast<size_t>(j)];

#pragma omp parallel for schedule(dynamic) if (parallel && naff > 8)
        for (int k = 0; k < naff; ++k) {
            SparseVector& r = m.row(affected[static_cast<size_t>(k)]);
            r.axpy_sub(r.at(pj) / pval, prow);
        }

        for (int k = 0; k < naff; ++k)
            for (auto& [j, v] : m.row(affected[static_cast<size_t>(k)]).entries)
                ++colcount[static_cast<size_t>(j)];
    }
    return {std::move(m), std::move(pivots)};
}

// Back-substitution pass: processed in reverse elimination order so every
// pivot row is already clean when it is used, then pivots normalized to 1.
void jordan_reduce(ForwardResult& f, bool parallel) {
    const int r = static_cast<int>(f.pivots.size());
    for (int k = r - 1; k >= 0; --k) {
        auto [pcol, prowi] = f.pivots[static_cast<size_t>(k)];
        const SparseVector& prow = f.m.row(prowi);
        const Rational pval = prow.at(pcol);
#pragma omp parallel for schedule(dynamic) if (parallel && k > 16)
        for (int j = 0; j < k; ++j) {
            SparseVector& rj = f.m.row(f.pivots[static_cast<size_t>(j)].second);
            Rational c = rj.at(pcol);
            if (c != 0) rj.axpy_sub(c / pval, prow);
        }
    }
    for (auto& [pcol, prowi] : f.pivots) {
        SparseVector& row = f.m.row(prowi);
        Rational pv = row.at(pcol);
        if (pv != 1) row.scale(Rational(1) / pv);
    }
}

} // namespace

EchelonResult eliminate(SparseMatrix m, bool parallel) {
    ForwardResult f = forward_eliminate(std::move(m), parallel);
    jordan_reduce(f, parallel);
    EchelonResult res;
    res.rows.reserve(f.pivots.size());
    for (size_t k = 0; k < f.pivots.size(); ++k) {
        res.rows.push_back(std::move(f.m.row(f.pivots[k].second)));
        res.pivots.emplace_back(f.pivots[k].first, static_cast<int>(k));
    }
    return res;
}

EchelonResult eliminate_reference(SparseMatrix m) {
    const int nrows = m.rows();
    std::vector<char> used(static_cast<size_t>(nrows), 0);
    std::vector<std::pair<int, int>> pivots; // (col, source row)
    for (int col = 0; col < m.cols(); ++col) {
        int pr = -1;
        for (int i = 0; i < nrows; ++i) {
            if (!used[static_cast<size_t>(i)] && m.row(i).at(col) != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        used[static_cast<size_t>(pr)] = 1;
        m.row(pr).scale(Rational(1) / m.row(pr).at(col));
        // full Gauss-Jordan: clear the column everywhere, pivot rows included
        for (int i = 0; i < nrows; ++i) {
            if (i == pr) continue;
            Rational c = m.row(i).at(col);
            if (c != 0) m.row(i).axpy_sub(c, m.row(pr));
        }
        pivots.emplace_back(col, pr);
    }
    EchelonResult res;
    for (auto& [col, pr] : pivots) {
        res.pivots.emplace_back(col, static_cast<int>(res.rows.size()));
        res.rows.push_back(std::move(m.row(pr)));
    }
    return res;
}

int rank(SparseMatrix m, bool parallel) {
    return static_cast<int>(forward_eliminate(std::move(m), parallel).pivots.size());
}

namespace {

std::vector<SparseVector> kernel_from_echelon(const EchelonResult& ech, int ncols) {
    std::map<int, int> pivot_of_col;
    for (auto& [c, r] : ech.pivots) pivot_of_col[c] = r;
    std::vector<SparseVector> kernel;
    for (int f = 0; f < ncols; ++f) {
        if (pivot_of_col.count(f)) continue;
        SparseVector v;
        for (auto& [c, r] : ech.pivots) {
            Rational coeff = ech.rows[static_cast<size_t>(r)].at(f);
            if (coeff != 0) v.set(c, -coeff);
        }
        v.set(f, 1);
        kernel.push_back(std::move(v));
    }
    return reduced_basis(std::move(kernel));
}

} // namespace

std::vector<SparseVector> nullspace(SparseMatrix m, bool parallel) {
    int nc = m.cols();
    return kernel_from_echelon(eliminate(std::move(m), parallel), nc);
}

std::vector<SparseVector> nullspace_reference(SparseMatrix m) {
    int nc = m.cols();
    return kernel_from_echelon(eliminate_reference(std::move(m)), nc);
}

std::vector<SparseVector> reduced_basis(std::vector<SparseVector> vecs) {
    std::map<int, SparseVector> basis; // leading column -> reduced vector
    for (SparseVector& v : vecs) {
        // clear every entry sitting on an existing leading column
        for (;;) {
            int hit_col = -1;
            Rational hit_val;
            for (auto& e : v.entries) {
                if (basis.count(e.first)) {
                    hit_col = e.first;
                    hit_val = e.second;
                    break;
                }
            }
            if (hit_col < 0) break;
            v.axpy_sub(hit_val, basis.at(hit_col));
        }
        if (v.is_zero()) continue;
        v.scale(Rational(1) / v.entries.front().second);
        int lead = v.leading_column();
        for (auto& [c, b] : basis) {
            Rational coeff = b.at(lead);
            if (coeff != 0) b.axpy_sub(coeff, v);
        }
        basis.emplace(lead, std::move(v));
    }
    std::vector<SparseVector> out;
    out.reserve(basis.size());
    for (auto& [c, b] : basis) out.push_back(std::move(b));
    return out;
}

std::vector<Rational> solve_dense(DenseMatrix a, std::vector<Rational> b) {
    return solve_dense_vector_rhs<Rational>(std::move(a), std::move(b), Rational(0));
}

} // namespace nalg
