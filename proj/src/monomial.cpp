#include "nalg/monomial.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace nalg {

const char* to_string(Flavor f) {
    switch (f) {
    case Flavor::Magma: return "magma";
    case Flavor::Commutative: return "commutative";
    case Flavor::Associative: return "associative";
    }
    return "?";
}

Flavor flavor_from_string(const std::string& s) {
    if (s == "magma") return Flavor::Magma;
    if (s == "commutative") return Flavor::Commutative;
    if (s == "associative") return Flavor::Associative;
    throw std::invalid_argument("unknown flavor: '" + s + "'");
}

int total_degree(const MultiDegree& d) {
    int t = 0;
    for (auto& [v, e] : d) t += e;
    return t;
}

MultiDegree multidegree_add(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (auto& [v, e] : b) {
        r[v] += e;
        if (r[v] == 0) r.erase(v);
    }
    return r;
}

MultiDegree multidegree_sub(const MultiDegree& a, const MultiDegree& b) {
    MultiDegree r = a;
    for (auto& [v, e] : b) {
        auto it = r.find(v);
        if (it == r.end() || it->second < e)
            throw std::invalid_argument("multidegree subtraction underflow");
        it->second -= e;
        if (it->second == 0) r.erase(it);
    }
    return r;
}

bool multidegree_leq(const MultiDegree& a, const MultiDegree& b) {
    for (auto& [v, e] : a) {
        auto it = b.find(v);
        if (it == b.end() || it->second < e) return false;
    }
    return true;
}

std::vector<MultiDegree> multidegrees_below(const MultiDegree& d) {
    std::vector<MultiDegree> out{MultiDegree{}};
    for (auto& [v, e] : d) {
        std::vector<MultiDegree> next;
        for (auto& base : out)
            for (int i = 0; i <= e; ++i) {
                MultiDegree m = base;
                if (i > 0) m[v] = i;
                next.push_back(std::move(m));
            }
        out = std::move(next);
    }
    return out;
}

std::vector<MultiDegree> multidegrees_of_total(int m, int total) {
    std::vector<MultiDegree> out;
    MultiDegree cur;
    // lexicographic over (d_1, ..., d_m)
    auto rec = [&](auto&& self, int var, int left) -> void {
        if (var == m) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (int e = left; e >= 0; --e) {
            if (e > 0) cur[var + 1] = e;
            self(self, var + 1, left - e);
            cur.erase(var + 1);
        }
    };
    rec(rec, 0, total);
    return out;
}

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(Flavor f, std::vector<int32_t> code)
    : flavor_(f), code_(std::move(code)) {
    for (int32_t c : code_)
        if (c > 0) ++degree_;
}

Monomial Monomial::leaf(Flavor f, int var) {
    if (var < 1) throw std::invalid_argument("variable index must be >= 1");
    return Monomial(f, {var});
}

Monomial Monomial::word(Flavor f, const std::vector<int>& letters) {
    if (f != Flavor::Associative)
        throw std::invalid_argument("word monomials require the associative flavor");
    std::vector<int32_t> code;
    code.reserve(letters.size());
    for (int v : letters) {
        if (v < 1) throw std::invalid_argument("variable index must be >= 1");
        code.push_back(v);
    }
    return Monomial(f, std::move(code));
}

Monomial Monomial::node(const Monomial& left, const Monomial& right) {
    if (left.flavor_ != right.flavor_)
        throw std::invalid_argument("flavor mismatch in product");
    if (left.is_unit()) return right;
    if (right.is_unit()) return left;
    Flavor f = left.flavor_;
    std::vector<int32_t> code;
    switch (f) {
    case Flavor::Associative:
        code = left.code_;
        code.insert(code.end(), right.code_.begin(), right.code_.end());
        break;
    case Flavor::Commutative: {
        const Monomial* a = &left;
        const Monomial* b = &right;
        if (compare(right, left) < 0) std::swap(a, b);
        code.reserve(1 + a->code_.size() + b->code_.size());
        code.push_back(-1);
        code.insert(code.end(), a->code_.begin(), a->code_.end());
        code.insert(code.end(), b->code_.begin(), b->code_.end());
        break;
    }
    case Flavor::Magma:
        code.reserve(1 + left.code_.size() + right.code_.size());
        code.push_back(-1);
        code.insert(code.end(), left.code_.begin(), left.code_.end());
        code.insert(code.end(), right.code_.begin(), right.code_.end());
        break;
    }
    return Monomial(f, std::move(code));
}

bool Monomial::is_leaf() const {
    return code_.size() == 1 && code_[0] > 0;
}

int Monomial::leaf_var() const {
    if (!is_leaf()) throw std::logic_error("leaf_var on non-leaf");
    return code_[0];
}

MultiDegree Monomial::multidegree() const {
    MultiDegree d;
    for (int32_t c : code_)
        if (c > 0) ++d[c];
    return d;
}

int Monomial::degree_in(int var) const {
    int n = 0;
    for (int32_t c : code_)
        if (c == var) ++n;
    return n;
}

namespace {

// end (exclusive) of the subtree starting at pos in a preorder tree code
size_t subtree_end(const std::vector<int32_t>& code, size_t pos) {
    if (code[pos] > 0) return pos + 1;
    size_t mid = subtree_end(code, pos + 1);
    return subtree_end(code, mid);
}

int span_degree(const std::vector<int32_t>& code, size_t b, size_t e) {
    int n = 0;
    for (size_t i = b; i < e; ++i)
        if (code[i] > 0) ++n;
    return n;
}

int compare_tree_span(const std::vector<int32_t>& a, size_t ab, size_t ae,
                      const std::vector<int32_t>& b, size_t bb, size_t be) {
    int da = span_degree(a, ab, ae);
    int db = span_degree(b, bb, be);
    if (da != db) return da < db ? -1 : 1;
    if (da == 0) return 0; // both unit
    if (da == 1) {
        int va = a[ab], vb = b[bb];
        return va == vb ? 0 : (va < vb ? -1 : 1);
    }
    // both internal nodes: right factor first, then left factor
    size_t amid = subtree_end(a, ab + 1);
    size_t bmid = subtree_end(b, bb + 1);
    int c = compare_tree_span(a, amid, ae, b, bmid, be);
    if (c != 0) return c;
    return compare_tree_span(a, ab + 1, amid, b, bb + 1, bmid);
}

} // namespace

std::pair<Monomial, Monomial> Monomial::split() const {
    if (flavor_ == Flavor::Associative)
        throw std::logic_error("split on associative monomial");
    if (degree_ < 2) throw std::logic_error("split on monomial of degree < 2");
    size_t mid = subtree_end(code_, 1);
    return {Monomial(flavor_, {code_.begin() + 1, code_.begin() + mid}),
            Monomial(flavor_, {code_.begin() + mid, code_.end()})};
}

std::vector<int> Monomial::letters() const {
    std::vector<int> out;
    out.reserve(degree_);
    for (int32_t c : code_)
        if (c > 0) out.push_back(c);
    return out;
}

Monomial Monomial::rename_variables(const std::map<int, int>& rename) const {
    auto mapped = [&](int v) {
        auto it = rename.find(v);
        return it == rename.end() ? v : it->second;
    };
    if (flavor_ == Flavor::Associative) {
        std::vector<int> w = letters();
        for (int& v : w) v = mapped(v);
        return word(flavor_, w);
    }
    if (is_unit()) return *this;
    // rebuild bottom-up so commutative reordering applies at every node
    auto rec = [&](auto&& self, size_t b, size_t e) -> Monomial {
        if (code_[b] > 0) return leaf(flavor_, mapped(code_[b]));
        size_t mid = subtree_end(code_, b + 1);
        return node(self(self, b + 1, mid), self(self, mid, e));
    };
    return rec(rec, 0, code_.size());
}

int compare(const Monomial& u, const Monomial& v) {
    if (u.flavor_ != v.flavor_)
        throw std::invalid_argument("flavor mismatch in compare");
    if (u.degree_ != v.degree_) return u.degree_ < v.degree_ ? -1 : 1;
    if (u.flavor_ == Flavor::Associative) {
        // same length; compare letters right to left
        for (size_t i = u.code_.size(); i-- > 0;) {
            if (u.code_[i] != v.code_[i])
                return u.code_[i] < v.code_[i] ? -1 : 1;
        }
        return 0;
    }
    return compare_tree_span(u.code_, 0, u.code_.size(), v.code_, 0,
                             v.code_.size());
}

Monomial canonicalize(const Monomial& magma_tree, Flavor flavor) {
    if (magma_tree.flavor() == flavor) {
        if (flavor != Flavor::Commutative) return magma_tree;
    } else if (magma_tree.flavor() != Flavor::Magma) {
        throw std::invalid_argument("canonicalize expects a magma tree");
    }
    if (magma_tree.is_unit()) return Monomial::unit(flavor);
    if (magma_tree.is_leaf())
        return Monomial::leaf(flavor, magma_tree.leaf_var());
    auto [l, r] = magma_tree.split();
    return Monomial::node(canonicalize(l, flavor), canonicalize(r, flavor));
}

namespace {

using MonoList = std::vector<Monomial>;

const MonoList& enumerate_rec(const MultiDegree& d, Flavor flavor,
                              std::map<MultiDegree, MonoList>& memo) {
    auto it = memo.find(d);
    if (it != memo.end()) return it->second;
    MonoList out;
    int n = total_degree(d);
    if (n == 0) {
        out.push_back(Monomial::unit(flavor));
    } else if (n == 1) {
        out.push_back(Monomial::leaf(flavor, d.begin()->first));
    } else if (flavor == Flavor::Associative) {
        std::vector<int> w;
        for (auto& [v, e] : d) w.insert(w.end(), e, v);
        do {
            out.push_back(Monomial::word(flavor, w));
        } while (std::next_permutation(w.begin(), w.end()));
    } else {
        std::set<Monomial, MonomialLess> seen; // dedupes commutative swaps
        for (auto& d1 : multidegrees_below(d)) {
            int t1 = total_degree(d1);
            if (t1 == 0 || t1 == n) continue;
            MultiDegree d2 = multidegree_sub(d, d1);
            // std::map references stay valid across the recursive inserts
            const MonoList& left = enumerate_rec(d1, flavor, memo);
            const MonoList& right = enumerate_rec(d2, flavor, memo);
            for (auto& l : left)
                for (auto& r : right)
                    seen.insert(Monomial::node(l, r));
        }
        out.assign(seen.begin(), seen.end());
    }
    std::sort(out.begin(), out.end(), MonomialLess{});
    return memo.emplace(d, std::move(out)).first->second;
}

} // namespace

std::vector<Monomial> enumerate_monomials(const MultiDegree& d, Flavor flavor) {
    std::map<MultiDegree, MonoList> memo;
    return enumerate_rec(d, flavor, memo);
}

} // namespace nalg
