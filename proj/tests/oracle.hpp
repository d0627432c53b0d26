#pragma once
// Brute-force reference implementations over plain boolean matrices. Nothing here calls the
// library's algorithms; structures are read through their raw order or relation tables only.

#include "kodual/bidcpo.hpp"
#include "kodual/order.hpp"
#include "kodual/polarity.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using Pairs = std::set<std::pair<std::size_t, std::size_t>>;
using Bits = std::vector<bool>;

inline Matrix order_of(const kodual::FinPoset& p) {
    Matrix m(p.size(), std::vector<bool>(p.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
        for (std::size_t j = 0; j < p.size(); ++j) m[i][j] = p.leq(i, j);
    return m;
}

inline Matrix relation_of(const kodual::Polarity& p) {
    Matrix m(p.k_size(), std::vector<bool>(p.o_size()));
    for (std::size_t k = 0; k < p.k_size(); ++k)
        for (std::size_t u = 0; u < p.o_size(); ++u) m[k][u] = p.related(k, u);
    return m;
}

inline Bits bits_of(const kodual::Subset& s) {
    Bits b(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) b[i] = s.test(i);
    return b;
}

inline std::vector<Bits> all_subsets(std::size_t n) {
    std::vector<Bits> out;
    for (std::size_t m = 0; m < (std::size_t{1} << n); ++m) {
        Bits b(n);
        for (std::size_t i = 0; i < n; ++i) b[i] = (m >> i) & 1;
        out.push_back(b);
    }
    return out;
}

inline std::vector<Bits> all_upsets(const Matrix& leq) {
    std::vector<Bits> out;
    for (const auto& s : all_subsets(leq.size())) {
        bool up = true;
        for (std::size_t x = 0; x < leq.size(); ++x)
            for (std::size_t y = 0; y < leq.size(); ++y)
                if (s[x] && leq[x][y] && !s[y]) up = false;
        if (up) out.push_back(s);
    }
    return out;
}

inline bool directed(const Matrix& leq, const Bits& s, bool co = false) {
    const auto n = leq.size();
    if (std::none_of(s.begin(), s.end(), [](bool b) { return b; })) return false;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!s[a] || !s[b]) continue;
            bool bound = false;
            for (std::size_t c = 0; c < n; ++c)
                if (s[c] && (co ? (leq[c][a] && leq[c][b]) : (leq[a][c] && leq[b][c]))) bound = true;
            if (!bound) return false;
        }
    return true;
}

inline std::optional<std::size_t> lub(const Matrix& leq, std::size_t a, std::size_t b) {
    const auto n = leq.size();
    for (std::size_t c = 0; c < n; ++c) {
        if (!leq[a][c] || !leq[b][c]) continue;
        bool least = true;
        for (std::size_t d = 0; d < n; ++d)
            if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
        if (least) return c;
    }
    return std::nullopt;
}

inline std::optional<std::size_t> glb(const Matrix& leq, std::size_t a, std::size_t b) {
    const auto n = leq.size();
    for (std::size_t c = 0; c < n; ++c) {
        if (!leq[c][a] || !leq[c][b]) continue;
        bool greatest = true;
        for (std::size_t d = 0; d < n; ++d)
            if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
        if (greatest) return c;
    }
    return std::nullopt;
}

/// a ^ (b v c) = (a ^ b) v (a ^ c) for all triples; the matrix must be a lattice.
inline bool lattice_distributive(const Matrix& leq) {
    const auto n = leq.size();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const auto lhs = glb(leq, a, *lub(leq, b, c));
                const auto rhs = lub(leq, *glb(leq, a, b), *glb(leq, a, c));
                if (lhs != rhs) return false;
            }
    return true;
}

/// Permutation search for an order isomorphism.
inline bool isomorphic(const Matrix& a, const Matrix& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> perm(a.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i)
            for (std::size_t j = 0; j < a.size() && ok; ++j) ok = a[i][j] == b[perm[i]][perm[j]];
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

/// Formal concepts by closing every subset of k-elements.
inline std::set<std::pair<Bits, Bits>> concepts(const Matrix& rel, std::size_t no) {
    const auto nk = rel.size();
    std::set<std::pair<Bits, Bits>> out;
    for (const auto& a : all_subsets(nk)) {
        Bits intent(no, true);
        for (std::size_t k = 0; k < nk; ++k)
            if (a[k])
                for (std::size_t u = 0; u < no; ++u) intent[u] = intent[u] && rel[k][u];
        Bits extent(nk, true);
        for (std::size_t u = 0; u < no; ++u)
            if (intent[u])
                for (std::size_t k = 0; k < nk; ++k) extent[k] = extent[k] && rel[k][u];
        out.emplace(extent, intent);
    }
    return out;
}

/// Concept order by extent inclusion.
inline Matrix concept_order(const std::set<std::pair<Bits, Bits>>& cs) {
    std::vector<Bits> ext;
    for (const auto& c : cs) ext.push_back(c.first);
    Matrix m(ext.size(), std::vector<bool>(ext.size()));
    for (std::size_t i = 0; i < ext.size(); ++i)
        for (std::size_t j = 0; j < ext.size(); ++j) {
            bool sub = true;
            for (std::size_t x = 0; x < ext[i].size(); ++x)
                if (ext[i][x] && !ext[j][x]) sub = false;
            m[i][j] = sub;
        }
    return m;
}

// Polarity orders: k <= l iff everything above l is above k; u <= v iff everything below u is below v.
inline bool k_leq(const Matrix& rel, std::size_t k, std::size_t l) {
    for (std::size_t u = 0; u < rel[l].size(); ++u)
        if (rel[l][u] && !rel[k][u]) return false;
    return true;
}
inline bool o_leq(const Matrix& rel, std::size_t u, std::size_t v) {
    for (std::size_t k = 0; k < rel.size(); ++k)
        if (rel[k][u] && !rel[k][v]) return false;
    return true;
}

/// First (k, l, u, v) in lexicographic order meeting the three premises with k not related to u.
inline std::optional<std::tuple<std::size_t, std::size_t, std::size_t, std::size_t>> distributivity_violation(
    const Matrix& rel, std::size_t no) {
    const auto nk = rel.size();
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t l = 0; l < nk; ++l)
            for (std::size_t u = 0; u < no; ++u)
                for (std::size_t v = 0; v < no; ++v) {
                    bool p1 = true;
                    for (std::size_t w = 0; w < no; ++w)
                        if (o_leq(rel, u, w) && rel[l][w] && !rel[k][w]) p1 = false;
                    const bool p2 = rel[l][v];
                    bool p3 = true;
                    for (std::size_t m = 0; m < nk; ++m)
                        if (rel[m][v] && k_leq(rel, m, k) && !rel[m][u]) p3 = false;
                    if (p1 && p2 && p3 && !rel[k][u]) return std::make_tuple(k, l, u, v);
                }
    return std::nullopt;
}

inline Pairs neswarrow_polarity(const Matrix& rel, std::size_t no) {
    const auto nk = rel.size();
    Pairs out;
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t u = 0; u < no; ++u) {
            if (rel[k][u]) continue;
            bool maximal = true, minimal = true;
            for (std::size_t v = 0; v < no; ++v)
                if (v != u && !rel[k][v] && o_leq(rel, u, v)) maximal = false;
            for (std::size_t l = 0; l < nk; ++l)
                if (l != k && !rel[l][u] && k_leq(rel, l, k)) minimal = false;
            if (maximal && minimal) out.emplace(k, u);
        }
    return out;
}

inline Pairs cp_polarity(const Matrix& rel, std::size_t no) {
    const auto nk = rel.size();
    Pairs out;
    for (std::size_t k = 0; k < nk; ++k)
        for (std::size_t u = 0; u < no; ++u) {
            if (rel[k][u]) continue;
            bool least = true, greatest = true;
            for (std::size_t l = 0; l < nk; ++l)
                if (!rel[l][u] && !k_leq(rel, k, l)) least = false;
            for (std::size_t v = 0; v < no; ++v)
                if (!rel[k][v] && !o_leq(rel, v, u)) greatest = false;
            if (least && greatest) out.emplace(k, u);
        }
    return out;
}

inline Pairs neswarrow_lattice(const Matrix& leq) {
    const auto n = leq.size();
    Pairs out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (leq[a][b]) continue;
            bool maximal = true, minimal = true;
            for (std::size_t c = 0; c < n; ++c) {
                if (c != b && !leq[a][c] && leq[b][c]) maximal = false;
                if (c != a && !leq[c][b] && leq[c][a]) minimal = false;
            }
            if (maximal && minimal) out.emplace(a, b);
        }
    return out;
}

/// Up(a) and down(b) partition the carrier.
inline Pairs cp_lattice(const Matrix& leq) {
    const auto n = leq.size();
    Pairs out;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            bool partition = true;
            for (std::size_t c = 0; c < n; ++c)
                if (leq[a][c] == leq[c][b]) partition = false;
            if (partition) out.emplace(a, b);
        }
    return out;
}

inline bool bifounded_lattice(const Matrix& leq) {
    const auto arrows = neswarrow_lattice(leq);
    for (std::size_t a = 0; a < leq.size(); ++a)
        for (std::size_t b = 0; b < leq.size(); ++b) {
            if (leq[a][b]) continue;
            bool found = false;
            for (auto [c, d] : arrows)
                if (leq[c][a] && leq[b][d]) found = true;
            if (!found) return false;
        }
    return true;
}

inline bool raney(const Matrix& leq) {
    const auto cps = cp_lattice(leq);
    for (std::size_t a = 0; a < leq.size(); ++a)
        for (std::size_t b = 0; b < leq.size(); ++b) {
            if (leq[a][b]) continue;
            bool found = false;
            for (auto [k, u] : cps)
                if (leq[k][a] && leq[b][u]) found = true;
            if (!found) return false;
        }
    return true;
}

template <class PairSet>
Pairs to_pairs(const PairSet& ps) {
    Pairs out;
    for (const auto& p : ps) out.emplace(p.first, p.second);
    return out;
}

}  // namespace oracle

namespace oracle {

inline bool subset_bits(const Bits& a, const Bits& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && !b[i]) return false;
    return true;
}

/// Indices of subfamilies that are directed (or codirected) under inclusion.
inline std::vector<std::vector<std::size_t>> directed_subfamilies(const std::vector<Bits>& fam, bool co) {
    Matrix incl(fam.size(), std::vector<bool>(fam.size()));
    for (std::size_t i = 0; i < fam.size(); ++i)
        for (std::size_t j = 0; j < fam.size(); ++j) incl[i][j] = subset_bits(fam[i], fam[j]);
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : all_subsets(fam.size())) {
        if (!directed(incl, s, co)) continue;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < s.size(); ++i)
            if (s[i]) idx.push_back(i);
        out.push_back(idx);
    }
    return out;
}

/// Literal ko-space axioms: upsets, closure, double compactness, principality.
inline bool ko_axioms(const Matrix& leq, const std::vector<Bits>& kfam, const std::vector<Bits>& ofam) {
    const auto n = leq.size();
    const auto ups = all_upsets(leq);
    auto is_up = [&](const Bits& s) { return std::find(ups.begin(), ups.end(), s) != ups.end(); };
    auto has = [](const std::vector<Bits>& f, const Bits& s) { return std::find(f.begin(), f.end(), s) != f.end(); };
    for (const auto& s : kfam)
        if (!is_up(s)) return false;
    for (const auto& s : ofam)
        if (!is_up(s)) return false;
    for (const auto& fam : directed_subfamilies(kfam, true)) {
        Bits meet(n, true);
        for (auto i : fam)
            for (std::size_t x = 0; x < n; ++x) meet[x] = meet[x] && kfam[i][x];
        if (!has(kfam, meet)) return false;
        for (const auto& u : ofam)
            if (subset_bits(meet, u) &&
                std::none_of(fam.begin(), fam.end(), [&](std::size_t i) { return subset_bits(kfam[i], u); }))
                return false;
    }
    for (const auto& fam : directed_subfamilies(ofam, false)) {
        Bits join(n, false);
        for (auto i : fam)
            for (std::size_t x = 0; x < n; ++x) join[x] = join[x] || ofam[i][x];
        if (!has(ofam, join)) return false;
        for (const auto& k : kfam)
            if (subset_bits(k, join) &&
                std::none_of(fam.begin(), fam.end(), [&](std::size_t i) { return subset_bits(k, ofam[i]); }))
                return false;
    }
    for (std::size_t x = 0; x < n; ++x) {
        Bits up(n), co_down(n);
        for (std::size_t y = 0; y < n; ++y) {
            up[y] = leq[x][y];
            co_down[y] = !leq[y][x];
        }
        if (!has(kfam, up) || !has(ofam, co_down)) return false;
    }
    return true;
}

}  // namespace oracle
