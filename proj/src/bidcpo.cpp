#include "kodual/bidcpo.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "kodual/detail/subfamily.hpp"

namespace kodual {

Result<BiDcpo> validate_bidcpo(const Polarity& p) {
    if (!is_purified(p)) {
        auto d = to_double_base(p);  // reports the duplicated row or column
        return d.diagnostics();
    }
    BiDcpo b;
    b.pol_ = p;
    return b;
}

namespace {

std::string mask_name(std::uint32_t mask, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (Index i = 0; i < names.size(); ++i)
        if (mask >> i & 1) {
            if (!first) out += ',';
            out += names[i];
            first = false;
        }
    return out + "}";
}

}  // namespace

Diagnostics bidcpo_axioms_literal(const Polarity& p, bool override_guardrail) {
    Diagnostics diags;
    if (!is_purified(p)) return to_double_base(p).diagnostics();
    const std::size_t nk = p.k_size(), no = p.o_size();
    detail::for_each_directed_subset(nk, true, override_guardrail, [&](Index a, Index b) { return p.k_leq(a, b); },
                      [&](std::uint32_t mask) {
                          std::optional<Index> meet;
                          for (Index m = 0; m < nk && !meet; ++m) {
                              bool lower = true, greatest = true;
                              for (Index i = 0; i < nk; ++i)
                                  if (mask >> i & 1) lower = lower && p.k_leq(m, i);
                              if (!lower) continue;
                              for (Index c = 0; c < nk; ++c) {
                                  bool cl = true;
                                  for (Index i = 0; i < nk; ++i)
                                      if (mask >> i & 1) cl = cl && p.k_leq(c, i);
                                  if (cl && !p.k_leq(c, m)) greatest = false;
                              }
                              if (greatest) meet = m;
                          }
                          if (!meet) {
                              diags.push_back({"L1", "codirected " + mask_name(mask, p.k_names()) + " has no meet"});
                              return;
                          }
                          for (Index u = 0; u < no; ++u) {
                              if (!p.related(*meet, u)) continue;
                              bool found = false;
                              for (Index i = 0; i < nk && !found; ++i) found = (mask >> i & 1) && p.related(i, u);
                              if (!found)
                                  diags.push_back({"L2", "codirected " + mask_name(mask, p.k_names()) +
                                                             " is below " + p.o_names()[u] + " only in the limit"});
                          }
                      });
    detail::for_each_directed_subset(no, false, override_guardrail, [&](Index a, Index b) { return p.o_leq(a, b); },
                      [&](std::uint32_t mask) {
                          std::optional<Index> join;
                          for (Index m = 0; m < no && !join; ++m) {
                              bool upper = true, least = true;
                              for (Index i = 0; i < no; ++i)
                                  if (mask >> i & 1) upper = upper && p.o_leq(i, m);
                              if (!upper) continue;
                              for (Index c = 0; c < no; ++c) {
                                  bool cu = true;
                                  for (Index i = 0; i < no; ++i)
                                      if (mask >> i & 1) cu = cu && p.o_leq(i, c);
                                  if (cu && !p.o_leq(m, c)) least = false;
                              }
                              if (least) join = m;
                          }
                          if (!join) {
                              diags.push_back({"L1", "directed " + mask_name(mask, p.o_names()) + " has no join"});
                              return;
                          }
                          for (Index k = 0; k < nk; ++k) {
                              if (!p.related(k, *join)) continue;
                              bool found = false;
                              for (Index i = 0; i < no && !found; ++i) found = (mask >> i & 1) && p.related(k, i);
                              if (!found)
                                  diags.push_back({"L2", p.k_names()[k] + " is below directed " +
                                                             mask_name(mask, p.o_names()) + " only in the limit"});
                          }
                      });
    return diags;
}

Result<EmbeddedBiDcpo> validate_embedded(DoubleBaseLattice d) {
    // In a finite lattice a (co)directed subset of k- or o-elements contains its own meet or join,
    // so closure and double compactness hold for every double base lattice.
    EmbeddedBiDcpo e;
    e.dbl_ = std::move(d);
    return e;
}

std::optional<Quadruple> distributivity_violation(const BiDcpo& b) {
    const auto& p = b.pol();
    const std::size_t nk = p.k_size(), no = p.o_size();
    std::vector<Subset> below(nk), above(no);
    for (Index k = 0; k < nk; ++k) below[k] = p.k_below(k);
    for (Index u = 0; u < no; ++u) above[u] = p.o_above(u);
    for (Index k = 0; k < nk; ++k)
        for (Index l = 0; l < nk; ++l)
            for (Index u = 0; u < no; ++u) {
                if (p.related(k, u)) continue;
                if (!(above[u] & p.row(l)).is_subset_of(p.row(k))) continue;
                for (Index v : members(p.row(l)))
                    if ((p.col(v) & below[k]).is_subset_of(p.col(u))) return Quadruple{k, l, u, v};
            }
    return std::nullopt;
}

bool is_distributive_bidcpo(const BiDcpo& b) { return !distributivity_violation(b); }

bool is_distributive_embedded(const EmbeddedBiDcpo& e) { return is_distributive_lattice(e.dbl().lattice()); }

PairSet neswarrow_pairs(const Polarity& p) {
    PairSet out;
    for (Index k = 0; k < p.k_size(); ++k)
        for (Index u = 0; u < p.o_size(); ++u) {
            if (p.related(k, u)) continue;
            bool maximal = true, minimal = true;
            for (Index v = 0; v < p.o_size() && maximal; ++v)
                if (v != u && !p.related(k, v) && p.o_leq(u, v)) maximal = false;
            for (Index l = 0; l < p.k_size() && minimal; ++l)
                if (l != k && !p.related(l, u) && p.k_leq(l, k)) minimal = false;
            if (maximal && minimal) out.push_back({k, u});
        }
    return out;
}

PairSet neswarrow_pairs(const FinLattice& l) {
    PairSet out;
    const std::size_t n = l.size();
    for (Index a = 0; a < n; ++a)
        for (Index b = 0; b < n; ++b) {
            if (l.leq(a, b)) continue;
            bool maximal = true, minimal = true;
            for (Index y = 0; y < n && maximal; ++y)
                if (y != b && !l.leq(a, y) && l.leq(b, y)) maximal = false;
            for (Index x = 0; x < n && minimal; ++x)
                if (x != a && !l.leq(x, b) && l.leq(x, a)) minimal = false;
            if (maximal && minimal) out.push_back({a, b});
        }
    return out;
}

bool is_bifounded(const Polarity& p) {
    const auto arrows = neswarrow_pairs(p);
    for (Index k = 0; k < p.k_size(); ++k)
        for (Index u = 0; u < p.o_size(); ++u) {
            if (p.related(k, u)) continue;
            bool dominated = std::any_of(arrows.begin(), arrows.end(), [&](const IndexPair& a) {
                return p.k_leq(a.first, k) && p.o_leq(u, a.second);
            });
            if (!dominated) return false;
        }
    return true;
}

bool is_bifounded(const FinLattice& l) {
    const auto arrows = neswarrow_pairs(l);
    for (Index a = 0; a < l.size(); ++a)
        for (Index b = 0; b < l.size(); ++b) {
            if (l.leq(a, b)) continue;
            bool dominated = std::any_of(arrows.begin(), arrows.end(), [&](const IndexPair& x) {
                return l.leq(x.first, a) && l.leq(b, x.second);
            });
            if (!dominated) return false;
        }
    return true;
}

PairSet cp_pairs(const Polarity& p) {
    PairSet out;
    for (Index k = 0; k < p.k_size(); ++k) {
        // u must be the greatest o-element not above k
        const Subset candidates = full_subset(p.o_size()) - p.row(k);
        std::optional<Index> greatest;
        for (Index u : members(candidates)) {
            bool top = true;
            for (Index v : members(candidates)) top = top && p.o_leq(v, u);
            if (top) greatest = u;
        }
        if (!greatest) continue;
        const Subset not_below = full_subset(p.k_size()) - p.col(*greatest);
        bool least = true;
        for (Index l : members(not_below)) least = least && p.k_leq(k, l);
        if (least && not_below.test(k)) out.push_back({k, *greatest});
    }
    return out;
}

PairSet cp_pairs(const FinLattice& l) {
    PairSet out;
    const Subset all = l.poset().full();
    for (Index a = 0; a < l.size(); ++a)
        for (Index b = 0; b < l.size(); ++b)
            if (!l.poset().up(a).intersects(l.poset().down(b)) && (l.poset().up(a) | l.poset().down(b)) == all)
                out.push_back({a, b});
    return out;
}

bool is_raney(const FinLattice& l) {
    const auto cps = cp_pairs(l);
    for (Index a = 0; a < l.size(); ++a)
        for (Index b = 0; b < l.size(); ++b) {
            if (l.leq(a, b)) continue;
            bool found = std::any_of(cps.begin(), cps.end(), [&](const IndexPair& c) {
                return l.leq(c.first, a) && l.leq(b, c.second);
            });
            if (!found) return false;
        }
    return true;
}

bool key_lemma_check(const FinLattice& l) {
    if (!is_distributive_lattice(l)) throw PreconditionError("lattice is not distributive");
    return cp_pairs(l) == neswarrow_pairs(l);
}

Result<BiDcpo> from_dcpo_filters(const FinPoset& d) {
    const auto fs = filters(d);
    Diagnostics diags;
    for (Index x = 0; x < d.size(); ++x)
        for (Index y = 0; y < d.size(); ++y) {
            if (d.leq(x, y)) continue;
            bool separated = std::any_of(fs.begin(), fs.end(), [&](const Subset& f) { return f.test(x) && !f.test(y); });
            if (!separated)
                diags.push_back({"open-filter-determined", "no filter contains " + d.name(x) + " but not " + d.name(y)});
        }
    if (!diags.empty()) return diags;
    std::vector<std::string> names;
    for (const auto& f : fs) {
        Index least = 0;
        for (Index m : members(f))
            if (f.is_subset_of(d.up(m))) least = m;
        names.push_back("^" + d.name(least));
    }
    return validate_bidcpo(
        Polarity::from_predicate(names, d.names(), [&](Index f, Index x) { return fs[f].test(x); }));
}

}  // namespace kodual
