#include "kodual/polarity.hpp"

#include <algorithm>
#include <set>

namespace kodual {

Polarity Polarity::from_predicate(const std::vector<std::string>& k, const std::vector<std::string>& o,
                                  const std::function<bool(Index, Index)>& rel, std::vector<Index>* kpos,
                                  std::vector<Index>* opos) {
    const auto ko = sorted_positions(k);
    const auto oo = sorted_positions(o);
    Polarity p;
    for (Index i : ko) p.knames_.push_back(k[i]);
    for (Index j : oo) p.onames_.push_back(o[j]);
    p.rows_.assign(k.size(), Subset(o.size()));
    p.cols_.assign(o.size(), Subset(k.size()));
    for (Index a = 0; a < k.size(); ++a)
        for (Index b = 0; b < o.size(); ++b)
            if (rel(ko[a], oo[b])) {
                p.rows_[a].set(b);
                p.cols_[b].set(a);
            }
    if (kpos) {
        kpos->assign(k.size(), 0);
        for (Index a = 0; a < ko.size(); ++a) (*kpos)[ko[a]] = a;
    }
    if (opos) {
        opos->assign(o.size(), 0);
        for (Index b = 0; b < oo.size(); ++b) (*opos)[oo[b]] = b;
    }
    return p;
}

Polarity Polarity::from_pairs(const std::vector<std::string>& k, const std::vector<std::string>& o,
                              const NamePairs& rel) {
    std::vector<Subset> rows(k.size(), Subset(o.size()));
    for (const auto& [a, b] : rel) {
        auto ia = std::find(k.begin(), k.end(), a);
        auto ib = std::find(o.begin(), o.end(), b);
        if (ia == k.end()) throw Error("unknown k-element '" + a + "'");
        if (ib == o.end()) throw Error("unknown o-element '" + b + "'");
        rows[ia - k.begin()].set(ib - o.begin());
    }
    return from_predicate(k, o, [&](Index a, Index b) { return rows[a].test(b); });
}

namespace {

Index find_name(const std::vector<std::string>& names, const std::string& name, const char* side) {
    auto it = std::lower_bound(names.begin(), names.end(), name,
                               [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    if (it == names.end() || *it != name) throw Error(std::string("unknown ") + side + "-element '" + name + "'");
    return static_cast<Index>(it - names.begin());
}

}  // namespace

Index Polarity::k_index(const std::string& name) const { return find_name(knames_, name, "k"); }
Index Polarity::o_index(const std::string& name) const { return find_name(onames_, name, "o"); }

NamePairs Polarity::pairs() const {
    NamePairs out;
    for (Index k = 0; k < k_size(); ++k)
        for (Index u : members(rows_[k])) out.emplace_back(knames_[k], onames_[u]);
    return out;
}

Subset Polarity::k_below(Index k) const {
    Subset s(k_size());
    for (Index l = 0; l < k_size(); ++l)
        if (k_leq(l, k)) s.set(l);
    return s;
}

Subset Polarity::k_above(Index k) const {
    Subset s(k_size());
    for (Index l = 0; l < k_size(); ++l)
        if (k_leq(k, l)) s.set(l);
    return s;
}

Subset Polarity::o_below(Index u) const {
    Subset s(o_size());
    for (Index v = 0; v < o_size(); ++v)
        if (o_leq(v, u)) s.set(v);
    return s;
}

Subset Polarity::o_above(Index u) const {
    Subset s(o_size());
    for (Index v = 0; v < o_size(); ++v)
        if (o_leq(u, v)) s.set(v);
    return s;
}

FinPoset Polarity::k_order() const {
    if (!is_purified(*this)) throw PreconditionError("polarity is not purified");
    return FinPoset::from_predicate(knames_, [&](Index a, Index b) { return k_leq(a, b); });
}

FinPoset Polarity::o_order() const {
    if (!is_purified(*this)) throw PreconditionError("polarity is not purified");
    return FinPoset::from_predicate(onames_, [&](Index a, Index b) { return o_leq(a, b); });
}

Subset Polarity::upper_bounds(const Subset& ks) const {
    Subset out = full_subset(o_size());
    for (Index k : members(ks)) out &= rows_[k];
    return out;
}

Subset Polarity::lower_bounds(const Subset& os) const {
    Subset out = full_subset(k_size());
    for (Index u : members(os)) out &= cols_[u];
    return out;
}

Polarity Polarity::dual() const {
    Polarity d;
    d.knames_ = onames_;
    d.onames_ = knames_;
    d.rows_ = cols_;
    d.cols_ = rows_;
    return d;
}

namespace {

std::optional<std::pair<Index, Index>> duplicate(const std::vector<Subset>& v) {
    for (Index a = 0; a < v.size(); ++a)
        for (Index b = a + 1; b < v.size(); ++b)
            if (v[a] == v[b]) return std::make_pair(a, b);
    return std::nullopt;
}

std::vector<Subset> rows_of(const Polarity& p) {
    std::vector<Subset> r;
    for (Index k = 0; k < p.k_size(); ++k) r.push_back(p.row(k));
    return r;
}

std::vector<Subset> cols_of(const Polarity& p) {
    std::vector<Subset> c;
    for (Index u = 0; u < p.o_size(); ++u) c.push_back(p.col(u));
    return c;
}

// Maps every index to the index of the first equal entry, then renumbers the representatives.
std::vector<Index> classes(const std::vector<Subset>& v, std::vector<Index>& reps) {
    std::vector<Index> cls(v.size());
    for (Index a = 0; a < v.size(); ++a) {
        auto it = std::find_if(reps.begin(), reps.end(), [&](Index r) { return v[r] == v[a]; });
        if (it == reps.end()) {
            cls[a] = reps.size();
            reps.push_back(a);
        } else {
            cls[a] = static_cast<Index>(it - reps.begin());
        }
    }
    return cls;
}

}  // namespace

bool is_purified(const Polarity& p) { return !duplicate(rows_of(p)) && !duplicate(cols_of(p)); }

Purification purify_with_map(const Polarity& p) {
    std::vector<Index> kreps, oreps;
    auto kc = classes(rows_of(p), kreps);
    auto oc = classes(cols_of(p), oreps);
    std::vector<std::string> kn, on;
    for (Index r : kreps) kn.push_back(p.k_names()[r]);
    for (Index r : oreps) on.push_back(p.o_names()[r]);
    auto q = Polarity::from_predicate(kn, on, [&](Index a, Index b) { return p.related(kreps[a], oreps[b]); });
    return {std::move(q), std::move(kc), std::move(oc)};
}

Polarity purify(const Polarity& p) { return purify_with_map(p).polarity; }

ConceptLattice::ConceptLattice(Polarity source, bool override_guardrail) : source_(std::move(source)) {
    const auto& p = source_;
    const std::size_t limit = std::size_t{1} << kMaxEnumeratedElements;
    std::set<Subset, bool (*)(const Subset&, const Subset&)> seen(subset_less);
    std::vector<Subset> intents{full_subset(p.o_size())};
    seen.insert(intents.front());
    for (Index k = 0; k < p.k_size(); ++k) {
        const std::size_t before = intents.size();
        for (std::size_t i = 0; i < before; ++i) {
            Subset c = intents[i] & p.row(k);
            if (seen.insert(c).second) {
                intents.push_back(std::move(c));
                if (intents.size() > limit && !override_guardrail)
                    throw GuardrailError("concept lattice exceeds " + std::to_string(limit) + " concepts");
            }
        }
    }
    intents.assign(seen.begin(), seen.end());
    std::vector<std::string> names;
    for (const auto& b : intents) {
        names.push_back("c" + std::to_string(concepts_.size()));
        concepts_.push_back({p.lower_bounds(b), b});
    }
    lattice_ = FinLattice::make(FinPoset::from_predicate(names, [&](Index a, Index b) {
        return concepts_[a].extent.is_subset_of(concepts_[b].extent);
    }));
    for (Index k = 0; k < p.k_size(); ++k) iota_k_.push_back(index_of_intent(p.row(k)));
    for (Index u = 0; u < p.o_size(); ++u) iota_o_.push_back(index_of_intent(p.o_above(u)));
}

Index ConceptLattice::index_of_intent(const Subset& intent) const {
    auto it = std::lower_bound(concepts_.begin(), concepts_.end(), intent,
                               [](const Concept& c, const Subset& b) { return subset_less(c.intent, b); });
    if (it == concepts_.end() || it->intent != intent) throw Error("not an intent of this polarity");
    return static_cast<Index>(it - concepts_.begin());
}

Index ConceptLattice::index_of_extent(const Subset& extent) const {
    return index_of_intent(source_.upper_bounds(extent));
}

ConceptLattice concept_lattice(const Polarity& p) { return ConceptLattice(p); }

Result<DoubleBaseLattice> DoubleBaseLattice::make(FinLattice lattice, Subset kset, Subset oset) {
    const std::size_t n = lattice.size();
    if (kset.size() != n || oset.size() != n) throw Error("designated subsets do not match the lattice");
    Diagnostics diags;
    for (Index a = 0; a < n; ++a) {
        if (lattice.join_of(lattice.poset().down(a) & kset) != a)
            diags.push_back({"join-density", "element " + lattice.name(a) + " is not a join of k-elements"});
        if (lattice.meet_of(lattice.poset().up(a) & oset) != a)
            diags.push_back({"meet-density", "element " + lattice.name(a) + " is not a meet of o-elements"});
    }
    if (!diags.empty()) return diags;
    DoubleBaseLattice d;
    d.lattice_ = std::move(lattice);
    d.kset_ = std::move(kset);
    d.oset_ = std::move(oset);
    return d;
}

namespace {

DoubleBaseLattice double_base_from(const ConceptLattice& cl) {
    Subset ks(cl.size()), os(cl.size());
    for (Index k = 0; k < cl.source().k_size(); ++k) ks.set(cl.iota_k(k));
    for (Index u = 0; u < cl.source().o_size(); ++u) os.set(cl.iota_o(u));
    return DoubleBaseLattice::make(cl.lattice(), ks, os).value();
}

std::optional<Diagnostic> purification_failure(const Polarity& p) {
    if (auto d = duplicate(rows_of(p)))
        return Diagnostic{"purified", "k-elements " + p.k_names()[d->first] + " and " + p.k_names()[d->second] +
                                          " have the same o-elements above them"};
    if (auto d = duplicate(cols_of(p)))
        return Diagnostic{"purified", "o-elements " + p.o_names()[d->first] + " and " + p.o_names()[d->second] +
                                          " have the same k-elements below them"};
    return std::nullopt;
}

}  // namespace

Result<DoubleBaseLattice> to_double_base(const Polarity& p) {
    if (auto d = purification_failure(p)) return *d;
    return double_base_from(ConceptLattice(p));
}

Polarity to_polarity(const DoubleBaseLattice& d) {
    const auto ks = d.k_elements();
    const auto os = d.o_elements();
    std::vector<std::string> kn, on;
    for (Index a : ks) kn.push_back(d.lattice().name(a));
    for (Index b : os) on.push_back(d.lattice().name(b));
    return Polarity::from_predicate(kn, on, [&](Index a, Index b) { return d.lattice().leq(ks[a], os[b]); });
}

std::vector<Index> double_base_unit(const DoubleBaseLattice& d, const ConceptLattice& cl) {
    const auto ks = d.k_elements();
    std::vector<Index> out;
    for (Index a = 0; a < d.lattice().size(); ++a) {
        Subset extent(ks.size());
        for (Index i = 0; i < ks.size(); ++i)
            if (d.lattice().leq(ks[i], a)) extent.set(i);
        out.push_back(cl.index_of_extent(extent));
    }
    return out;
}

RelStructure polarity_structure(const Polarity& p) {
    const std::size_t n = p.k_size() + p.o_size();
    RelStructure s;
    s.color.assign(p.k_size(), 0);
    s.color.resize(n, 1);
    std::vector<Subset> rel(n, Subset(n));
    for (Index k = 0; k < p.k_size(); ++k)
        for (Index u : members(p.row(k))) rel[k].set(p.k_size() + u);
    s.add_relation(std::move(rel));
    return s;
}

std::optional<std::vector<Index>> polarity_isomorphic(const Polarity& a, const Polarity& b) {
    if (a.k_size() != b.k_size() || a.o_size() != b.o_size()) return std::nullopt;
    return find_isomorphism(polarity_structure(a), polarity_structure(b));
}

std::optional<std::vector<Index>> double_base_isomorphic(const DoubleBaseLattice& a, const DoubleBaseLattice& b) {
    auto structure = [](const DoubleBaseLattice& d) {
        RelStructure s = poset_structure(d.lattice().poset());
        for (Index i = 0; i < s.size(); ++i)
            s.color[i] = (d.kset().test(i) ? 1u : 0u) | (d.oset().test(i) ? 2u : 0u);
        return s;
    };
    return find_isomorphism(structure(a), structure(b));
}

Result<GaloisMorphism> GaloisMorphism::make(Polarity source, Polarity target, std::vector<Index> fwd,
                                            std::vector<Index> bwd) {
    if (fwd.size() != source.k_size() || bwd.size() != target.o_size())
        return Diagnostic{"shape", "function tables do not match the polarities"};
    for (Index x : fwd)
        if (x >= target.k_size()) return Diagnostic{"shape", "forward map leaves the target k-elements"};
    for (Index x : bwd)
        if (x >= source.o_size()) return Diagnostic{"shape", "backward map leaves the source o-elements"};
    for (Index k = 0; k < source.k_size(); ++k)
        for (Index u = 0; u < target.o_size(); ++u)
            if (target.related(fwd[k], u) != source.related(k, bwd[u]))
                return Diagnostic{"galois", "k = " + source.k_names()[k] + ", u = " + target.o_names()[u] +
                                                ": fwd(k) rel u and k rel bwd(u) disagree"};
    GaloisMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.fwd_ = std::move(fwd);
    m.bwd_ = std::move(bwd);
    return m;
}

GaloisMorphism GaloisMorphism::identity(const Polarity& p) {
    std::vector<Index> f(p.k_size()), b(p.o_size());
    for (Index i = 0; i < f.size(); ++i) f[i] = i;
    for (Index i = 0; i < b.size(); ++i) b[i] = i;
    return make(p, p, std::move(f), std::move(b)).value();
}

GaloisMorphism compose(const GaloisMorphism& m, const GaloisMorphism& n) {
    if (!(m.target() == n.source())) throw Error("composition type error: target and source differ");
    std::vector<Index> f, b;
    for (Index k : m.fwd()) f.push_back(n.fwd()[k]);
    for (Index u : n.bwd()) b.push_back(m.bwd()[u]);
    return GaloisMorphism::make(m.source(), n.target(), std::move(f), std::move(b)).value();
}

std::optional<std::vector<Index>> galois_fwd_from_bwd(const Polarity& source, const Polarity& target,
                                                      const std::vector<Index>& bwd) {
    std::vector<Index> fwd;
    for (Index k = 0; k < source.k_size(); ++k) {
        Subset want(target.o_size());
        for (Index u = 0; u < target.o_size(); ++u)
            if (source.related(k, bwd[u])) want.set(u);
        std::optional<Index> hit;
        for (Index l = 0; l < target.k_size() && !hit; ++l)
            if (target.row(l) == want) hit = l;
        if (!hit) return std::nullopt;
        fwd.push_back(*hit);
    }
    return fwd;
}

std::optional<std::vector<Index>> galois_bwd_from_fwd(const Polarity& source, const Polarity& target,
                                                      const std::vector<Index>& fwd) {
    std::vector<Index> bwd;
    for (Index u = 0; u < target.o_size(); ++u) {
        Subset want(source.k_size());
        for (Index k = 0; k < source.k_size(); ++k)
            if (target.related(fwd[k], u)) want.set(k);
        std::optional<Index> hit;
        for (Index v = 0; v < source.o_size() && !hit; ++v)
            if (source.col(v) == want) hit = v;
        if (!hit) return std::nullopt;
        bwd.push_back(*hit);
    }
    return bwd;
}

Result<EmbeddedGaloisMorphism> EmbeddedGaloisMorphism::make(DoubleBaseLattice source, DoubleBaseLattice target,
                                                            std::vector<Index> fwd, std::vector<Index> bwd) {
    const auto& l1 = source.lattice();
    const auto& l2 = target.lattice();
    if (fwd.size() != l1.size() || bwd.size() != l2.size())
        return Diagnostic{"shape", "function tables do not match the lattices"};
    for (Index x : fwd)
        if (x >= l2.size()) return Diagnostic{"shape", "forward map leaves the target lattice"};
    for (Index y : bwd)
        if (y >= l1.size()) return Diagnostic{"shape", "backward map leaves the source lattice"};
    for (Index x = 0; x < l1.size(); ++x)
        for (Index y = 0; y < l2.size(); ++y)
            if (l2.leq(fwd[x], y) != l1.leq(x, bwd[y]))
                return Diagnostic{"adjunction", "x = " + l1.name(x) + ", y = " + l2.name(y)};
    for (Index k : source.k_elements())
        if (!target.kset().test(fwd[k]))
            return Diagnostic{"k-preservation", "fwd(" + l1.name(k) + ") is not a k-element"};
    for (Index u : target.o_elements())
        if (!source.oset().test(bwd[u]))
            return Diagnostic{"o-preservation", "bwd(" + l2.name(u) + ") is not an o-element"};
    EmbeddedGaloisMorphism m;
    m.source_ = std::move(source);
    m.target_ = std::move(target);
    m.fwd_ = std::move(fwd);
    m.bwd_ = std::move(bwd);
    return m;
}

EmbeddedGaloisMorphism galois_to_embedded(const GaloisMorphism& m) {
    if (auto d = purification_failure(m.source())) throw PreconditionError(d->message);
    if (auto d = purification_failure(m.target())) throw PreconditionError(d->message);
    const ConceptLattice c1(m.source()), c2(m.target());
    const auto& l1 = c1.lattice();
    const auto& l2 = c2.lattice();
    std::vector<Index> fwd, bwd;
    for (Index a = 0; a < l1.size(); ++a) {
        Index acc = l2.bottom();
        for (Index k : members(c1.concepts()[a].extent)) acc = l2.join(acc, c2.iota_k(m.fwd()[k]));
        fwd.push_back(acc);
    }
    for (Index b = 0; b < l2.size(); ++b) {
        Index acc = l1.top();
        for (Index u : members(c2.concepts()[b].intent)) acc = l1.meet(acc, c1.iota_o(m.bwd()[u]));
        bwd.push_back(acc);
    }
    return EmbeddedGaloisMorphism::make(double_base_from(c1), double_base_from(c2), std::move(fwd),
                                        std::move(bwd))
        .value();
}

GaloisMorphism embedded_to_galois(const EmbeddedGaloisMorphism& m) {
    const auto k1 = m.source().k_elements();
    const auto k2 = m.target().k_elements();
    const auto o1 = m.source().o_elements();
    const auto o2 = m.target().o_elements();
    auto position = [](const std::vector<Index>& xs, Index x) {
        auto it = std::lower_bound(xs.begin(), xs.end(), x);
        if (it == xs.end() || *it != x) throw Error("restriction leaves the designated subset");
        return static_cast<Index>(it - xs.begin());
    };
    std::vector<Index> fwd, bwd;
    for (Index k : k1) fwd.push_back(position(k2, m.fwd()[k]));
    for (Index u : o2) bwd.push_back(position(o1, m.bwd()[u]));
    return GaloisMorphism::make(to_polarity(m.source()), to_polarity(m.target()), std::move(fwd), std::move(bwd))
        .value();
}

}  // namespace kodual
