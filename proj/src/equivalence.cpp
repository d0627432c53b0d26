#include "kodual/equivalence.hpp"

#include <algorithm>

namespace kodual {

namespace {

// Polarity (K, O, inclusion) of a ko-space with the set behind every polarity index.
struct SetPolarity {
    Polarity pol;
    std::vector<Subset> ksets;
    std::vector<Subset> osets;

    Index k_of(const Subset& s) const { return position(ksets, s); }
    Index o_of(const Subset& s) const { return position(osets, s); }

    static Index position(const std::vector<Subset>& v, const Subset& s) {
        auto it = std::find(v.begin(), v.end(), s);
        if (it == v.end()) throw TheoremViolation("set missing from its family");
        return static_cast<Index>(it - v.begin());
    }
};

SetPolarity set_polarity(const KoSpace& s) {
    const auto& kf = s.kfam().members();
    const auto& of = s.ofam().members();
    std::vector<std::string> kn, on;
    for (const auto& k : kf) kn.push_back(set_name(k, s.base().names()));
    for (const auto& u : of) on.push_back(set_name(u, s.base().names()));
    std::vector<Index> kpos, opos;
    SetPolarity sp;
    sp.pol = Polarity::from_predicate(
        kn, on, [&](Index a, Index b) { return kf[a].is_subset_of(of[b]); }, &kpos, &opos);
    sp.ksets.resize(kf.size());
    sp.osets.resize(of.size());
    for (Index i = 0; i < kf.size(); ++i) sp.ksets[kpos[i]] = kf[i];
    for (Index i = 0; i < of.size(); ++i) sp.osets[opos[i]] = of[i];
    return sp;
}

std::string quadruple_text(const Polarity& p, const Quadruple& q) {
    return "(" + p.k_names()[q.k] + "," + p.k_names()[q.l] + "," + p.o_names()[q.u] + "," + p.o_names()[q.v] + ")";
}

// Builds a ko-space over points given in natural name order.
Result<KoSpace> hat_kospace(const std::vector<std::string>& names, const std::function<bool(Index, Index)>& leq,
                            const std::vector<std::function<bool(Index)>>& ks,
                            const std::vector<std::function<bool(Index)>>& os) {
    std::vector<Index> pos;
    auto base = FinPoset::from_predicate(names, leq, &pos);
    auto build = [&](const std::vector<std::function<bool(Index)>>& preds) {
        std::vector<Subset> fam;
        for (const auto& in : preds) {
            Subset s(names.size());
            for (Index p = 0; p < names.size(); ++p)
                if (in(p)) s.set(pos[p]);
            fam.push_back(std::move(s));
        }
        return fam;
    };
    return validate_kospace(std::move(base), build(ks), build(os));
}

std::optional<std::string> distributivity_witness(const FinLattice& l) {
    for (Index k = 0; k < l.size(); ++k)
        for (Index u = 0; u < l.size(); ++u) {
            if (l.leq(k, u)) continue;
            for (Index c = 0; c < l.size(); ++c)
                if (l.leq(k, l.join(u, c)) && l.leq(l.meet(c, k), u))
                    return "(" + l.name(k) + "," + l.name(u) + "," + l.name(c) + ")";
        }
    return std::nullopt;
}

}  // namespace

BiDcpo kospace_to_bidcpo(const KoSpace& s) {
    auto b = validate_bidcpo(set_polarity(s).pol).value();
    if (auto q = distributivity_violation(b))
        throw TheoremViolation("bi-dcpo of a ko-space is not distributive: " + quadruple_text(b.pol(), *q));
    return b;
}

Result<KoSpace> bidcpo_to_kospace(const BiDcpo& b) {
    const auto& p = b.pol();
    if (auto q = distributivity_violation(b))
        return Diagnostic{"distributive", "violating quadruple " + quadruple_text(p, *q)};
    const auto cps = cp_pairs(p);
    std::vector<std::string> names;
    for (const auto& c : cps) names.push_back(p.k_names()[c.first]);
    std::vector<std::function<bool(Index)>> ks, os;
    for (Index k = 0; k < p.k_size(); ++k)
        ks.push_back([&, k](Index i) { return p.k_leq(cps[i].first, k); });
    for (Index u = 0; u < p.o_size(); ++u)
        os.push_back([&, u](Index i) { return p.related(cps[i].first, u); });
    return hat_kospace(
        names, [&](Index i, Index j) { return p.k_leq(cps[j].first, cps[i].first); }, ks, os);
}

EmbeddedBiDcpo bidcpo_to_embedded(const BiDcpo& b) {
    return validate_embedded(to_double_base(b.pol()).value()).value();
}

BiDcpo embedded_to_bidcpo(const EmbeddedBiDcpo& e) { return validate_bidcpo(to_polarity(e.dbl())).value(); }

EmbeddedBiDcpo kospace_to_embedded(const KoSpace& s) {
    auto ul = upset_lattice(s.base());
    const std::size_t n = ul.sets.size();
    Subset ks(n), os(n);
    for (Index i = 0; i < n; ++i) {
        if (s.kfam().contains(ul.sets[i])) ks.set(i);
        if (s.ofam().contains(ul.sets[i])) os.set(i);
    }
    return validate_embedded(DoubleBaseLattice::make(std::move(ul.lattice), ks, os).value()).value();
}

Result<KoSpace> embedded_to_kospace(const EmbeddedBiDcpo& e) {
    const auto& l = e.dbl().lattice();
    if (auto w = distributivity_witness(l))
        return Diagnostic{"distributive", "lattice fails the cut rule at " + *w};
    const auto cps = cp_pairs(l);
    std::vector<std::string> names;
    for (const auto& c : cps) names.push_back(l.name(c.first));
    std::vector<std::function<bool(Index)>> ks, os;
    for (Index k : e.dbl().k_elements()) ks.push_back([&, k](Index i) { return l.leq(cps[i].first, k); });
    for (Index u : e.dbl().o_elements()) os.push_back([&, u](Index i) { return l.leq(cps[i].first, u); });
    return hat_kospace(
        names, [&](Index i, Index j) { return l.leq(cps[j].first, cps[i].first); }, ks, os);
}

std::optional<std::vector<Index>> bidcpo_isomorphic(const BiDcpo& a, const BiDcpo& b) {
    return polarity_isomorphic(a.pol(), b.pol());
}

std::optional<std::vector<Index>> embedded_isomorphic(const EmbeddedBiDcpo& a, const EmbeddedBiDcpo& b) {
    return double_base_isomorphic(a.dbl(), b.dbl());
}

bool RoundtripReport::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string RoundtripReport::failures() const {
    std::string out;
    for (const auto& [name, ok] : checks)
        if (!ok) out += (out.empty() ? "" : ", ") + name;
    return out;
}

RoundtripReport object_roundtrips(const KoSpace& s) {
    RoundtripReport r;
    const auto b = kospace_to_bidcpo(s);
    const auto e = kospace_to_embedded(s);
    auto from_b = bidcpo_to_kospace(b);
    auto from_e = embedded_to_kospace(e);
    r.checks.emplace_back("kospace>bidcpo>kospace", from_b.ok() && kospace_isomorphic(s, from_b.value()));
    r.checks.emplace_back("kospace>embedded>kospace", from_e.ok() && kospace_isomorphic(s, from_e.value()));
    r.checks.emplace_back("bidcpo>kospace>bidcpo",
                          from_b.ok() && bidcpo_isomorphic(b, kospace_to_bidcpo(from_b.value())));
    r.checks.emplace_back("embedded>kospace>embedded",
                          from_e.ok() && embedded_isomorphic(e, kospace_to_embedded(from_e.value())));
    r.checks.emplace_back("bidcpo>embedded>bidcpo",
                          bidcpo_isomorphic(b, embedded_to_bidcpo(bidcpo_to_embedded(b))).has_value());
    r.checks.emplace_back("embedded>bidcpo>embedded",
                          embedded_isomorphic(e, bidcpo_to_embedded(embedded_to_bidcpo(e))).has_value());

    // The explicit unit x -> (up x, X minus down x), read through the point names.
    bool unit = from_b.ok();
    if (unit) {
        const auto& t = from_b.value();
        const auto& x = s.base();
        std::vector<Index> f;
        for (Index i = 0; i < x.size() && unit; ++i) {
            auto j = t.base().find(set_name(x.up(i), x.names()));
            unit = j.has_value();
            if (unit) f.push_back(*j);
        }
        for (Index i = 0; i < f.size() && unit; ++i)
            for (Index j = 0; j < f.size() && unit; ++j) unit = x.leq(i, j) == t.base().leq(f[i], f[j]);
        auto image = [&](const Subset& a) {
            Subset out(t.size());
            for (Index i : members(a)) out.set(f[i]);
            return out;
        };
        if (unit && f.size() == t.size()) {
            for (const auto& k : s.kfam().members()) unit = unit && t.kfam().contains(image(k));
            for (const auto& u : s.ofam().members()) unit = unit && t.ofam().contains(image(u));
            unit = unit && s.kfam().size() == t.kfam().size() && s.ofam().size() == t.ofam().size();
        } else {
            unit = false;
        }
    }
    r.checks.emplace_back("unit-map", unit);
    return r;
}

GaloisMorphism crelation_to_galois(const CRelation& r) {
    const auto a = set_polarity(r.source());
    const auto b = set_polarity(r.target());
    std::vector<Index> fwd, bwd;
    for (const auto& k : a.ksets) fwd.push_back(b.k_of(r.rel().forward(k)));
    for (const auto& u : b.osets) bwd.push_back(a.o_of(r.rel().universal_preimage(u)));
    return GaloisMorphism::make(a.pol, b.pol, std::move(fwd), std::move(bwd)).value();
}

Result<CRelation> galois_to_crelation(const GaloisMorphism& m) {
    auto b1 = validate_bidcpo(m.source());
    auto b2 = validate_bidcpo(m.target());
    if (!b1) return b1.diagnostics();
    if (!b2) return b2.diagnostics();
    auto s1 = bidcpo_to_kospace(b1.value());
    auto s2 = bidcpo_to_kospace(b2.value());
    if (!s1) return s1.diagnostics();
    if (!s2) return s2.diagnostics();
    const auto& p1 = m.source();
    const auto& p2 = m.target();
    const auto& x1 = s1.value().base();
    const auto& x2 = s2.value().base();
    const auto cps2 = cp_pairs(p2);
    std::vector<Index> u_of(x2.size());
    for (Index y = 0; y < x2.size(); ++y) {
        const Index k = p2.k_index(x2.name(y));
        auto it = std::find_if(cps2.begin(), cps2.end(), [&](const IndexPair& c) { return c.first == k; });
        u_of[y] = it->second;
    }
    std::vector<Subset> images(x1.size(), x2.empty());
    for (Index x = 0; x < x1.size(); ++x) {
        const Index kx = m.fwd()[p1.k_index(x1.name(x))];
        for (Index y = 0; y < x2.size(); ++y)
            if (!p2.related(kx, u_of[y])) images[x].set(y);
    }
    WeakRel rel(x1, x2, std::move(images));
    return validate_crelation(std::move(rel), std::move(s1).value(), std::move(s2).value());
}

BiDcpo lawson_dual(const BiDcpo& b) { return validate_bidcpo(b.pol().dual()).value(); }

GaloisMorphism lawson_dual_morphism(const GaloisMorphism& m) {
    return GaloisMorphism::make(m.target().dual(), m.source().dual(), m.bwd(), m.fwd()).value();
}

Result<AdjointPair> AdjointPair::make(FinLattice source, FinLattice target, std::vector<Index> fwd,
                                      std::vector<Index> bwd) {
    if (fwd.size() != source.size() || bwd.size() != target.size())
        return Diagnostic{"shape", "function tables do not match the lattices"};
    for (Index x = 0; x < source.size(); ++x)
        for (Index y = 0; y < target.size(); ++y)
            if (target.leq(fwd[x], y) != source.leq(x, bwd[y]))
                return Diagnostic{"adjunction", "x = " + source.name(x) + ", y = " + target.name(y)};
    AdjointPair a;
    a.source_ = std::move(source);
    a.target_ = std::move(target);
    a.fwd_ = std::move(fwd);
    a.bwd_ = std::move(bwd);
    return a;
}

AdjointPair crelation_adjoint(const WeakRel& r) {
    auto u1 = upset_lattice(r.source());
    auto u2 = upset_lattice(r.target());
    std::vector<Index> fwd, bwd;
    for (const auto& a : u1.sets) fwd.push_back(SetPolarity::position(u2.sets, r.forward(a)));
    for (const auto& b : u2.sets) bwd.push_back(SetPolarity::position(u1.sets, r.universal_preimage(b)));
    return AdjointPair::make(std::move(u1.lattice), std::move(u2.lattice), std::move(fwd), std::move(bwd)).value();
}

FinPoset cp_poset(const FinLattice& l, const PairSet& cps) {
    std::vector<std::string> names;
    for (const auto& c : cps) names.push_back(l.name(c.first));
    return FinPoset::from_predicate(names, [&](Index i, Index j) { return l.leq(cps[j].first, cps[i].first); });
}

RaneyReport raney_poset_roundtrip(const FinPoset& x) {
    RaneyReport rep;
    const auto ul = upset_lattice(x);
    const auto& l = ul.lattice;
    const auto cps = cp_pairs(l);
    std::vector<Index> image;
    bool ok = true;
    for (Index i = 0; i < x.size(); ++i) {
        const Index a = SetPolarity::position(ul.sets, x.up(i));
        const Index b = SetPolarity::position(ul.sets, x.full() - x.down(i));
        auto it = std::find(cps.begin(), cps.end(), IndexPair{a, b});
        if (it == cps.end()) {
            ok = false;
            continue;
        }
        image.push_back(static_cast<Index>(it - cps.begin()));
        rep.bijection.emplace_back(x.name(i), l.name(a) + "|" + l.name(b));
    }
    ok = ok && image.size() == cps.size();
    if (ok) {
        std::vector<Index> sorted(image);
        std::sort(sorted.begin(), sorted.end());
        ok = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    for (Index i = 0; ok && i < image.size(); ++i)
        for (Index j = 0; ok && j < image.size(); ++j)
            ok = x.leq(i, j) == l.leq(cps[image[j]].first, cps[image[i]].first);
    rep.ok = ok;
    return rep;
}

Result<RaneyReport> raney_lattice_roundtrip(const FinLattice& l) {
    if (!is_raney(l)) return Diagnostic{"raney", "lattice lacks enough completely prime pairs"};
    const auto cps = cp_pairs(l);
    const auto x = cp_poset(l, cps);
    const auto ul = upset_lattice(x);
    RaneyReport rep;
    std::vector<Index> alpha;
    bool ok = true;
    for (Index a = 0; a < l.size(); ++a) {
        Subset s(x.size());
        for (Index i = 0; i < cps.size(); ++i)
            if (l.leq(cps[i].first, a)) s.set(i);
        auto it = std::find(ul.sets.begin(), ul.sets.end(), s);
        if (it == ul.sets.end()) {
            ok = false;
            continue;
        }
        alpha.push_back(static_cast<Index>(it - ul.sets.begin()));
        rep.bijection.emplace_back(l.name(a), ul.lattice.name(alpha.back()));
        // beta: join of the first components recovers a
        Index join = l.bottom();
        for (Index i : members(s)) join = l.join(join, cps[i].first);
        ok = ok && join == a;
    }
    ok = ok && alpha.size() == ul.sets.size();
    for (Index a = 0; ok && a < alpha.size(); ++a)
        for (Index b = 0; ok && b < alpha.size(); ++b) ok = l.leq(a, b) == ul.lattice.leq(alpha[a], alpha[b]);
    rep.ok = ok;
    return rep;
}

BiDcpo upset_bidcpo(const FinPoset& d) {
    const auto ups = all_upsets(d);
    std::vector<std::string> names;
    for (const auto& u : ups) names.push_back(set_name(u, d.names()));
    return validate_bidcpo(
               Polarity::from_predicate(names, d.names(), [&](Index a, Index x) { return ups[a].test(x); }))
        .value();
}

Result<GaloisMorphism> scott_fn_to_galois(const FinPoset& d1, const FinPoset& d2, const std::vector<Index>& f) {
    if (f.size() != d2.size()) return Diagnostic{"shape", "map table does not match its domain"};
    for (Index y : f)
        if (y >= d1.size()) return Diagnostic{"shape", "map leaves its codomain"};
    for (Index x = 0; x < d2.size(); ++x)
        for (Index y : members(d2.up(x)))
            if (!d1.leq(f[x], f[y]))
                return Diagnostic{"monotone", d2.name(x) + " <= " + d2.name(y) + " but images are not ordered"};
    const auto b1 = upset_bidcpo(d1);
    const auto b2 = upset_bidcpo(d2);
    auto set_of = [](const Polarity& p, Index k) {
        Subset s(p.o_size());
        for (Index x : members(p.row(k))) s.set(x);
        return s;
    };
    std::vector<Index> fwd;
    for (Index k = 0; k < b1.pol().k_size(); ++k) {
        const Subset u = set_of(b1.pol(), k);
        Subset pre(d2.size());
        for (Index x = 0; x < d2.size(); ++x)
            if (u.test(f[x])) pre.set(x);
        Index hit = 0;
        for (Index l = 0; l < b2.pol().k_size(); ++l)
            if (b2.pol().row(l) == pre) hit = l;
        fwd.push_back(hit);
    }
    return GaloisMorphism::make(b1.pol(), b2.pol(), std::move(fwd), f);
}

}  // namespace kodual
