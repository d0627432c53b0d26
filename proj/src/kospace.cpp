#include "kodual/kospace.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

#include "kodual/detail/subfamily.hpp"

namespace kodual {

using detail::Mask;

Result<UpsetFamily> UpsetFamily::make(const FinPoset& base, std::vector<Subset> ms, const std::string& label) {
    Diagnostics diags;
    for (const auto& m : ms) {
        if (m.size() != base.size()) {
            diags.push_back({"shape", label + " member has the wrong carrier size"});
            continue;
        }
        for (Index x : kodual::members(m)) {
            Subset missing = base.up(x) - m;
            if (missing.any()) {
                diags.push_back({"upset", label + " member " + set_name(m, base.names()) + " contains " +
                                              base.name(x) + " but not " + base.name(missing.find_first())});
                break;
            }
        }
    }
    if (!diags.empty()) return diags;
    UpsetFamily f;
    f.members_ = std::move(ms);
    sort_unique(f.members_);
    return f;
}

bool UpsetFamily::contains(const Subset& s) const { return find(s).has_value(); }

std::optional<Index> UpsetFamily::find(const Subset& s) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), s, subset_less);
    if (it == members_.end() || *it != s) return std::nullopt;
    return static_cast<Index>(it - members_.begin());
}

Result<KoSpace> validate_kospace(FinPoset base, std::vector<Subset> kfam, std::vector<Subset> ofam) {
    auto k = UpsetFamily::make(base, std::move(kfam), "K");
    auto o = UpsetFamily::make(base, std::move(ofam), "O");
    Diagnostics diags;
    if (!k) diags = k.diagnostics();
    if (!o) diags.insert(diags.end(), o.diagnostics().begin(), o.diagnostics().end());
    if (!diags.empty()) return diags;
    for (Index x = 0; x < base.size(); ++x) {
        if (!k.value().contains(base.up(x)))
            diags.push_back({"S3", "up-set of " + base.name(x) + " " + set_name(base.up(x), base.names()) +
                                       " is not a k-set"});
        const Subset avoid = base.full() - base.down(x);
        if (!o.value().contains(avoid))
            diags.push_back({"S3", "complement of the down-set of " + base.name(x) + " " +
                                       set_name(avoid, base.names()) + " is not an o-set"});
    }
    if (!diags.empty()) return diags;
    KoSpace s;
    s.base_ = std::move(base);
    s.kfam_ = std::move(k).value();
    s.ofam_ = std::move(o).value();
    return s;
}

Result<KoSpace> validate_kospace_alt(const std::vector<std::string>& points, const std::vector<Subset>& kfam,
                                     const std::vector<Subset>& ofam) {
    const std::size_t n = points.size();
    const Subset all = full_subset(n);
    Diagnostics diags;
    for (const auto* fam : {&kfam, &ofam})
        for (const auto& m : *fam)
            if (m.size() != n) return Diagnostic{"shape", "family member has the wrong carrier size"};
    for (const auto& u : ofam) {
        Subset acc(n);
        for (const auto& k : kfam)
            if (k.is_subset_of(u)) acc |= k;
        if (acc != u) diags.push_back({"A1", "o-set " + set_name(u, points) + " is not a union of k-sets"});
    }
    for (const auto& k : kfam) {
        Subset acc = all;
        for (const auto& u : ofam)
            if (k.is_subset_of(u)) acc &= u;
        if (acc != k) diags.push_back({"A1", "k-set " + set_name(k, points) + " is not an intersection of o-sets"});
    }
    for (Index x = 0; x < n; ++x)
        for (Index y = x + 1; y < n; ++y) {
            bool separated = std::any_of(ofam.begin(), ofam.end(),
                                         [&](const Subset& u) { return u.test(x) != u.test(y); });
            if (!separated) diags.push_back({"A2", "no o-set separates " + points[x] + " and " + points[y]});
        }
    for (Index x = 0; x < n; ++x) {
        Subset smallest = all;
        bool any = false;
        for (const auto& k : kfam)
            if (k.test(x)) {
                smallest &= k;
                any = true;
            }
        if (!any || std::find(kfam.begin(), kfam.end(), smallest) == kfam.end())
            diags.push_back({"A3", "no smallest k-set contains " + points[x]});
        Subset largest(n);
        any = false;
        for (const auto& u : ofam)
            if (!u.test(x)) {
                largest |= u;
                any = true;
            }
        if (!any || std::find(ofam.begin(), ofam.end(), largest) == ofam.end())
            diags.push_back({"A3", "no largest o-set avoids " + points[x]});
    }
    if (!diags.empty()) return diags;

    std::vector<Index> pos;
    auto base = FinPoset::from_predicate(
        points,
        [&](Index a, Index b) {
            return std::all_of(ofam.begin(), ofam.end(), [&](const Subset& u) { return !u.test(a) || u.test(b); });
        },
        &pos);
    auto remap = [&](const std::vector<Subset>& fam) {
        std::vector<Subset> out;
        for (const auto& m : fam) {
            Subset s(n);
            for (Index i : members(m)) s.set(pos[i]);
            out.push_back(std::move(s));
        }
        return out;
    };
    return validate_kospace(std::move(base), remap(kfam), remap(ofam));
}

namespace {

std::string family_name(const std::vector<Subset>& fam, Mask mask, const std::vector<std::string>& names) {
    std::string out = "{";
    bool first = true;
    for (Index i = 0; i < fam.size(); ++i)
        if (mask >> i & 1) {
            if (!first) out += ',';
            out += set_name(fam[i], names);
            first = false;
        }
    return out + "}";
}

}  // namespace

Diagnostics kospace_axioms_literal(const FinPoset& base, const std::vector<Subset>& kfam,
                                   const std::vector<Subset>& ofam, bool override_guardrail) {
    Diagnostics diags;
    const auto& names = base.names();
    auto in = [](const std::vector<Subset>& fam, const Subset& s) {
        return std::find(fam.begin(), fam.end(), s) != fam.end();
    };
    detail::for_each_directed_family(kfam, base.size(), true, override_guardrail, [&](Mask mask, const Subset& meet) {
        if (!in(kfam, meet))
            diags.push_back({"S1", "codirected intersection of " + family_name(kfam, mask, names) + " is not a k-set"});
        for (const auto& u : ofam) {
            if (!meet.is_subset_of(u)) continue;
            bool found = false;
            for (Index i = 0; i < kfam.size() && !found; ++i)
                found = (mask >> i & 1) && kfam[i].is_subset_of(u);
            if (!found)
                diags.push_back({"S2", "codirected " + family_name(kfam, mask, names) + " lies below o-set " +
                                           set_name(u, names) + " only in the limit"});
        }
    });
    detail::for_each_directed_family(ofam, base.size(), false, override_guardrail, [&](Mask mask, const Subset& join) {
        if (!in(ofam, join))
            diags.push_back({"S1", "directed union of " + family_name(ofam, mask, names) + " is not an o-set"});
        for (const auto& k : kfam) {
            if (!k.is_subset_of(join)) continue;
            bool found = false;
            for (Index i = 0; i < ofam.size() && !found; ++i)
                found = (mask >> i & 1) && k.is_subset_of(ofam[i]);
            if (!found)
                diags.push_back({"S2", "k-set " + set_name(k, names) + " is covered by directed " +
                                           family_name(ofam, mask, names) + " only in the limit"});
        }
    });
    return diags;
}

KoSpace degroot_dual(const KoSpace& s) {
    const Subset all = s.base().full();
    std::vector<Subset> k, o;
    for (const auto& u : s.ofam().members()) k.push_back(all - u);
    for (const auto& c : s.kfam().members()) o.push_back(all - c);
    return validate_kospace(s.base().dual(), std::move(k), std::move(o)).value();
}

KoSpace minimal_kospace(const FinPoset& p) {
    std::vector<Subset> k, o;
    for (Index x = 0; x < p.size(); ++x) {
        k.push_back(p.up(x));
        o.push_back(p.full() - p.down(x));
    }
    return validate_kospace(p, std::move(k), std::move(o)).value();
}

KoSpace from_dcpo(const FinPoset& d) {
    std::vector<Subset> k;
    for (Index x = 0; x < d.size(); ++x) k.push_back(d.up(x));
    return validate_kospace(d, std::move(k), all_upsets(d)).value();
}

Result<FinTopSpace> FinTopSpace::make(std::vector<std::string> points, std::vector<Subset> opens) {
    const std::size_t n = points.size();
    for (const auto& u : opens)
        if (u.size() != n) return Diagnostic{"shape", "open set has the wrong carrier size"};
    const auto order = sorted_positions(points);
    std::vector<Index> rank(n);
    for (Index r = 0; r < n; ++r) rank[order[r]] = r;
    FinTopSpace t;
    for (Index i : order) t.points_.push_back(points[i]);
    for (const auto& u : opens) {
        Subset s(n);
        for (Index i : members(u)) s.set(rank[i]);
        t.opens_.push_back(std::move(s));
    }
    sort_unique(t.opens_);
    Diagnostics diags;
    auto has = [&](const Subset& s) { return std::binary_search(t.opens_.begin(), t.opens_.end(), s, subset_less); };
    if (!has(Subset(n))) diags.push_back({"topology", "the empty set is not open"});
    if (!has(full_subset(n))) diags.push_back({"topology", "the whole space is not open"});
    for (std::size_t a = 0; a < t.opens_.size(); ++a)
        for (std::size_t b = a + 1; b < t.opens_.size(); ++b) {
            if (!has(t.opens_[a] | t.opens_[b]))
                diags.push_back({"topology", "union of " + set_name(t.opens_[a], t.points_) + " and " +
                                                 set_name(t.opens_[b], t.points_) + " is not open"});
            if (!has(t.opens_[a] & t.opens_[b]))
                diags.push_back({"topology", "intersection of " + set_name(t.opens_[a], t.points_) + " and " +
                                                 set_name(t.opens_[b], t.points_) + " is not open"});
        }
    for (Index x = 0; x < n; ++x)
        for (Index y = x + 1; y < n; ++y) {
            bool separated = std::any_of(t.opens_.begin(), t.opens_.end(),
                                         [&](const Subset& u) { return u.test(x) != u.test(y); });
            if (!separated) diags.push_back({"T0", "no open set separates " + t.points_[x] + " and " + t.points_[y]});
        }
    if (!diags.empty()) return diags;
    return t;
}

FinPoset FinTopSpace::specialization() const {
    return FinPoset::from_predicate(points_, [&](Index a, Index b) {
        return std::all_of(opens_.begin(), opens_.end(), [&](const Subset& u) { return !u.test(a) || u.test(b); });
    });
}

Result<KoSpace> from_topspace(const FinTopSpace& t) {
    const std::size_t n = t.points().size();
    std::vector<Subset> ksat{full_subset(n)};
    for (const auto& u : t.opens()) {
        const std::size_t before = ksat.size();
        for (std::size_t i = 0; i < before; ++i) ksat.push_back(ksat[i] & u);
        sort_unique(ksat);
    }
    return validate_kospace(t.specialization(), std::move(ksat), t.opens());
}

Result<CRelation> validate_crelation(WeakRel r, KoSpace source, KoSpace target) {
    if (!(r.source() == source.base()) || !(r.target() == target.base()))
        return Diagnostic{"shape", "relation endpoints differ from the ko-space base posets"};
    Diagnostics diags;
    const auto& sn = source.base().names();
    const auto& tn = target.base().names();
    for (const auto& k : source.kfam().members()) {
        Subset img = r.forward(k);
        if (!target.kfam().contains(img))
            diags.push_back({"forward", "image of k-set " + set_name(k, sn) + " is " + set_name(img, tn) +
                                            ", not a k-set"});
    }
    for (const auto& u : target.ofam().members()) {
        Subset pre = r.universal_preimage(u);
        if (!source.ofam().contains(pre))
            diags.push_back({"preimage", "universal preimage of o-set " + set_name(u, tn) + " is " +
                                             set_name(pre, sn) + ", not an o-set"});
    }
    if (!diags.empty()) return diags;
    CRelation c;
    c.rel_ = std::move(r);
    c.source_ = std::move(source);
    c.target_ = std::move(target);
    return c;
}

CRelation identity_crelation(const KoSpace& s) { return validate_crelation(WeakRel::identity(s.base()), s, s).value(); }

CRelation compose(const CRelation& r, const CRelation& s) {
    if (!(r.target() == s.source())) throw Error("composition type error: target and source differ");
    return validate_crelation(weakrel_compose(r.rel(), s.rel()), r.source(), s.target()).value();
}

CRelation crelation_degroot(const CRelation& r) {
    return validate_crelation(r.rel().converse(), degroot_dual(r.target()), degroot_dual(r.source())).value();
}

bool esakia_check(const CRelation& r, bool override_guardrail) {
    bool ok = true;
    const auto& kf = r.source().kfam().members();
    detail::for_each_directed_family(kf, r.source().size(), true, override_guardrail, [&](Mask mask, const Subset& meet) {
        Subset images = r.target().base().full();
        for (Index i = 0; i < kf.size(); ++i)
            if (mask >> i & 1) images &= r.rel().forward(kf[i]);
        if (r.rel().forward(meet) != images) ok = false;
    });
    const auto& of = r.target().ofam().members();
    detail::for_each_directed_family(of, r.target().size(), false, override_guardrail, [&](Mask mask, const Subset& join) {
        Subset pre = r.source().base().empty();
        for (Index i = 0; i < of.size(); ++i)
            if (mask >> i & 1) pre |= r.rel().universal_preimage(of[i]);
        if (r.rel().universal_preimage(join) != pre) ok = false;
    });
    return ok;
}

namespace {

RelStructure kospace_structure(const KoSpace& s) {
    const std::size_t n = s.size(), nk = s.kfam().size(), no = s.ofam().size();
    const std::size_t total = n + nk + no;
    RelStructure st;
    st.color.assign(n, 0);
    st.color.resize(n + nk, 1);
    st.color.resize(total, 2);
    std::vector<Subset> order(total, Subset(total)), member(total, Subset(total));
    for (Index x = 0; x < n; ++x) {
        for (Index y : members(s.base().up(x))) order[x].set(y);
        for (Index i = 0; i < nk; ++i)
            if (s.kfam()[i].test(x)) member[x].set(n + i);
        for (Index i = 0; i < no; ++i)
            if (s.ofam()[i].test(x)) member[x].set(n + nk + i);
    }
    st.add_relation(std::move(order));
    st.add_relation(std::move(member));
    return st;
}

}  // namespace

std::optional<std::vector<Index>> kospace_isomorphic(const KoSpace& a, const KoSpace& b) {
    if (a.size() != b.size() || a.kfam().size() != b.kfam().size() || a.ofam().size() != b.ofam().size())
        return std::nullopt;
    auto iso = find_isomorphism(kospace_structure(a), kospace_structure(b));
    if (!iso) return std::nullopt;
    iso->resize(a.size());
    return iso;
}

std::pair<CRelation, CRelation> iso_relations(const KoSpace& s, const KoSpace& t, const std::vector<Index>& f) {
    std::vector<Index> inverse(f.size());
    for (Index x = 0; x < f.size(); ++x) inverse[f[x]] = x;
    std::vector<Subset> there, back;
    for (Index x = 0; x < s.size(); ++x) there.push_back(t.base().up(f[x]));
    for (Index y = 0; y < t.size(); ++y) back.push_back(s.base().up(inverse[y]));
    auto r = validate_crelation(WeakRel(s.base(), t.base(), std::move(there)), s, t).value();
    auto q = validate_crelation(WeakRel(t.base(), s.base(), std::move(back)), t, s).value();
    return {std::move(r), std::move(q)};
}

}  // namespace kodual
