#pragma once

#include "kodual/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodual {

/// Family of upsets of some base poset, kept sorted and duplicate free.
/// The base is held by the owning structure.
class UpsetFamily {
public:
    UpsetFamily() = default;
    static Result<UpsetFamily> make(const FinPoset& base, std::vector<Subset> members, const std::string& label);

    const std::vector<Subset>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    const Subset& operator[](Index i) const { return members_[i]; }
    bool contains(const Subset& s) const;
    std::optional<Index> find(const Subset& s) const;

    friend bool operator==(const UpsetFamily& a, const UpsetFamily& b) { return a.members_ == b.members_; }

private:
    std::vector<Subset> members_;
};

/// Poset with families of k-sets and o-sets satisfying the ko-space axioms.
class KoSpace {
public:
    KoSpace() = default;

    const FinPoset& base() const { return base_; }
    const UpsetFamily& kfam() const { return kfam_; }
    const UpsetFamily& ofam() const { return ofam_; }
    std::size_t size() const { return base_.size(); }

    friend bool operator==(const KoSpace& a, const KoSpace& b) {
        return a.base_ == b.base_ && a.kfam_ == b.kfam_ && a.ofam_ == b.ofam_;
    }

private:
    friend Result<KoSpace> validate_kospace(FinPoset, std::vector<Subset>, std::vector<Subset>);
    FinPoset base_;
    UpsetFamily kfam_;
    UpsetFamily ofam_;
};

/// Checks upset membership and principality. Closure under (co)directed intersections/unions and
/// double compactness hold for every finite family, since a finite (co)directed family has a
/// greatest (least) member; kospace_axioms_literal re-checks them by enumeration.
Result<KoSpace> validate_kospace(FinPoset base, std::vector<Subset> kfam, std::vector<Subset> ofam);

/// Order-free axioms on a bare point set; the order is recovered from the o-sets.
Result<KoSpace> validate_kospace_alt(const std::vector<std::string>& points, const std::vector<Subset>& kfam,
                                     const std::vector<Subset>& ofam);

/// Literal check of codirected-intersection closure, directed-union closure and double compactness
/// by enumerating all subfamilies. Refuses families above kMaxEnumeratedFamily unless overridden.
Diagnostics kospace_axioms_literal(const FinPoset& base, const std::vector<Subset>& kfam,
                                   const std::vector<Subset>& ofam, bool override_guardrail = false);

KoSpace degroot_dual(const KoSpace& s);
KoSpace minimal_kospace(const FinPoset& p);
KoSpace from_dcpo(const FinPoset& d);

/// Finite topological space (opens closed under unions and intersections, T0).
class FinTopSpace {
public:
    FinTopSpace() = default;
    static Result<FinTopSpace> make(std::vector<std::string> points, std::vector<Subset> opens);

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<Subset>& opens() const { return opens_; }
    /// x <= y iff every open containing x contains y.
    FinPoset specialization() const;

private:
    std::vector<std::string> points_;
    std::vector<Subset> opens_;
};

/// (points, intersections of opens, opens). Every subset of a finite space is compact.
Result<KoSpace> from_topspace(const FinTopSpace& t);

/// Weakening relation between two ko-spaces sending k-sets forward and o-sets back.
class CRelation {
public:
    CRelation() = default;

    const WeakRel& rel() const { return rel_; }
    const KoSpace& source() const { return source_; }
    const KoSpace& target() const { return target_; }

    friend bool operator==(const CRelation& a, const CRelation& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.rel_ == b.rel_;
    }

private:
    friend Result<CRelation> validate_crelation(WeakRel, KoSpace, KoSpace);
    WeakRel rel_;
    KoSpace source_;
    KoSpace target_;
};

Result<CRelation> validate_crelation(WeakRel r, KoSpace source, KoSpace target);
CRelation identity_crelation(const KoSpace& s);
CRelation compose(const CRelation& r, const CRelation& s);
/// Converse relation between the de Groot duals (target dual to source dual).
CRelation crelation_degroot(const CRelation& r);

/// Forward image of codirected intersections and universal preimage of directed unions,
/// over all subfamilies (refuses families above kMaxEnumeratedFamily unless overridden).
bool esakia_check(const CRelation& r, bool override_guardrail = false);

std::optional<std::vector<Index>> kospace_isomorphic(const KoSpace& a, const KoSpace& b);

/// The two relations induced by an order isomorphism f (x R y iff f(x) <= y, and its inverse).
std::pair<CRelation, CRelation> iso_relations(const KoSpace& s, const KoSpace& t, const std::vector<Index>& f);

}  // namespace kodual
