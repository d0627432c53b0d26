#pragma once

#include "kodual/bidcpo.hpp"
#include "kodual/kospace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kodual {

/// (k-sets, o-sets, inclusion). Set names label both sides.
BiDcpo kospace_to_bidcpo(const KoSpace& s);

/// Points are the completely prime pairs named by their k-component; rejects with the
/// violating quadruple when the bi-dcpo is not distributive.
Result<KoSpace> bidcpo_to_kospace(const BiDcpo& b);

EmbeddedBiDcpo bidcpo_to_embedded(const BiDcpo& b);
BiDcpo embedded_to_bidcpo(const EmbeddedBiDcpo& e);

/// (Up(X), K, O).
EmbeddedBiDcpo kospace_to_embedded(const KoSpace& s);
/// Points are the lattice CP pairs named by their first component.
Result<KoSpace> embedded_to_kospace(const EmbeddedBiDcpo& e);

std::optional<std::vector<Index>> bidcpo_isomorphic(const BiDcpo& a, const BiDcpo& b);
std::optional<std::vector<Index>> embedded_isomorphic(const EmbeddedBiDcpo& a, const EmbeddedBiDcpo& b);

/// Outcome of the six pairwise roundtrips started from one ko-space.
struct RoundtripReport {
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const;
    std::string failures() const;
};
RoundtripReport object_roundtrips(const KoSpace& s);

/// (R[-] on k-sets, universal preimage on o-sets) between the associated bi-dcpos.
GaloisMorphism crelation_to_galois(const CRelation& r);
/// x R y iff fwd(k_x) is not below u_y, over the completely prime pairs of each side.
Result<CRelation> galois_to_crelation(const GaloisMorphism& m);

/// Swap sides and transpose; morphisms swap components and reverse direction.
BiDcpo lawson_dual(const BiDcpo& b);
GaloisMorphism lawson_dual_morphism(const GaloisMorphism& m);

/// Adjoint pair of lattice maps.
class AdjointPair {
public:
    static Result<AdjointPair> make(FinLattice source, FinLattice target, std::vector<Index> fwd,
                                    std::vector<Index> bwd);
    const FinLattice& source() const { return source_; }
    const FinLattice& target() const { return target_; }
    const std::vector<Index>& fwd() const { return fwd_; }
    const std::vector<Index>& bwd() const { return bwd_; }

private:
    FinLattice source_, target_;
    std::vector<Index> fwd_, bwd_;
};

/// (R[-], universal preimage) between the upset lattices of the base posets.
AdjointPair crelation_adjoint(const WeakRel& r);

/// Bijections recovered through completely prime pairs.
struct RaneyReport {
    bool ok = false;
    std::vector<std::pair<std::string, std::string>> bijection;  // element -> its image
};
/// x -> (up x, complement of down x) from X onto the CP pairs of Up(X).
RaneyReport raney_poset_roundtrip(const FinPoset& x);
/// a -> {(k,u) : k <= a} from L onto Up(CP(L)); inverse A -> join of the k. Rejects non-Raney L.
Result<RaneyReport> raney_lattice_roundtrip(const FinLattice& l);

/// Poset of completely prime pairs of a lattice, ordered by reverse order of the first component.
FinPoset cp_poset(const FinLattice& l, const PairSet& cps);

/// (U -> f^{-1}[U], f) from (Up(D1), D1, contains) to (Up(D2), D2, contains) for monotone f: D2 -> D1.
Result<GaloisMorphism> scott_fn_to_galois(const FinPoset& d1, const FinPoset& d2, const std::vector<Index>& f);
/// (Up(D), D, contains) with k-elements named by their set names.
BiDcpo upset_bidcpo(const FinPoset& d);

}  // namespace kodual
