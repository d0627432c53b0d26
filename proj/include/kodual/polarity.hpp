#pragma once

#include "kodual/order.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kodual {

/// Relation from a finite set of k-elements to a finite set of o-elements.
class Polarity {
public:
    Polarity() = default;
    /// Names are sorted on construction; `kpos`/`opos` receive each input position's new index.
    static Polarity from_predicate(const std::vector<std::string>& k, const std::vector<std::string>& o,
                                   const std::function<bool(Index, Index)>& rel,
                                   std::vector<Index>* kpos = nullptr, std::vector<Index>* opos = nullptr);
    static Polarity from_pairs(const std::vector<std::string>& k, const std::vector<std::string>& o,
                               const NamePairs& rel);

    std::size_t k_size() const { return knames_.size(); }
    std::size_t o_size() const { return onames_.size(); }
    const std::vector<std::string>& k_names() const { return knames_; }
    const std::vector<std::string>& o_names() const { return onames_; }
    Index k_index(const std::string& name) const;
    Index o_index(const std::string& name) const;

    bool related(Index k, Index u) const { return rows_[k].test(u); }
    const Subset& row(Index k) const { return rows_[k]; }  // o-elements above k
    const Subset& col(Index u) const { return cols_[u]; }  // k-elements below u
    NamePairs pairs() const;

    /// Specialization preorders.
    bool k_leq(Index k, Index l) const { return rows_[l].is_subset_of(rows_[k]); }
    bool o_leq(Index u, Index v) const { return cols_[u].is_subset_of(cols_[v]); }
    Subset k_below(Index k) const;  // {l : l <= k}
    Subset k_above(Index k) const;  // {l : k <= l}
    Subset o_below(Index u) const;
    Subset o_above(Index u) const;  // {v : u <= v}

    /// Specialization orders as posets; throws PreconditionError unless purified.
    FinPoset k_order() const;
    FinPoset o_order() const;

    Subset upper_bounds(const Subset& ks) const;  // ub_O: common o-elements above ks
    Subset lower_bounds(const Subset& os) const;  // lb_K: common k-elements below os

    /// Swaps the two sides (and transposes the relation).
    Polarity dual() const;

    friend bool operator==(const Polarity& a, const Polarity& b) {
        return a.knames_ == b.knames_ && a.onames_ == b.onames_ && a.rows_ == b.rows_;
    }

private:
    std::vector<std::string> knames_;
    std::vector<std::string> onames_;
    std::vector<Subset> rows_;
    std::vector<Subset> cols_;
};

bool is_purified(const Polarity& p);

/// Quotient by equal rows and equal columns; class representatives are the least names.
struct Purification {
    Polarity polarity;
    std::vector<Index> k_class;  // input k index -> result k index
    std::vector<Index> o_class;
};
Purification purify_with_map(const Polarity& p);
Polarity purify(const Polarity& p);

struct Concept {
    Subset extent;  // over k-elements
    Subset intent;  // over o-elements
};

/// All formal concepts, indexed in lexicographic order of their intents and named c0, c1, ...
class ConceptLattice {
public:
    explicit ConceptLattice(Polarity source, bool override_guardrail = false);

    const Polarity& source() const { return source_; }
    const std::vector<Concept>& concepts() const { return concepts_; }
    const FinLattice& lattice() const { return lattice_; }
    std::size_t size() const { return concepts_.size(); }
    Index index_of_intent(const Subset& intent) const;
    Index index_of_extent(const Subset& extent) const;
    Index iota_k(Index k) const { return iota_k_[k]; }
    Index iota_o(Index u) const { return iota_o_[u]; }

private:
    Polarity source_;
    std::vector<Concept> concepts_;
    FinLattice lattice_;
    std::vector<Index> iota_k_;
    std::vector<Index> iota_o_;
};

ConceptLattice concept_lattice(const Polarity& p);

/// Finite lattice with a join-dense set of k-elements and a meet-dense set of o-elements.
class DoubleBaseLattice {
public:
    DoubleBaseLattice() = default;
    static Result<DoubleBaseLattice> make(FinLattice lattice, Subset kset, Subset oset);

    const FinLattice& lattice() const { return lattice_; }
    const Subset& kset() const { return kset_; }
    const Subset& oset() const { return oset_; }
    std::vector<Index> k_elements() const { return members(kset_); }
    std::vector<Index> o_elements() const { return members(oset_); }

    friend bool operator==(const DoubleBaseLattice& a, const DoubleBaseLattice& b) {
        return a.lattice_ == b.lattice_ && a.kset_ == b.kset_ && a.oset_ == b.oset_;
    }

private:
    FinLattice lattice_;
    Subset kset_;
    Subset oset_;
};

Result<DoubleBaseLattice> to_double_base(const Polarity& p);
/// Restriction of the lattice order to kset x oset. The i-th k-element of the result is the
/// i-th member of kset in lattice order (likewise for o-elements).
Polarity to_polarity(const DoubleBaseLattice& d);

/// Position of the concept (down_K a, up_O a) of to_polarity(d) for every lattice element a.
std::vector<Index> double_base_unit(const DoubleBaseLattice& d, const ConceptLattice& of_restriction);

RelStructure polarity_structure(const Polarity& p);
std::optional<std::vector<Index>> polarity_isomorphic(const Polarity& a, const Polarity& b);
std::optional<std::vector<Index>> double_base_isomorphic(const DoubleBaseLattice& a, const DoubleBaseLattice& b);

/// Pair of maps k-side forward, o-side backward, with fwd(k) rel2 u iff k rel1 bwd(u).
class GaloisMorphism {
public:
    GaloisMorphism() = default;
    static Result<GaloisMorphism> make(Polarity source, Polarity target, std::vector<Index> fwd,
                                       std::vector<Index> bwd);
    static GaloisMorphism identity(const Polarity& p);

    const Polarity& source() const { return source_; }
    const Polarity& target() const { return target_; }
    const std::vector<Index>& fwd() const { return fwd_; }
    const std::vector<Index>& bwd() const { return bwd_; }

    friend bool operator==(const GaloisMorphism& a, const GaloisMorphism& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.fwd_ == b.fwd_ && a.bwd_ == b.bwd_;
    }

private:
    Polarity source_;
    Polarity target_;
    std::vector<Index> fwd_;
    std::vector<Index> bwd_;
};

/// First m then n.
GaloisMorphism compose(const GaloisMorphism& m, const GaloisMorphism& n);

/// Recover one component from the other over purified polarities; empty if no partner exists.
std::optional<std::vector<Index>> galois_fwd_from_bwd(const Polarity& source, const Polarity& target,
                                                      const std::vector<Index>& bwd);
std::optional<std::vector<Index>> galois_bwd_from_fwd(const Polarity& source, const Polarity& target,
                                                      const std::vector<Index>& fwd);

/// Adjoint pair between double base lattices preserving the designated subsets.
class EmbeddedGaloisMorphism {
public:
    EmbeddedGaloisMorphism() = default;
    static Result<EmbeddedGaloisMorphism> make(DoubleBaseLattice source, DoubleBaseLattice target,
                                               std::vector<Index> fwd, std::vector<Index> bwd);

    const DoubleBaseLattice& source() const { return source_; }
    const DoubleBaseLattice& target() const { return target_; }
    const std::vector<Index>& fwd() const { return fwd_; }
    const std::vector<Index>& bwd() const { return bwd_; }

private:
    DoubleBaseLattice source_;
    DoubleBaseLattice target_;
    std::vector<Index> fwd_;
    std::vector<Index> bwd_;
};

/// Extension to the concept lattices of the (purified) endpoints.
EmbeddedGaloisMorphism galois_to_embedded(const GaloisMorphism& m);
/// Restriction to the designated subsets, between to_polarity of each endpoint.
GaloisMorphism embedded_to_galois(const EmbeddedGaloisMorphism& m);

}  // namespace kodual
