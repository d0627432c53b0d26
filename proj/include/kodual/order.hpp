#pragma once

#include "kodual/core.hpp"
#include "kodual/iso.hpp"

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kodual {

using NamePairs = std::vector<std::pair<std::string, std::string>>;

/// Finite partial order on named elements. Elements are kept in natural identifier order.
class FinPoset {
public:
    FinPoset() = default;

    /// Reflexive-transitive closure of `relation`; throws Error on cycles or unknown names.
    static FinPoset from_relation(std::vector<std::string> elements, const NamePairs& relation);

    /// Closure of the predicate over input positions. If `position` is given it receives,
    /// for each input position, the index of that element in the result.
    static FinPoset from_predicate(const std::vector<std::string>& elements,
                                   const std::function<bool(Index, Index)>& leq,
                                   std::vector<Index>* position = nullptr);

    static FinPoset chain(const std::vector<std::string>& bottom_to_top);
    static FinPoset antichain(const std::vector<std::string>& elements);

    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(Index i) const { return names_[i]; }
    std::optional<Index> find(const std::string& name) const;
    Index index_of(const std::string& name) const;  // throws Error if absent

    bool leq(Index a, Index b) const { return up_[a].test(b); }
    const Subset& up(Index a) const { return up_[a]; }
    const Subset& down(Index a) const { return down_[a]; }

    Subset empty() const { return Subset(size()); }
    Subset full() const { return full_subset(size()); }
    Subset up_closure(const Subset& s) const;
    Subset down_closure(const Subset& s) const;
    bool is_upset(const Subset& s) const;
    bool is_downset(const Subset& s) const;

    /// Cover pairs (a, b): a < b with nothing strictly between.
    std::vector<std::pair<Index, Index>> covers() const;
    NamePairs leq_pairs() const;  // strict pairs, in index order

    FinPoset dual() const;
    /// Induced suborder on `keep`.
    FinPoset restrict(const Subset& keep) const;

    friend bool operator==(const FinPoset& a, const FinPoset& b) {
        return a.names_ == b.names_ && a.up_ == b.up_;
    }

private:
    std::vector<std::string> names_;
    std::vector<Subset> up_;
    std::vector<Subset> down_;
};

/// All upsets in subset order; refuses more than kMaxEnumeratedElements points unless overridden.
std::vector<Subset> all_upsets(const FinPoset& p, bool override_guardrail = false);

/// True iff s is nonempty and any two members have an upper (lower) bound inside s.
bool is_directed(const FinPoset& p, const Subset& s);
bool is_codirected(const FinPoset& p, const Subset& s);

/// Codirected upsets, in subset order. At finite size these are exactly the principal upsets.
std::vector<Subset> filters(const FinPoset& p);

/// Complete lattice over a finite poset with tabulated binary operations.
class FinLattice {
public:
    FinLattice() = default;
    /// Empty optional if the poset is empty or some binary meet/join is missing.
    static std::optional<FinLattice> from_poset(FinPoset p);
    static FinLattice make(FinPoset p);  // throws Error if not a lattice

    const FinPoset& poset() const { return order_; }
    std::size_t size() const { return order_.size(); }
    const std::string& name(Index i) const { return order_.name(i); }
    bool leq(Index a, Index b) const { return order_.leq(a, b); }
    Index top() const { return top_; }
    Index bottom() const { return bottom_; }
    Index meet(Index a, Index b) const { return meet_[a * size() + b]; }
    Index join(Index a, Index b) const { return join_[a * size() + b]; }
    Index meet_of(const Subset& s) const;  // meet of the empty set is top
    Index join_of(const Subset& s) const;  // join of the empty set is bottom

    friend bool operator==(const FinLattice& a, const FinLattice& b) { return a.order_ == b.order_; }

private:
    FinPoset order_;
    Index top_ = 0;
    Index bottom_ = 0;
    std::vector<Index> meet_;
    std::vector<Index> join_;
};

/// The lattice of upsets of a poset together with the upset behind each element.
struct UpsetLattice {
    FinLattice lattice;
    std::vector<Subset> sets;  // sets[i] is the upset named by lattice element i
};

UpsetLattice upset_lattice(const FinPoset& p, bool override_guardrail = false);

/// Cut-rule form: k <= u v c and c ^ k <= u imply k <= u.
bool is_distributive_lattice(const FinLattice& l);

/// Relation between two posets closed under weakening on both sides.
class WeakRel {
public:
    WeakRel() = default;
    /// images[x] = R[x]; throws Error if the weakening condition fails.
    WeakRel(FinPoset source, FinPoset target, std::vector<Subset> images);
    static WeakRel from_pairs(FinPoset source, FinPoset target, const NamePairs& pairs);
    /// Smallest weakening relation containing the given index pairs.
    static WeakRel closure_of(FinPoset source, FinPoset target,
                              const std::vector<std::pair<Index, Index>>& pairs);
    static WeakRel identity(const FinPoset& p);

    const FinPoset& source() const { return source_; }
    const FinPoset& target() const { return target_; }
    bool related(Index x, Index y) const { return images_[x].test(y); }
    const Subset& image(Index x) const { return images_[x]; }
    const std::vector<Subset>& images() const { return images_; }
    NamePairs pairs() const;

    Subset forward(const Subset& a) const;             // R[A]
    Subset universal_preimage(const Subset& b) const;  // {x : R[x] subset of B}
    /// Converse relation between the dual posets.
    WeakRel converse() const;

    friend bool operator==(const WeakRel& a, const WeakRel& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.images_ == b.images_;
    }

private:
    FinPoset source_;
    FinPoset target_;
    std::vector<Subset> images_;
};

/// Relational composite: first r, then s. Throws Error when r.target() != s.source().
WeakRel weakrel_compose(const WeakRel& r, const WeakRel& s);

RelStructure poset_structure(const FinPoset& p);
std::optional<std::vector<Index>> poset_isomorphic(const FinPoset& p, const FinPoset& q);
std::optional<std::vector<Index>> lattice_isomorphic(const FinLattice& a, const FinLattice& b);

}  // namespace kodual
