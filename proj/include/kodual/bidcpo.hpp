#pragma once

#include "kodual/polarity.hpp"

#include <compare>
#include <optional>
#include <vector>

namespace kodual {

/// Purified polarity with (co)directed completeness and double compactness.
class BiDcpo {
public:
    BiDcpo() = default;
    const Polarity& pol() const { return pol_; }

    friend bool operator==(const BiDcpo& a, const BiDcpo& b) { return a.pol_ == b.pol_; }

private:
    friend Result<BiDcpo> validate_bidcpo(const Polarity& p);
    Polarity pol_;
};

/// Purification is the only axiom that can fail on a finite polarity: a finite codirected set of
/// k-elements has a least member (its meet), and a finite directed set of o-elements a greatest one.
/// bidcpo_axioms_literal re-checks the other axioms by enumeration.
Result<BiDcpo> validate_bidcpo(const Polarity& p);
Diagnostics bidcpo_axioms_literal(const Polarity& p, bool override_guardrail = false);

/// Double base lattice whose designated subsets are (co)directed complete and doubly compact.
class EmbeddedBiDcpo {
public:
    EmbeddedBiDcpo() = default;
    const DoubleBaseLattice& dbl() const { return dbl_; }

private:
    friend Result<EmbeddedBiDcpo> validate_embedded(DoubleBaseLattice d);
    DoubleBaseLattice dbl_;
};

Result<EmbeddedBiDcpo> validate_embedded(DoubleBaseLattice d);

struct Quadruple {
    Index k, l, u, v;
    auto operator<=>(const Quadruple&) const = default;
};

/// Lexicographically least (k, l, u, v) meeting the three premises of the cut condition
/// but with k not related to u; empty iff distributive.
std::optional<Quadruple> distributivity_violation(const BiDcpo& b);
bool is_distributive_bidcpo(const BiDcpo& b);
bool is_distributive_embedded(const EmbeddedBiDcpo& e);

/// Pairs (k, u) or (a, b); for lattices both components are lattice indices.
struct IndexPair {
    Index first, second;
    auto operator<=>(const IndexPair&) const = default;
};
using PairSet = std::vector<IndexPair>;

/// k not related to u, u maximal among o-elements not above k, k minimal among k-elements not below u.
PairSet neswarrow_pairs(const Polarity& p);
PairSet neswarrow_pairs(const FinLattice& l);
bool is_bifounded(const Polarity& p);
bool is_bifounded(const FinLattice& l);

/// Completely prime pairs: k is the least k-element not below u, u the greatest o-element not above k.
PairSet cp_pairs(const Polarity& p);
/// Lattice version: up(a) and down(b) partition the lattice.
PairSet cp_pairs(const FinLattice& l);

bool is_raney(const FinLattice& l);
/// CP pairs equal the neswarrow pairs; throws PreconditionError on non-distributive input.
bool key_lemma_check(const FinLattice& l);

/// (filters(D), D, contains) with filters named ^x after their least element.
Result<BiDcpo> from_dcpo_filters(const FinPoset& d);

}  // namespace kodual
