#pragma once

#include "kodual/bidcpo.hpp"
#include "kodual/equivalence.hpp"
#include "kodual/kospace.hpp"

#include <string>
#include <utility>
#include <vector>

namespace kodual {

/// u sits below k: every o-element above k is above u.
bool black_triangle(const Polarity& p, Index u, Index k);
/// For each o-element u, the k-elements k with u below k.
std::vector<Subset> black_triangle_relation(const BiDcpo& b);

struct LCReport {
    bool locally_compact = true;
    bool bicontinuous = true;
    std::vector<std::string> lc_witnesses;            // pairs without an interpolant
    std::vector<std::string> bicontinuity_witnesses;  // includes a note when local compactness fails
};

/// Both flags are always computed; the two entry points are aliases kept for readability at call sites.
LCReport check_locally_compact(const BiDcpo& b);
LCReport check_locally_compact(const KoSpace& s);
LCReport check_locally_compact(const EmbeddedBiDcpo& e);
LCReport check_bicontinuous(const BiDcpo& b);
LCReport check_bicontinuous(const KoSpace& s);
LCReport check_bicontinuous(const EmbeddedBiDcpo& e);

/// Some k has v below k and k related to u. No precondition.
bool interpolated_below(const BiDcpo& b, Index v, Index u);
/// Same relation, guarded: throws PreconditionError unless the k-elements below u form a directed set.
bool way_below(const BiDcpo& b, Index v, Index u);
/// Literal dcpo definition: every directed subset whose join dominates u has a member above v.
/// Enumerates directed subsets (guardrail kMaxEnumeratedFamily).
bool dcpo_way_below(const FinPoset& p, Index v, Index u, bool override_guardrail = false);

/// Binary meets/joins of arbitrary pairs; the finite versions also require top/bottom (so fail on
/// the empty poset).
std::optional<Index> poset_meet(const FinPoset& p, Index a, Index b);
std::optional<Index> poset_join(const FinPoset& p, Index a, Index b);
bool has_binary_meets(const FinPoset& p);
bool has_binary_joins(const FinPoset& p);
bool has_finite_meets(const FinPoset& p);
bool has_finite_joins(const FinPoset& p);

/// Closure of the designated subsets inside the ambient lattice, including the empty meet/join.
bool oset_closed_under_finite_meets(const DoubleBaseLattice& d);
bool oset_closed_under_finite_joins(const DoubleBaseLattice& d);
bool kset_closed_under_finite_meets(const DoubleBaseLattice& d);
bool kset_closed_under_finite_joins(const DoubleBaseLattice& d);

struct HofmannMisloveReport {
    NamePairs k_to_filter;  // k -> its o-elements above, a filter of the o-order
    NamePairs o_to_filter;  // u -> its k-elements below, a filter of the reversed k-order
};
/// Throws PreconditionError unless bicontinuous; TheoremViolation if a map is not a bijection.
HofmannMisloveReport hofmann_mislove(const BiDcpo& b);

/// Shared value of "o-order has finite meets" and "k-order has finite joins".
/// Throws PreconditionError unless bicontinuous, TheoremViolation if the two differ.
bool check_meets_joins_transfer(const BiDcpo& b);

enum class WilkerOutcome { Rejected, Holds, Counterexample };

struct WilkerResult {
    WilkerOutcome outcome = WilkerOutcome::Holds;
    std::string detail;         // failed preconditions or the counterexample
    std::size_t instances = 0;  // premises examined
};

/// Variant 1 interpolates through unions, variant 2 through intersections.
WilkerResult wilker_check(const KoSpace& s, int variant);
WilkerResult wilker_check(const BiDcpo& b, int variant);

enum class LatticeSide { O, K };
/// Distributivity of the chosen side's lattice. Hypothesis failures are returned as diagnostics;
/// throws TheoremViolation if it disagrees with is_distributive_bidcpo.
Result<bool> distributivity_from_side(const BiDcpo& b, LatticeSide side);

/// Set with a family of subsets closed under directed unions.
class Dirspace {
public:
    Dirspace() = default;
    /// Sorts points, deduplicates opens and checks directed-union closure by enumeration.
    static Result<Dirspace> make(std::vector<std::string> points, std::vector<Subset> opens,
                                 bool override_guardrail = false);

    const std::vector<std::string>& points() const { return points_; }
    const std::vector<Subset>& opens() const { return opens_; }
    std::size_t size() const { return points_.size(); }

    bool is_open(const Subset& s) const;
    bool is_compact(const Subset& s) const;
    /// The open neighbourhoods of s form a codirected family with intersection s.
    bool is_saturated(const Subset& s) const;
    /// Compact saturated subsets in subset order.
    std::vector<Subset> ksat() const;
    bool is_t0() const;
    bool is_well_filtered() const;
    bool is_locally_compact() const;
    /// Every open is the directed union of the compact saturated sets inside it.
    bool opens_are_directed_unions() const;
    /// (points, complements of the compact saturated sets); rejected if that family is not a dirspace.
    Result<Dirspace> degroot() const;
    bool has_degroot_duality() const;

    friend bool operator==(const Dirspace& a, const Dirspace& b) {
        return a.points_ == b.points_ && a.opens_ == b.opens_;
    }

private:
    std::vector<std::string> points_;
    std::vector<Subset> opens_;
    bool override_ = false;
};

struct FramePipelineReport {
    std::vector<std::string> points;
    NamePairs filters;           // k-element -> filter of the lattice
    NamePairs lattice_to_opens;  // u -> the points whose filter contains u
    NamePairs opens_to_lattice;
    std::vector<std::pair<std::string, bool>> checks;
    bool all_pass() const;
    std::string failures() const;
};

/// Lattice -> (filters, lattice, contains) -> ko-space -> topological space, checking every stage.
/// Rejects non-distributive input.
Result<FramePipelineReport> finite_frame_pipeline(const FinLattice& d);

}  // namespace kodual
