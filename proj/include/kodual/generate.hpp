#pragma once

#include "kodual/equivalence.hpp"
#include "kodual/localcompact.hpp"

#include <cstdint>
#include <random>

namespace kodual {

using Rng = std::mt19937_64;

/// splitmix64 finaliser; used to derive independent per-instance seeds.
std::uint64_t mix_seed(std::uint64_t x);
Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Uniform in [0, n); n > 0.
std::size_t uniform_below(Rng& rng, std::size_t n);
/// True with probability p (53-bit resolution).
bool coin(Rng& rng, double p);

/// Element names e0, e1, ...
std::vector<std::string> element_names(std::size_t n, const std::string& prefix = "e");

// Exhaustive catalogs.

/// One representative per isomorphism class of posets with 0..n elements, ordered by size.
std::vector<FinPoset> posets_up_to(std::size_t n);
/// One representative per isomorphism class of lattices with 1..n elements (n <= 6 is the
/// intended range), ordered by size. Bottom is "0", top is "1", the rest a, b, ...
std::vector<FinLattice> lattices_up_to(std::size_t n);
/// Every purified polarity on k1..kn x u1..um with n <= max_k, m <= max_o (labelled, not deduplicated).
std::vector<Polarity> purified_polarities_up_to(std::size_t max_k, std::size_t max_o);
/// Every admissible (K, O) over p: K holds the principal upsets, O the complements of principal
/// downsets, each plus any subset of the remaining upsets.
std::vector<KoSpace> admissible_kospaces(const FinPoset& p);

// Random generators. Each consumes only `rng`, so equal seeds give equal output.

/// Naturally labelled DAG: e_i < e_j (i < j) independently with probability `edge`, then closure.
FinPoset random_poset(Rng& rng, std::size_t n, double edge = 0.35);
/// minimal_kospace plus each remaining upset independently with probability `extra` on each side.
KoSpace random_kospace(Rng& rng, const FinPoset& p, double extra = 0.5);
KoSpace random_kospace(Rng& rng, std::size_t n);
/// Bicontinuous ko-space: rejection sampling of random_kospace (up to 64 tries), falling back to
/// K = O = F for a random family F containing the required sets, which is always bicontinuous.
KoSpace random_bicontinuous_kospace(Rng& rng, std::size_t n);
/// Random relation with the given density, then purified.
Polarity random_purified_polarity(Rng& rng, std::size_t nk, std::size_t no, double density = 0.5);
/// Rejection sampling until the random relation is already purified (falls back to purify).
Polarity random_purified_polarity_exact(Rng& rng, std::size_t nk, std::size_t no, double density = 0.5);
/// Weakening closure of `pairs` random pairs.
WeakRel random_weakrel(Rng& rng, const FinPoset& source, const FinPoset& target, std::size_t pairs);
/// Ko-spaces S, T and a c-relation between them: T's k-sets are enlarged by the forward images and
/// S's o-sets by the preimages so the relation qualifies by construction.
CRelation random_crelation(Rng& rng, std::size_t n_source, std::size_t n_target);
/// Composable c-relations S1 -> S2 -> S3 built the same way.
std::pair<CRelation, CRelation> random_crelation_chain(Rng& rng, std::size_t n1, std::size_t n2, std::size_t n3);
/// Galois morphism between given polarities by rejection sampling of one component and recovering the
/// other (alternating sides); empty if none is found within `tries`.
std::optional<GaloisMorphism> random_galois(Rng& rng, const Polarity& source, const Polarity& target,
                                            std::size_t tries = 1000);
/// Galois morphism between distributive bi-dcpos: random_galois over random ko-spaces, with
/// crelation_to_galois of a random c-relation as the fallback.
GaloisMorphism random_distributive_galois(Rng& rng, std::size_t n_source, std::size_t n_target);
/// Each nonempty subset becomes open with probability `density`; always closed under directed unions.
Dirspace random_dirspace(Rng& rng, std::size_t n, double density = 0.4);
/// Monotone map d2 -> d1 as an index table (random choice among values keeping monotonicity).
std::vector<Index> random_monotone_map(Rng& rng, const FinPoset& d2, const FinPoset& d1);

}  // namespace kodual
