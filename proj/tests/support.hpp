#pragma once

#include "kodual/equivalence.hpp"
#include "kodual/generate.hpp"
#include "kodual/localcompact.hpp"

#include <string>
#include <vector>

namespace fixtures {

using namespace kodual;

inline FinPoset chain(std::size_t n, const std::string& prefix = "c") {
    return FinPoset::chain(element_names(n, prefix));
}

inline FinLattice lattice_from(const std::vector<std::string>& names, const NamePairs& covers) {
    return FinLattice::make(FinPoset::from_relation(names, covers));
}

inline FinLattice boolean4() { return lattice_from({"0", "a", "b", "1"}, {{"0", "a"}, {"0", "b"}, {"a", "1"}, {"b", "1"}}); }

inline FinLattice m3_lattice() {
    return lattice_from({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"0", "b"}, {"0", "c"}, {"a", "1"}, {"b", "1"}, {"c", "1"}});
}

inline FinLattice n5_lattice() {
    return lattice_from({"0", "a", "b", "c", "1"}, {{"0", "a"}, {"a", "b"}, {"b", "1"}, {"0", "c"}, {"c", "1"}});
}

inline Polarity m3_polarity() {
    return Polarity::from_predicate({"a", "b", "c"}, {"a", "b", "c"}, [](Index k, Index u) { return k == u; });
}

inline Polarity one_by_one_empty() {
    return Polarity::from_predicate({"k"}, {"u"}, [](Index, Index) { return false; });
}

/// ({x}, {{x}}, {empty}).
inline KoSpace sing() {
    const auto x = FinPoset::antichain({"x"});
    return validate_kospace(x, {x.full()}, {x.empty()}).value();
}

inline KoSpace empty_kospace() { return validate_kospace(FinPoset{}, {}, {}).value(); }

/// Diamond bot < a, b < top with k-set and o-set {bot, a, b}.
inline EmbeddedBiDcpo dia() {
    const auto l = lattice_from({"bot", "a", "b", "top"}, {{"bot", "a"}, {"bot", "b"}, {"a", "top"}, {"b", "top"}});
    Subset s(4);
    for (const char* n : {"bot", "a", "b"}) s.set(l.poset().index_of(n));
    return validate_embedded(DoubleBaseLattice::make(l, s, s).value()).value();
}

inline Subset named(const FinPoset& p, const std::vector<std::string>& names) {
    Subset s(p.size());
    for (const auto& n : names) s.set(p.index_of(n));
    return s;
}

}  // namespace fixtures
