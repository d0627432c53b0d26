#pragma once

#include "kodual/equivalence.hpp"
#include "kodual/localcompact.hpp"

#include <json.hpp>

#include <string>

namespace kodual::io {

using Json = nlohmann::ordered_json;

enum class Format { Json, Text };

/// Unreadable or structurally malformed document. The message names the line or field.
class ParseError : public Error {
public:
    using Error::Error;
};

/// JSON if the first non-blank character is '{', otherwise the YAML-style text form.
/// Text scalars are read as strings.
Json parse_document(const std::string& content);
Json load_document(const std::string& path);
std::string kind_of(const Json& doc);

/// Deterministic rendering; JSON is indented by two spaces, text uses flow lists.
std::string emit(const Json& doc, Format format);

// Decoders throw ParseError on shape problems (missing fields, unknown names) and return
// diagnostics when the structure is well formed but fails validation.
Result<FinPoset> decode_poset(const Json& doc);
Result<FinLattice> decode_lattice(const Json& doc);
Polarity decode_polarity(const Json& doc);
Result<BiDcpo> decode_bidcpo(const Json& doc);
Result<KoSpace> decode_kospace(const Json& doc);
Result<FinTopSpace> decode_topspace(const Json& doc);
Result<Dirspace> decode_dirspace(const Json& doc);
Result<EmbeddedBiDcpo> decode_embedded(const Json& doc);
Result<CRelation> decode_crelation(const Json& doc);
Result<GaloisMorphism> decode_galois(const Json& doc);

Json encode(const FinPoset& p, const std::string& kind = "poset");
Json encode(const FinLattice& l);
Json encode(const Polarity& p, const std::string& kind = "polarity");
Json encode(const BiDcpo& b);
Json encode(const KoSpace& s);
Json encode(const FinTopSpace& t);
Json encode(const Dirspace& d);
Json encode(const DoubleBaseLattice& d, const std::string& kind = "embedded");
Json encode(const EmbeddedBiDcpo& e);
Json encode(const WeakRel& r);
Json encode(const CRelation& r);
Json encode(const GaloisMorphism& m);
Json encode(const ConceptLattice& c);
Json encode(const LCReport& r);
Json encode(const FramePipelineReport& r);

/// Hasse diagrams, bottom to top.
std::string dot(const FinPoset& p, const std::string& title = "poset");
/// Nodes carry extent and intent.
std::string dot(const ConceptLattice& c);
/// Lattice nodes tagged with k/o membership.
std::string dot(const DoubleBaseLattice& d);
/// The lattice of upsets, tagged with k-set/o-set membership.
std::string dot(const KoSpace& s);

}  // namespace kodual::io
