#include "support.hpp"

#include "kodual/io.hpp"

#include <doctest.h>

#include <string>

using namespace kodual;
namespace io = kodual::io;

namespace {

std::string fixture(const std::string& name) { return std::string(KODUAL_FIXTURES) + "/" + name; }

}  // namespace

TEST_CASE("parsing both formats") {
    const auto text = io::parse_document("kind: poset\nelements: [p, q]\nleq: [[p, q]]\n");
    const auto json = io::parse_document(R"({"kind": "poset", "elements": ["p", "q"], "leq": [["p", "q"]]})");
    CHECK(io::kind_of(text) == "poset");
    CHECK(io::decode_poset(text).value() == io::decode_poset(json).value());
    CHECK_THROWS_AS(io::load_document(fixture("malformed.yaml")), io::ParseError);
    CHECK_THROWS_AS(io::parse_document("{\"kind\": "), io::ParseError);
    CHECK_THROWS_AS(io::load_document(fixture("does-not-exist.yaml")), Error);
}

TEST_CASE("fixtures decode") {
    CHECK(io::decode_kospace(io::load_document(fixture("sing.yaml"))).value() == fixtures::sing());
    CHECK(io::decode_kospace(io::load_document(fixture("empty-kospace.json"))).value() == fixtures::empty_kospace());
    CHECK(io::decode_polarity(io::load_document(fixture("m3.yaml"))) == fixtures::m3_polarity());
    CHECK(io::decode_polarity(io::load_document(fixture("empty-polarity.json"))) == Polarity{});
    CHECK(io::decode_lattice(io::load_document(fixture("boolean4.yaml"))).value() == fixtures::boolean4());
    CHECK(io::decode_embedded(io::load_document(fixture("dia.yaml"))).value().dbl() == fixtures::dia().dbl());

    const auto missing = io::decode_kospace(io::load_document(fixture("missing-principal.yaml")));
    REQUIRE_FALSE(missing.ok());
    CHECK(missing.diagnostics().front().code == "S3");
}

TEST_CASE("shape errors are parse errors") {
    CHECK_THROWS_AS(io::decode_poset(io::parse_document("kind: poset\nleq: []\n")), io::ParseError);
    CHECK_THROWS_AS(io::decode_poset(io::parse_document("kind: poset\nelements: [a]\nleq: [[a, zz]]\n")),
                    io::ParseError);
    CHECK_THROWS_AS(io::decode_polarity(io::parse_document("kind: polarity\nk: [a]\no: [b]\nrel: [[b, a]]\n")),
                    io::ParseError);
}

TEST_CASE("encode and decode roundtrip") {
    auto rng = instance_rng(61, 1, 0);
    for (int i = 0; i < 30; ++i) {
        const auto p = random_poset(rng, 1 + uniform_below(rng, 5));
        CHECK(io::decode_poset(io::encode(p)).value() == p);
        const auto s = random_kospace(rng, 1 + uniform_below(rng, 4));
        CHECK(io::decode_kospace(io::encode(s)).value() == s);
        const auto pol = random_purified_polarity(rng, 3, 3);
        CHECK(io::decode_polarity(io::encode(pol)) == pol);
        const auto b = validate_bidcpo(pol).value();
        CHECK(io::decode_bidcpo(io::encode(b)).value() == b);
        const auto r = random_crelation(rng, 2, 3);
        CHECK(io::decode_crelation(io::encode(r)).value() == r);
        const auto g = random_distributive_galois(rng, 2, 2);
        CHECK(io::decode_galois(io::encode(g)).value() == g);
        const auto d = random_dirspace(rng, 3);
        CHECK(io::decode_dirspace(io::encode(d)).value() == d);
    }
    const auto dia = fixtures::dia();
    CHECK(io::decode_embedded(io::encode(dia)).value().dbl() == dia.dbl());
    CHECK(io::decode_lattice(io::encode(fixtures::m3_lattice())).value() == fixtures::m3_lattice());
}

TEST_CASE("text emission parses back to the same document") {
    auto rng = instance_rng(61, 2, 0);
    for (int i = 0; i < 20; ++i) {
        const auto doc = io::encode(random_kospace(rng, 1 + uniform_below(rng, 4)));
        const auto text = io::emit(doc, io::Format::Text);
        CHECK(io::decode_kospace(io::parse_document(text)).value() == io::decode_kospace(doc).value());
        CHECK(io::parse_document(io::emit(doc, io::Format::Json)) == doc);
    }
    // Names that look like numbers or booleans stay strings.
    const auto b4 = io::encode(fixtures::boolean4());
    CHECK(io::decode_lattice(io::parse_document(io::emit(b4, io::Format::Text))).value() == fixtures::boolean4());
}

TEST_CASE("emission is deterministic") {
    const auto doc = io::encode(fixtures::dia());
    CHECK(io::emit(doc, io::Format::Json) == io::emit(io::encode(fixtures::dia()), io::Format::Json));
    CHECK(io::emit(doc, io::Format::Json).find("  \"kind\"") != std::string::npos);
}

TEST_CASE("DOT export") {
    const auto count = [](const std::string& s, const std::string& what) {
        std::size_t n = 0;
        for (auto pos = s.find(what); pos != std::string::npos; pos = s.find(what, pos + 1)) ++n;
        return n;
    };
    const auto chain2 = io::dot(FinPoset::chain({"p", "q"}));
    CHECK(chain2.rfind("digraph", 0) == 0);
    CHECK(count(chain2, "->") == 1);
    const auto m3 = io::dot(ConceptLattice(fixtures::m3_polarity()));
    CHECK(count(m3, "->") == 6);
    const auto dia = io::dot(fixtures::dia().dbl());
    CHECK(count(dia, "->") == 4);
    CHECK(count(io::dot(fixtures::sing()), "->") == 1);
}
