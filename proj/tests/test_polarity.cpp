#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kodual;

namespace {

std::set<std::pair<oracle::Bits, oracle::Bits>> library_concepts(const ConceptLattice& c) {
    std::set<std::pair<oracle::Bits, oracle::Bits>> out;
    for (const auto& x : c.concepts()) out.emplace(oracle::bits_of(x.extent), oracle::bits_of(x.intent));
    return out;
}

}  // namespace

TEST_CASE("purification") {
    CHECK(is_purified(fixtures::m3_polarity()));
    CHECK(is_purified(fixtures::one_by_one_empty()));
    const auto dup_rows = Polarity::from_predicate({"k1", "k2"}, {"u"}, [](Index, Index) { return true; });
    CHECK_FALSE(is_purified(dup_rows));

    const auto m3 = fixtures::m3_polarity();
    CHECK(purify(m3) == m3);

    const auto dup_cols = Polarity::from_predicate({"k1", "k2"}, {"u", "v", "w"}, [](Index k, Index u) { return u < 2 ? k == 0 : k == 1; });
    const auto pure = purify_with_map(dup_cols);
    CHECK(pure.polarity.o_size() == 2);
    CHECK(pure.polarity.o_names() == std::vector<std::string>{"u", "w"});
    CHECK(pure.o_class[0] == pure.o_class[1]);
    CHECK(is_purified(pure.polarity));

    auto rng = instance_rng(11, 1, 0);
    for (int i = 0; i < 40; ++i) {
        const auto p = Polarity::from_predicate(element_names(5, "k"), element_names(5, "u"),
                                                [&](Index, Index) { return coin(rng, 0.5); });
        const auto q = purify(p);
        CHECK(is_purified(q));
        const auto before = oracle::concepts(oracle::relation_of(p), p.o_size());
        const auto after = oracle::concepts(oracle::relation_of(q), q.o_size());
        CHECK(oracle::isomorphic(oracle::concept_order(before), oracle::concept_order(after)));
    }
}

TEST_CASE("concept lattice matches subset closure") {
    SUBCASE("1x1 empty relation is a 2-chain") {
        const ConceptLattice c(fixtures::one_by_one_empty());
        CHECK(c.size() == 2);
        CHECK(library_concepts(c) == oracle::concepts(oracle::relation_of(fixtures::one_by_one_empty()), 1));
    }
    SUBCASE("M3") {
        const ConceptLattice c(fixtures::m3_polarity());
        CHECK(c.size() == 5);
        CHECK(oracle::isomorphic(oracle::order_of(c.lattice().poset()), oracle::order_of(fixtures::m3_lattice().poset())));
    }
    SUBCASE("empty polarity") { CHECK(ConceptLattice(Polarity{}).size() == 1); }
    SUBCASE("random") {
        auto rng = instance_rng(11, 2, 0);
        for (int i = 0; i < 60; ++i) {
            const auto p = random_purified_polarity(rng, 1 + uniform_below(rng, 5), 1 + uniform_below(rng, 5));
            const ConceptLattice c(p);
            const auto expected = oracle::concepts(oracle::relation_of(p), p.o_size());
            CHECK(library_concepts(c) == expected);
            CHECK(oracle::isomorphic(oracle::order_of(c.lattice().poset()), oracle::concept_order(expected)));
        }
    }
}

TEST_CASE("double base lattice of a polarity") {
    SUBCASE("M3: middle level on both sides") {
        const auto d = to_double_base(fixtures::m3_polarity()).value();
        CHECK(d.lattice().size() == 5);
        CHECK(d.kset() == d.oset());
        for (Index a : d.k_elements()) {
            CHECK(a != d.lattice().top());
            CHECK(a != d.lattice().bottom());
        }
    }
    SUBCASE("1x1 empty relation") {
        const auto d = to_double_base(fixtures::one_by_one_empty()).value();
        REQUIRE(d.lattice().size() == 2);
        CHECK(d.k_elements() == std::vector<Index>{d.lattice().top()});
        CHECK(d.o_elements() == std::vector<Index>{d.lattice().bottom()});
    }
    SUBCASE("empty polarity") {
        const auto d = to_double_base(Polarity{}).value();
        CHECK(d.lattice().size() == 1);
        CHECK(d.kset().none());
        CHECK(d.oset().none());
        CHECK(to_polarity(d) == Polarity{});
    }
    SUBCASE("unpurified input is rejected") {
        const auto dup = Polarity::from_predicate({"k1", "k2"}, {"u"}, [](Index, Index) { return true; });
        CHECK_FALSE(to_double_base(dup).ok());
    }
}

TEST_CASE("to_polarity restricts the order") {
    const auto l = FinLattice::make(fixtures::chain(3));  // c0 < c1 < c2
    const auto d = DoubleBaseLattice::make(l, fixtures::named(l.poset(), {"c1", "c2"}), fixtures::named(l.poset(), {"c0", "c1"}));
    REQUIRE(d.ok());
    const auto p = to_polarity(d.value());
    CHECK(p.k_size() == 2);
    CHECK(p.o_size() == 2);
    for (Index k = 0; k < 2; ++k)
        for (Index u = 0; u < 2; ++u) CHECK(p.related(k, u) == l.leq(d.value().k_elements()[k], d.value().o_elements()[u]));
    // A designated subset that is not dense is rejected.
    CHECK_FALSE(DoubleBaseLattice::make(l, fixtures::named(l.poset(), {"c2"}), fixtures::named(l.poset(), {"c0", "c1"})).ok());
}

TEST_CASE("fundamental theorem roundtrips") {
    auto rng = instance_rng(11, 3, 0);
    for (int i = 0; i < 60; ++i) {
        const auto p = random_purified_polarity(rng, 1 + uniform_below(rng, 5), 1 + uniform_below(rng, 5));
        const auto d = to_double_base(p).value();
        CHECK(polarity_isomorphic(to_polarity(d), p));
        const auto back = to_double_base(to_polarity(d)).value();
        CHECK(double_base_isomorphic(back, d));
        const auto unit = double_base_unit(d, ConceptLattice(to_polarity(d)));
        for (Index a = 0; a < d.lattice().size(); ++a)
            for (Index b = 0; b < d.lattice().size(); ++b)
                CHECK(d.lattice().leq(a, b) == back.lattice().leq(unit[a], unit[b]));
    }
}

TEST_CASE("basic functions preserve existing meets and joins") {
    auto rng = instance_rng(11, 4, 0);
    for (int i = 0; i < 40; ++i) {
        const auto p = random_purified_polarity(rng, 1 + uniform_below(rng, 4), 1 + uniform_below(rng, 4));
        const ConceptLattice c(p);
        const auto rel = oracle::relation_of(p);
        const auto& l = c.lattice();
        // Every nonempty subset of k-elements with a meet in the k-order.
        for (const auto& s : oracle::all_subsets(p.k_size())) {
            std::vector<Index> ms;
            for (Index k = 0; k < s.size(); ++k)
                if (s[k]) ms.push_back(k);
            if (ms.empty()) continue;
            std::optional<Index> meet;
            for (Index m = 0; m < p.k_size(); ++m) {
                bool lower = std::all_of(ms.begin(), ms.end(), [&](Index x) { return oracle::k_leq(rel, m, x); });
                bool greatest = lower;
                for (Index n = 0; n < p.k_size() && greatest; ++n)
                    if (std::all_of(ms.begin(), ms.end(), [&](Index x) { return oracle::k_leq(rel, n, x); }))
                        greatest = oracle::k_leq(rel, n, m);
                if (greatest) meet = m;
            }
            if (!meet) continue;
            Subset images(l.size());
            for (Index k : ms) images.set(c.iota_k(k));
            CHECK(c.iota_k(*meet) == l.meet_of(images));
        }
        for (const auto& s : oracle::all_subsets(p.o_size())) {
            std::vector<Index> ms;
            for (Index u = 0; u < s.size(); ++u)
                if (s[u]) ms.push_back(u);
            if (ms.empty()) continue;
            std::optional<Index> join;
            for (Index m = 0; m < p.o_size(); ++m) {
                bool upper = std::all_of(ms.begin(), ms.end(), [&](Index x) { return oracle::o_leq(rel, x, m); });
                bool least = upper;
                for (Index n = 0; n < p.o_size() && least; ++n)
                    if (std::all_of(ms.begin(), ms.end(), [&](Index x) { return oracle::o_leq(rel, x, n); }))
                        least = oracle::o_leq(rel, m, n);
                if (least) join = m;
            }
            if (!join) continue;
            Subset images(l.size());
            for (Index u : ms) images.set(c.iota_o(u));
            CHECK(c.iota_o(*join) == l.join_of(images));
        }
    }
}

TEST_CASE("Galois morphisms") {
    const auto m3 = fixtures::m3_polarity();
    const auto id = GaloisMorphism::identity(m3);
    CHECK(compose(id, id) == id);
    // Adjunction is enforced.
    CHECK_FALSE(GaloisMorphism::make(m3, m3, {0, 0, 0}, {0, 1, 2}).ok());

    auto rng = instance_rng(11, 5, 0);
    std::size_t found = 0;
    for (int i = 0; i < 60; ++i) {
        const auto a = random_purified_polarity(rng, 1 + uniform_below(rng, 3), 1 + uniform_below(rng, 3));
        const auto b = random_purified_polarity(rng, 1 + uniform_below(rng, 3), 1 + uniform_below(rng, 3));
        auto g = random_galois(rng, a, b);
        if (!g) continue;
        ++found;
        const auto ra = oracle::relation_of(a), rb = oracle::relation_of(b);
        for (Index k = 0; k < a.k_size(); ++k)
            for (Index u = 0; u < b.o_size(); ++u) CHECK(rb[g->fwd()[k]][u] == ra[k][g->bwd()[u]]);
        // Either component determines the other.
        CHECK(galois_bwd_from_fwd(a, b, g->fwd()) == g->bwd());
        CHECK(galois_fwd_from_bwd(a, b, g->bwd()) == g->fwd());
    }
    CHECK(found > 20);
}

TEST_CASE("Galois and embedded Galois morphisms") {
    const auto m3 = fixtures::m3_polarity();
    SUBCASE("identity goes to identity") {
        const auto e = galois_to_embedded(GaloisMorphism::identity(m3));
        for (Index a = 0; a < e.fwd().size(); ++a) {
            CHECK(e.fwd()[a] == a);
            CHECK(e.bwd()[a] == a);
        }
        CHECK(embedded_to_galois(e) == GaloisMorphism::identity(to_polarity(e.source())));
    }
    SUBCASE("into a one-point polarity the forward map is constant on the top extent") {
        const auto point = Polarity::from_predicate({"k"}, {"u"}, [](Index, Index) { return false; });
        const auto src = fixtures::one_by_one_empty();
        auto g = GaloisMorphism::make(src, point, {0}, {0});
        REQUIRE(g.ok());
        const auto e = galois_to_embedded(g.value());
        const ConceptLattice c2(point);
        for (Index a = 0; a < e.source().lattice().size(); ++a) {
            const bool nonempty = a != e.source().lattice().bottom();
            CHECK(e.fwd()[a] == (nonempty ? c2.iota_k(0) : c2.lattice().bottom()));
        }
    }
    SUBCASE("random 4x4 roundtrips") {
        auto rng = instance_rng(11, 6, 0);
        std::size_t checked = 0;
        for (int i = 0; i < 80 && checked < 20; ++i) {
            const auto a = random_purified_polarity(rng, 4, 4);
            const auto b = random_purified_polarity(rng, 4, 4);
            auto g = random_galois(rng, a, b);
            if (!g) continue;
            ++checked;
            const auto e = galois_to_embedded(*g);
            const auto back = embedded_to_galois(e);
            const ConceptLattice c1(a), c2(b);
            const auto k1 = e.source().k_elements(), k2 = e.target().k_elements();
            for (Index k = 0; k < a.k_size(); ++k) {
                const auto pos = std::lower_bound(k1.begin(), k1.end(), c1.iota_k(k)) - k1.begin();
                const auto img = std::lower_bound(k2.begin(), k2.end(), c2.iota_k(g->fwd()[k])) - k2.begin();
                CHECK(back.fwd()[pos] == static_cast<Index>(img));
            }
            const auto again = galois_to_embedded(back);
            const auto u1 = double_base_unit(e.source(), ConceptLattice(to_polarity(e.source())));
            const auto u2 = double_base_unit(e.target(), ConceptLattice(to_polarity(e.target())));
            for (Index x = 0; x < u1.size(); ++x) CHECK(again.fwd()[u1[x]] == u2[e.fwd()[x]]);
            for (Index y = 0; y < u2.size(); ++y) CHECK(again.bwd()[u2[y]] == u1[e.bwd()[y]]);
        }
        CHECK(checked > 0);
    }
}

TEST_CASE("polarity isomorphism respects both sides") {
    const auto m3 = fixtures::m3_polarity();
    const auto relabelled = Polarity::from_predicate({"x", "y", "z"}, {"p", "q", "r"}, [](Index k, Index u) { return k == (u + 1) % 3; });
    CHECK(polarity_isomorphic(m3, relabelled));
    CHECK_FALSE(polarity_isomorphic(m3, m3.dual().dual() == m3 ? fixtures::one_by_one_empty() : m3));
}
