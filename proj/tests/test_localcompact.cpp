#include "oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kodual;
using fixtures::chain;

namespace {

BiDcpo dia_bidcpo() { return embedded_to_bidcpo(fixtures::dia()); }

/// u below k: every o-element above k is above u.
bool black(const oracle::Matrix& rel, std::size_t u, std::size_t k) {
    for (std::size_t v = 0; v < rel[k].size(); ++v)
        if (rel[k][v] && !oracle::o_leq(rel, u, v)) return false;
    return true;
}

bool lc_oracle(const Polarity& p) {
    const auto rel = oracle::relation_of(p);
    for (Index k = 0; k < p.k_size(); ++k)
        for (Index u = 0; u < p.o_size(); ++u) {
            if (!rel[k][u]) continue;
            bool found = false;
            for (Index u2 = 0; u2 < p.o_size() && !found; ++u2)
                for (Index k2 = 0; k2 < p.k_size() && !found; ++k2)
                    found = rel[k][u2] && black(rel, u2, k2) && rel[k2][u];
            if (!found) return false;
        }
    return true;
}

bool bicontinuous_oracle(const Polarity& p) {
    if (!lc_oracle(p)) return false;
    const auto rel = oracle::relation_of(p);
    oracle::Matrix kle(p.k_size(), std::vector<bool>(p.k_size())), ole(p.o_size(), std::vector<bool>(p.o_size()));
    for (Index a = 0; a < p.k_size(); ++a)
        for (Index b = 0; b < p.k_size(); ++b) kle[a][b] = oracle::k_leq(rel, a, b);
    for (Index a = 0; a < p.o_size(); ++a)
        for (Index b = 0; b < p.o_size(); ++b) ole[a][b] = oracle::o_leq(rel, a, b);
    for (Index u = 0; u < p.o_size(); ++u) {
        oracle::Bits below(p.k_size());
        for (Index k = 0; k < p.k_size(); ++k) below[k] = rel[k][u];
        if (!oracle::directed(kle, below)) return false;
    }
    for (Index k = 0; k < p.k_size(); ++k)
        if (!oracle::directed(ole, rel[k], true)) return false;
    return true;
}

Polarity empty_k_side() { return Polarity::from_predicate({}, {"u"}, [](Index, Index) { return false; }); }

}  // namespace

TEST_CASE("black triangle") {
    const auto sing = kospace_to_bidcpo(fixtures::sing());
    CHECK(black_triangle(sing.pol(), 0, 0));
    const auto m3 = fixtures::m3_polarity();
    CHECK(black_triangle(m3, m3.o_index("a"), m3.k_index("a")));

    auto rng = instance_rng(51, 1, 0);
    for (int i = 0; i < 60; ++i) {
        const auto b = validate_bidcpo(random_purified_polarity(rng, 4, 4)).value();
        const ConceptLattice c(b.pol());
        const auto rel = oracle::relation_of(b.pol());
        const auto table = black_triangle_relation(b);
        for (Index u = 0; u < b.pol().o_size(); ++u)
            for (Index k = 0; k < b.pol().k_size(); ++k) {
                CHECK(black_triangle(b.pol(), u, k) == black(rel, u, k));
                CHECK(table[u].test(k) == black(rel, u, k));
                CHECK(black(rel, u, k) == c.lattice().leq(c.iota_o(u), c.iota_k(k)));
            }
    }
}

TEST_CASE("local compactness and bicontinuity") {
    SUBCASE("DIA") {
        const auto r = check_bicontinuous(fixtures::dia());
        CHECK(r.locally_compact);
        CHECK(r.bicontinuous);
        CHECK(r.lc_witnesses.empty());
    }
    SUBCASE("empty structures") {
        CHECK(check_bicontinuous(fixtures::empty_kospace()).bicontinuous);
        CHECK(check_locally_compact(validate_bidcpo(Polarity{}).value()).locally_compact);
    }
    SUBCASE("2-chain with minimal families") {
        const auto c = FinPoset::chain({"a", "b"});
        const auto r = check_locally_compact(minimal_kospace(c));
        CHECK(r.locally_compact);
    }
    SUBCASE("filters of finite posets are bicontinuous") {
        for (const auto& d : posets_up_to(4)) CHECK(check_bicontinuous(from_dcpo_filters(d).value()).bicontinuous);
    }
    SUBCASE("agreement with the oracle") {
        for (const auto& p : purified_polarities_up_to(3, 3)) {
            const auto b = validate_bidcpo(p).value();
            const auto r = check_bicontinuous(b);
            CHECK(r.locally_compact == lc_oracle(p));
            CHECK(r.bicontinuous == bicontinuous_oracle(p));
            CHECK(r.lc_witnesses.empty() == r.locally_compact);
            CHECK(r.bicontinuity_witnesses.empty() == r.bicontinuous);
            // All three carriers agree.
            CHECK(check_bicontinuous(bidcpo_to_embedded(b)).bicontinuous == r.bicontinuous);
        }
        auto rng = instance_rng(51, 2, 0);
        for (int i = 0; i < 60; ++i) {
            const auto s = random_kospace(rng, 1 + uniform_below(rng, 4));
            CHECK(check_bicontinuous(s).bicontinuous == bicontinuous_oracle(kospace_to_bidcpo(s).pol()));
        }
    }
}

TEST_CASE("way below") {
    const auto b = dia_bidcpo();
    const auto& p = b.pol();
    CHECK(way_below(b, p.o_index("bot"), p.o_index("a")));
    for (Index v = 0; v < p.o_size(); ++v)
        for (Index u = 0; u < p.o_size(); ++u) CHECK(way_below(b, v, u) == dcpo_way_below(p.o_order(), v, u));

    const auto none = validate_bidcpo(empty_k_side()).value();
    CHECK_FALSE(interpolated_below(none, 0, 0));
    CHECK_THROWS_AS(way_below(none, 0, 0), PreconditionError);

    auto rng = instance_rng(51, 3, 0);
    for (int i = 0; i < 40; ++i) {
        const auto bb = kospace_to_bidcpo(random_bicontinuous_kospace(rng, 1 + uniform_below(rng, 4)));
        const auto& q = bb.pol();
        if (q.o_size() > 10) continue;
        const auto order = q.o_order();
        for (Index u = 0; u < q.o_size(); ++u) {
            Subset below(q.o_size());
            for (Index v = 0; v < q.o_size(); ++v) {
                CHECK(way_below(bb, v, u) == dcpo_way_below(order, v, u));
                if (interpolated_below(bb, v, u)) below.set(v);
            }
            // Directed with join u.
            CHECK(is_directed(order, below));
            Index top = 0;
            bool found = false;
            for (Index v : members(below))
                if (below.is_subset_of(order.down(v))) {
                    top = v;
                    found = true;
                }
            REQUIRE(found);
            CHECK(top == u);
        }
    }
}

TEST_CASE("Hofmann-Mislove bijections") {
    const auto dia = hofmann_mislove(dia_bidcpo());
    CHECK(dia.k_to_filter.size() == 3);
    CHECK(dia.o_to_filter.size() == 3);
    const auto c3 = hofmann_mislove(from_dcpo_filters(chain(3)).value());
    CHECK(c3.k_to_filter.size() == 3);
    const auto empty = hofmann_mislove(validate_bidcpo(Polarity{}).value());
    CHECK(empty.k_to_filter.empty());
    CHECK(empty.o_to_filter.empty());
    CHECK(check_bicontinuous(validate_bidcpo(fixtures::m3_polarity()).value()).bicontinuous);
    CHECK_THROWS_AS(hofmann_mislove(validate_bidcpo(fixtures::one_by_one_empty()).value()), PreconditionError);

    auto rng = instance_rng(51, 4, 0);
    for (int i = 0; i < 40; ++i) {
        const auto b = kospace_to_bidcpo(random_bicontinuous_kospace(rng, 1 + uniform_below(rng, 4)));
        const auto r = hofmann_mislove(b);
        CHECK(r.k_to_filter.size() == filters(b.pol().o_order()).size());
        CHECK(r.o_to_filter.size() == filters(b.pol().k_order().dual()).size());
    }
}

TEST_CASE("meets and joins") {
    SUBCASE("DIA") {
        const auto b = dia_bidcpo();
        CHECK_FALSE(has_finite_meets(b.pol().o_order()));
        CHECK_FALSE(has_finite_joins(b.pol().k_order()));
        CHECK_FALSE(check_meets_joins_transfer(b));
    }
    SUBCASE("filters of a finite frame") {
        const auto b = from_dcpo_filters(fixtures::boolean4().poset()).value();
        CHECK(has_finite_meets(b.pol().o_order()));
        CHECK(has_finite_joins(b.pol().k_order()));
        CHECK(check_meets_joins_transfer(b));
    }
    SUBCASE("empty bi-dcpo") { CHECK_FALSE(check_meets_joins_transfer(validate_bidcpo(Polarity{}).value())); }
    SUBCASE("non-bicontinuous input is rejected") {
        CHECK_THROWS_AS(check_meets_joins_transfer(validate_bidcpo(fixtures::one_by_one_empty()).value()), PreconditionError);
    }
    SUBCASE("closure in double base lattices") {
        auto rng = instance_rng(51, 5, 0);
        for (int i = 0; i < 100; ++i) {
            const auto p = random_purified_polarity(rng, 1 + uniform_below(rng, 4), 1 + uniform_below(rng, 4));
            const auto d = to_double_base(p).value();
            const auto q = to_polarity(d);
            const auto order = q.o_order();
            bool codirected = true;
            for (Index k = 0; k < q.k_size(); ++k) codirected = codirected && is_codirected(order, q.row(k));
            CHECK(oset_closed_under_finite_meets(d) == (has_finite_meets(order) && codirected));
            CHECK(oset_closed_under_finite_joins(d) == has_finite_joins(order));
        }
    }
    SUBCASE("unions iff intersections on bicontinuous ko-spaces") {
        auto rng = instance_rng(51, 6, 0);
        for (int i = 0; i < 100; ++i) {
            const auto s = random_bicontinuous_kospace(rng, 1 + uniform_below(rng, 4));
            bool o_inter = s.ofam().contains(s.base().full()), k_union = s.kfam().contains(s.base().empty());
            for (const auto& a : s.ofam().members())
                for (const auto& b : s.ofam().members()) o_inter = o_inter && s.ofam().contains(a & b);
            for (const auto& a : s.kfam().members())
                for (const auto& b : s.kfam().members()) k_union = k_union && s.kfam().contains(a | b);
            CHECK(o_inter == k_union);
        }
    }
}

TEST_CASE("recovering the families of a bicontinuous ko-space") {
    auto rng = instance_rng(51, 7, 0);
    for (int i = 0; i < 60; ++i) {
        const auto s = random_bicontinuous_kospace(rng, 1 + uniform_below(rng, 4));
        const auto& p = s.base();
        const auto kfam = s.kfam().members(), ofam = s.ofam().members();
        oracle::Matrix incl_o(ofam.size(), std::vector<bool>(ofam.size())), incl_k(kfam.size(), std::vector<bool>(kfam.size()));
        for (Index a = 0; a < ofam.size(); ++a)
            for (Index b = 0; b < ofam.size(); ++b) incl_o[a][b] = ofam[a].is_subset_of(ofam[b]);
        for (Index a = 0; a < kfam.size(); ++a)
            for (Index b = 0; b < kfam.size(); ++b) incl_k[a][b] = kfam[a].is_subset_of(kfam[b]);
        for (const auto& bits : oracle::all_subsets(p.size())) {
            Subset sset(p.size());
            for (Index x = 0; x < p.size(); ++x)
                if (bits[x]) sset.set(x);
            // k-sets: upsets whose o-neighbourhoods are codirected with intersection S.
            oracle::Bits nbhd(ofam.size());
            Subset meet = p.full();
            for (Index j = 0; j < ofam.size(); ++j)
                if (sset.is_subset_of(ofam[j])) {
                    nbhd[j] = true;
                    meet &= ofam[j];
                }
            const bool saturated = p.is_upset(sset) && oracle::directed(incl_o, nbhd, true) && meet == sset;
            CHECK(s.kfam().contains(sset) == saturated);
            // o-sets: upsets whose k-subsets are directed with union S.
            oracle::Bits inside(kfam.size());
            Subset join(p.size());
            for (Index j = 0; j < kfam.size(); ++j)
                if (kfam[j].is_subset_of(sset)) {
                    inside[j] = true;
                    join |= kfam[j];
                }
            const bool cosaturated = p.is_upset(sset) && oracle::directed(incl_k, inside) && join == sset;
            CHECK(s.ofam().contains(sset) == cosaturated);
        }
    }
}

TEST_CASE("closed families are all upsets") {
    // Locally compact, o-sets closed under finite intersections, k-sets under finite unions.
    auto rng = instance_rng(51, 8, 0);
    std::size_t seen = 0;
    for (int i = 0; i < 200; ++i) {
        const auto s = random_kospace(rng, 1 + uniform_below(rng, 4));
        if (!check_locally_compact(s).locally_compact) continue;
        bool closed = s.ofam().contains(s.base().full()) && s.kfam().contains(s.base().empty());
        for (const auto& a : s.ofam().members())
            for (const auto& b : s.ofam().members()) closed = closed && s.ofam().contains(a & b);
        for (const auto& a : s.kfam().members())
            for (const auto& b : s.kfam().members()) closed = closed && s.kfam().contains(a | b);
        if (!closed) continue;
        ++seen;
        const auto ups = all_upsets(s.base());
        CHECK(s.kfam().members().size() == ups.size());
        CHECK(s.ofam().members().size() == ups.size());
    }
    CHECK(seen > 0);
}

TEST_CASE("Wilker conditions") {
    const auto t = FinTopSpace::make({"0", "1"}, {Subset(2), Subset(2, 2u), Subset(2, 3u)}).value();
    const auto s = from_topspace(t).value();
    CHECK(wilker_check(s, 1).outcome == WilkerOutcome::Holds);
    CHECK(wilker_check(degroot_dual(s), 2).outcome == WilkerOutcome::Holds);
    // DIA has no binary joins of o-elements a, b.
    CHECK(wilker_check(dia_bidcpo(), 1).outcome == WilkerOutcome::Rejected);

    auto rng = instance_rng(51, 9, 0);
    std::size_t held = 0;
    for (int i = 0; i < 80; ++i) {
        const auto k = random_bicontinuous_kospace(rng, 1 + uniform_below(rng, 4));
        for (int v : {1, 2}) {
            const auto r = wilker_check(k, v);
            CHECK(r.outcome != WilkerOutcome::Counterexample);
            held += r.outcome == WilkerOutcome::Holds;
            CHECK(wilker_check(degroot_dual(k), 3 - v).outcome == r.outcome);
        }
    }
    CHECK(held > 0);
}

TEST_CASE("distributivity from one side") {
    for (const auto& l : lattices_up_to(6)) {
        if (!is_distributive_lattice(l)) continue;
        const auto b = from_dcpo_filters(l.poset()).value();
        const auto o = distributivity_from_side(b, LatticeSide::O);
        const auto k = distributivity_from_side(b, LatticeSide::K);
        REQUIRE(o.ok());
        REQUIRE(k.ok());
        CHECK(o.value());
        CHECK(k.value());
    }
    const auto m3 = from_dcpo_filters(fixtures::m3_lattice().poset()).value();
    const auto r = distributivity_from_side(m3, LatticeSide::O);
    if (r.ok()) CHECK_FALSE(r.value());
    CHECK_FALSE(is_distributive_bidcpo(m3));
    // M3 as a polarity: the o-order is an antichain, so the side hypotheses fail.
    CHECK_FALSE(distributivity_from_side(validate_bidcpo(fixtures::m3_polarity()).value(), LatticeSide::O).ok());
}

TEST_CASE("dirspaces") {
    SUBCASE("singleton whose only open is the whole set") {
        Subset all(1);
        all.set();
        const auto d = Dirspace::make({"x"}, {all}).value();
        CHECK_FALSE(d.is_saturated(Subset(1)));
        CHECK(d.is_saturated(all));
    }
    SUBCASE("finite T0 spaces") {
        auto rng = instance_rng(51, 10, 0);
        for (int i = 0; i < 30; ++i) {
            const auto k = random_kospace(rng, 1 + uniform_below(rng, 4));
            std::vector<Subset> opens = all_upsets(k.base());
            const auto d = Dirspace::make(k.base().names(), opens).value();
            CHECK(d.is_t0());
            CHECK(d.is_well_filtered());
            // Saturated sets are the intersections of opens (here: all upsets).
            for (const auto& bits : oracle::all_subsets(k.size())) {
                Subset s(k.size());
                for (Index x = 0; x < k.size(); ++x)
                    if (bits[x]) s.set(x);
                CHECK(d.is_saturated(s) == k.base().is_upset(s));
            }
        }
    }
    SUBCASE("involution") {
        auto rng = instance_rng(51, 11, 0);
        std::size_t qualified = 0;
        for (int i = 0; i < 100; ++i) {
            const auto d = random_dirspace(rng, 1 + uniform_below(rng, 4));
            if (!(d.is_locally_compact() && d.is_well_filtered() && d.opens_are_directed_unions())) continue;
            ++qualified;
            CHECK(d.has_degroot_duality());
            const auto once = d.degroot();
            REQUIRE(once.ok());
            const auto twice = once.value().degroot();
            REQUIRE(twice.ok());
            CHECK(twice.value() == d);
        }
        CHECK(qualified > 0);
    }
}

TEST_CASE("finite frame pipeline") {
    const auto c3 = finite_frame_pipeline(FinLattice::make(chain(3)));
    REQUIRE(c3.ok());
    CHECK(c3.value().points.size() == 2);
    CHECK_MESSAGE(c3.value().all_pass(), c3.value().failures());

    const auto b4 = finite_frame_pipeline(fixtures::boolean4());
    REQUIRE(b4.ok());
    CHECK(b4.value().points.size() == 2);
    CHECK(b4.value().all_pass());
    CHECK(b4.value().lattice_to_opens.size() == 4);

    const auto one = finite_frame_pipeline(FinLattice::make(FinPoset::antichain({"x"})));
    REQUIRE(one.ok());
    CHECK(one.value().points.empty());
    CHECK(one.value().all_pass());

    CHECK_FALSE(finite_frame_pipeline(fixtures::m3_lattice()).ok());
    for (const auto& l : lattices_up_to(6)) {
        if (!is_distributive_lattice(l)) continue;
        const auto r = finite_frame_pipeline(l);
        REQUIRE(r.ok());
        CHECK_MESSAGE(r.value().all_pass(), r.value().failures());
        // Points are the meet-prime elements other than the top.
        std::size_t prime = 0;
        for (Index a = 0; a < l.size(); ++a) {
            if (a == l.top()) continue;
            bool ok = true;
            for (Index x = 0; x < l.size(); ++x)
                for (Index y = 0; y < l.size(); ++y)
                    if (l.leq(l.meet(x, y), a) && !l.leq(x, a) && !l.leq(y, a)) ok = false;
            prime += ok;
        }
        CHECK(r.value().points.size() == prime);
    }
}
