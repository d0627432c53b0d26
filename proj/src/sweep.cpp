#include "kodual/sweep.hpp"

#include "kodual/detail/subfamily.hpp"
#include "kodual/generate.hpp"
#include "kodual/io.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdio>
#include <map>
#include <memory>
#include <sstream>
#include <thread>

namespace kodual {

namespace {

constexpr std::size_t kRandomPolarities = 500;
constexpr std::size_t kRandomRoundtrips = 200;
constexpr std::size_t kRandomInstances = 200;
constexpr std::size_t kFunctorPairs = 100;
constexpr std::size_t kCompositions = 50;
constexpr std::size_t kMorphismRoundtrips = 100;
constexpr std::size_t kDualityInstances = 100;
constexpr std::size_t kShrinkSteps = 256;
// Literal way-below enumerates directed subsets; above this it is skipped and tallied.
constexpr std::size_t kWayBelowOracleLimit = 10;

struct Bound {
    std::size_t first = 0;
    std::size_t second = 0;
};

Bound parse_bound(const std::string& text) {
    auto number = [&](const std::string& s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
            throw Error("malformed bound '" + text + "': expected n or AxB");
        return static_cast<std::size_t>(std::stoul(s));
    };
    const auto x = text.find('x');
    if (x == std::string::npos) {
        const auto n = number(text);
        return {n, n};
    }
    return {number(text.substr(0, x)), number(text.substr(x + 1))};
}

std::uint64_t stream_of(const std::string& id, const std::string& group) {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : id + "/" + group) h = (h ^ c) * 1099511628211ull;
    return h;
}

std::string instance_name(const std::string& group, std::size_t i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%05zu", i);
    return group + "-" + buf;
}

struct Verdict {
    bool pass = true;
    std::string detail;
    Tallies tallies;

    void require(bool ok, const std::string& what) {
        if (!ok && pass) {
            pass = false;
            detail = what;
        } else if (!ok) {
            detail += "; " + what;
        }
    }
    void count(const std::string& what, std::size_t n = 1) { tallies.emplace_back(what, n); }
};

template <class T>
Verdict guarded(const std::function<Verdict(const T&)>& check, const T& value) {
    try {
        return check(value);
    } catch (const std::exception& e) {
        Verdict v;
        v.require(false, std::string("exception: ") + e.what());
        return v;
    }
}

template <class T>
struct Family {
    std::function<Verdict(const T&)> check;
    std::function<std::vector<T>(const T&)> smaller;  // may be empty
    std::function<std::string(const T&)> describe;
};

template <class T>
SweepTask make_task(std::string name, std::function<T()> make, const Family<T>& fam) {
    SweepTask task;
    task.name = name;
    task.run = [name, make, fam] {
        Verdict v;
        try {
            v = guarded(fam.check, make());
        } catch (const std::exception& e) {
            v.require(false, std::string("generator failed: ") + e.what());
        }
        return InstanceOutcome{name, v.pass, v.detail, v.tallies};
    };
    task.shrink = [make, fam]() -> std::string {
        T current = make();
        Verdict last = guarded(fam.check, current);
        if (last.pass) return {};
        if (fam.smaller) {
            for (std::size_t step = 0; step < kShrinkSteps; ++step) {
                bool moved = false;
                for (auto& candidate : fam.smaller(current)) {
                    auto v = guarded(fam.check, candidate);
                    if (!v.pass) {
                        current = std::move(candidate);
                        last = std::move(v);
                        moved = true;
                        break;
                    }
                }
                if (!moved) break;
            }
        }
        return fam.describe(current) + " -- " + last.detail;
    };
    return task;
}

template <class T>
std::string describe_json(const T& value) {
    return io::encode(value).dump();
}

// ---- shrinking candidates -------------------------------------------------------------------

std::optional<KoSpace> restrict_kospace(const KoSpace& s, const Subset& keep) {
    const auto kept = members(keep);
    auto cut = [&](const Subset& a) {
        Subset out(kept.size());
        for (Index i = 0; i < kept.size(); ++i)
            if (a.test(kept[i])) out.set(i);
        return out;
    };
    std::vector<Subset> ks, os;
    for (const auto& k : s.kfam().members()) ks.push_back(cut(k));
    for (const auto& u : s.ofam().members()) os.push_back(cut(u));
    sort_unique(ks);
    sort_unique(os);
    auto r = validate_kospace(s.base().restrict(keep), std::move(ks), std::move(os));
    if (!r) return std::nullopt;
    return std::move(r).value();
}

std::vector<KoSpace> smaller_kospaces(const KoSpace& s) {
    std::vector<KoSpace> out;
    for (Index x = 0; x < s.size(); ++x) {
        auto keep = s.base().full();
        keep.reset(x);
        if (auto r = restrict_kospace(s, keep)) out.push_back(std::move(*r));
    }
    return out;
}

std::vector<Polarity> smaller_polarities(const Polarity& p) {
    std::vector<Polarity> out;
    auto without = [&](std::optional<Index> drop_k, std::optional<Index> drop_o) {
        std::vector<Index> ks, os;
        std::vector<std::string> kn, on;
        for (Index k = 0; k < p.k_size(); ++k)
            if (k != drop_k) ks.push_back(k), kn.push_back(p.k_names()[k]);
        for (Index u = 0; u < p.o_size(); ++u)
            if (u != drop_o) os.push_back(u), on.push_back(p.o_names()[u]);
        return purify(Polarity::from_predicate(kn, on, [&](Index a, Index b) { return p.related(ks[a], os[b]); }));
    };
    for (Index k = 0; k < p.k_size(); ++k) out.push_back(without(k, std::nullopt));
    for (Index u = 0; u < p.o_size(); ++u) out.push_back(without(std::nullopt, u));
    return out;
}

std::vector<CRelation> smaller_crelations(const CRelation& r) {
    std::vector<CRelation> out;
    const auto& src = r.source();
    const auto& tgt = r.target();
    auto attempt = [&](const Subset& keep_s, const Subset& keep_t) {
        auto s = restrict_kospace(src, keep_s);
        auto t = restrict_kospace(tgt, keep_t);
        if (!s || !t) return;
        const auto xs = members(keep_s);
        const auto ys = members(keep_t);
        std::vector<Subset> images;
        for (Index x : xs) {
            Subset img(ys.size());
            for (Index j = 0; j < ys.size(); ++j)
                if (r.rel().related(x, ys[j])) img.set(j);
            images.push_back(std::move(img));
        }
        try {
            auto c = validate_crelation(WeakRel(s->base(), t->base(), std::move(images)), *s, *t);
            if (c) out.push_back(std::move(c).value());
        } catch (const Error&) {
        }
    };
    for (Index x = 0; x < src.size(); ++x) {
        auto keep = src.base().full();
        keep.reset(x);
        attempt(keep, tgt.base().full());
    }
    for (Index y = 0; y < tgt.size(); ++y) {
        auto keep = tgt.base().full();
        keep.reset(y);
        attempt(src.base().full(), keep);
    }
    return out;
}

// ---- order helpers ---------------------------------------------------------------------------

using Leq = std::function<bool(Index, Index)>;

std::optional<Index> greatest_lower_bound(std::size_t n, const Leq& leq, const std::vector<Index>& s) {
    std::vector<Index> lower;
    for (Index l = 0; l < n; ++l)
        if (std::all_of(s.begin(), s.end(), [&](Index x) { return leq(l, x); })) lower.push_back(l);
    for (Index g : lower)
        if (std::all_of(lower.begin(), lower.end(), [&](Index l) { return leq(l, g); })) return g;
    return std::nullopt;
}

std::optional<Index> least_upper_bound(std::size_t n, const Leq& leq, const std::vector<Index>& s) {
    return greatest_lower_bound(n, [&](Index a, Index b) { return leq(b, a); }, s);
}

std::vector<Index> mask_members(detail::Mask m) {
    std::vector<Index> out;
    for (Index i = 0; m >> i; ++i)
        if (m >> i & 1) out.push_back(i);
    return out;
}

// ---- corpora --------------------------------------------------------------------------------

struct Builder {
    std::string id;
    std::uint64_t seed;
    Bound bound;
    std::vector<SweepTask> tasks;

    template <class T>
    void fixed(const std::string& group, const std::vector<T>& values, const Family<T>& fam) {
        auto shared = std::make_shared<const std::vector<T>>(values);
        for (std::size_t i = 0; i < shared->size(); ++i)
            tasks.push_back(make_task<T>(instance_name(group, i), [shared, i] { return (*shared)[i]; }, fam));
    }

    template <class T>
    void random(const std::string& group, std::size_t count, std::function<T(Rng&, std::size_t)> gen,
                const Family<T>& fam) {
        const auto stream = stream_of(id, group);
        const auto s = seed;
        for (std::size_t i = 0; i < count; ++i)
            tasks.push_back(make_task<T>(
                instance_name(group, i),
                [gen, s, stream, i] {
                    auto rng = instance_rng(s, stream, i);
                    return gen(rng, i);
                },
                fam));
    }
};

std::size_t between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + uniform_below(rng, hi - lo + 1); }

std::vector<Polarity> exhaustive_polarities(Bound b) { return purified_polarities_up_to(b.first, b.second); }

Polarity random_5x5(Rng& rng, std::size_t) { return random_purified_polarity(rng, 5, 5); }

// bifounded -----------------------------------------------------------------------------------

void build_bifounded(Builder& b) {
    Family<Polarity> fam;
    fam.check = [](const Polarity& p) {
        Verdict v;
        auto valid = validate_bidcpo(p);
        if (!valid) {
            v.count("not a bi-dcpo");
            return v;
        }
        const bool pol = is_bifounded(p);
        const bool lat = is_bifounded(ConceptLattice(p).lattice());
        v.require(pol, "bi-dcpo is not bifounded");
        v.require(pol == lat, "polarity and concept lattice disagree on bifoundedness");
        v.count("bi-dcpos");
        return v;
    };
    fam.smaller = smaller_polarities;
    fam.describe = describe_json<Polarity>;
    b.fixed("exhaustive", exhaustive_polarities(b.bound), fam);
    b.random<Polarity>("random5x5", kRandomPolarities, random_5x5, fam);
}

// corr-distributivity -------------------------------------------------------------------------

void build_corr_distributivity(Builder& b) {
    Family<Polarity> fam;
    fam.check = [](const Polarity& p) {
        Verdict v;
        auto valid = validate_bidcpo(p);
        if (!valid) {
            v.count("not a bi-dcpo");
            return v;
        }
        const auto& bd = valid.value();
        const bool pol = is_distributive_bidcpo(bd);
        const bool lat = is_distributive_lattice(ConceptLattice(p).lattice());
        const bool emb = is_distributive_embedded(bidcpo_to_embedded(bd));
        v.require(pol == lat, "bi-dcpo and concept lattice disagree on distributivity");
        v.require(pol == emb, "bi-dcpo and embedded bi-dcpo disagree on distributivity");
        v.count(pol ? "distributive" : "not distributive");
        return v;
    };
    fam.smaller = smaller_polarities;
    fam.describe = describe_json<Polarity>;
    b.fixed("exhaustive", exhaustive_polarities(b.bound), fam);
    b.random<Polarity>("random5x5", kRandomPolarities, random_5x5, fam);
}

// lattice catalogs ----------------------------------------------------------------------------

void build_raney_char(Builder& b) {
    Family<FinLattice> fam;
    fam.check = [](const FinLattice& l) {
        Verdict v;
        const bool raney = is_raney(l);
        const bool dist = is_distributive_lattice(l);
        const bool bif = is_bifounded(l);
        v.require(raney == (dist && bif), "Raney does not match distributive and bifounded");
        if (raney) {
            auto rt = raney_lattice_roundtrip(l);
            v.require(rt.ok() && rt.value().ok, "Raney lattice is not recovered from its CP pairs");
        }
        v.count(raney ? "raney" : "not raney");
        return v;
    };
    fam.describe = [](const FinLattice& l) { return describe_json(l); };
    b.fixed("lattice", lattices_up_to(b.bound.first), fam);
}

std::vector<FinLattice> distributive_lattices(std::size_t n) {
    auto all = lattices_up_to(n);
    std::vector<FinLattice> out;
    for (auto& l : all)
        if (is_distributive_lattice(l)) out.push_back(std::move(l));
    return out;
}

void build_key_lemma(Builder& b) {
    Family<FinLattice> fam;
    fam.check = [](const FinLattice& l) {
        Verdict v;
        v.require(key_lemma_check(l), "CP pairs differ from the neswarrow pairs");
        return v;
    };
    fam.describe = [](const FinLattice& l) { return describe_json(l); };
    b.fixed("distributive", distributive_lattices(b.bound.first), fam);
}

void build_frame_pipeline(Builder& b) {
    Family<FinLattice> fam;
    fam.check = [](const FinLattice& l) {
        Verdict v;
        auto r = finite_frame_pipeline(l);
        v.require(r.ok(), "pipeline rejected a distributive lattice: " + format_diagnostics(r.diagnostics()));
        if (r.ok()) v.require(r.value().all_pass(), "failed stages: " + r.value().failures());
        return v;
    };
    fam.describe = [](const FinLattice& l) { return describe_json(l); };
    b.fixed("distributive", distributive_lattices(b.bound.first), fam);
}

// esakia --------------------------------------------------------------------------------------

void build_esakia(Builder& b) {
    Family<CRelation> fam;
    fam.check = [](const CRelation& r) {
        Verdict v;
        v.require(esakia_check(r, true), "forward images or universal preimages break an Esakia equality");
        return v;
    };
    fam.smaller = smaller_crelations;
    fam.describe = describe_json<CRelation>;
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    b.random<CRelation>(
        "crelation", kRandomInstances,
        [n](Rng& rng, std::size_t) { return random_crelation(rng, between(rng, 1, n), between(rng, 1, n)); }, fam);
}

// morphism-preservation -----------------------------------------------------------------------

GaloisMorphism random_morphism(Rng& rng, std::size_t n, std::size_t i) {
    if (i % 2 == 0) {
        const auto m = std::min<std::size_t>(n, 3);
        return random_distributive_galois(rng, between(rng, 1, m), between(rng, 1, m));
    }
    auto p1 = random_purified_polarity(rng, between(rng, 1, n), between(rng, 1, n));
    auto p2 = random_purified_polarity(rng, between(rng, 1, n), between(rng, 1, n));
    if (auto g = random_galois(rng, p1, p2)) return *g;
    return random_distributive_galois(rng, 2, 2);
}

Verdict preservation(const GaloisMorphism& m) {
    Verdict v;
    const auto& p1 = m.source();
    const auto& p2 = m.target();
    const Leq k1 = [&](Index a, Index b) { return p1.k_leq(a, b); };
    const Leq k2 = [&](Index a, Index b) { return p2.k_leq(a, b); };
    const Leq o1 = [&](Index a, Index b) { return p1.o_leq(a, b); };
    const Leq o2 = [&](Index a, Index b) { return p2.o_leq(a, b); };
    std::size_t checked = 0;
    detail::for_each_directed_subset(p1.k_size(), true, true, k1, [&](detail::Mask mask) {
        const auto s = mask_members(mask);
        auto meet = greatest_lower_bound(p1.k_size(), k1, s);
        std::vector<Index> img;
        for (Index k : s) img.push_back(m.fwd()[k]);
        auto image_meet = greatest_lower_bound(p2.k_size(), k2, img);
        ++checked;
        v.require(meet && image_meet && m.fwd()[*meet] == *image_meet, "forward map misses a codirected meet");
    });
    detail::for_each_directed_subset(p2.o_size(), false, true, o2, [&](detail::Mask mask) {
        const auto s = mask_members(mask);
        auto join = least_upper_bound(p2.o_size(), o2, s);
        std::vector<Index> img;
        for (Index u : s) img.push_back(m.bwd()[u]);
        auto image_join = least_upper_bound(p1.o_size(), o1, img);
        ++checked;
        v.require(join && image_join && m.bwd()[*join] == *image_join, "backward map misses a directed join");
    });
    v.count("subsets checked", checked);
    return v;
}

void build_morphism_preservation(Builder& b) {
    Family<GaloisMorphism> fam;
    fam.check = preservation;
    fam.describe = describe_json<GaloisMorphism>;
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    b.random<GaloisMorphism>("galois", kRandomInstances,
                             [n](Rng& rng, std::size_t i) { return random_morphism(rng, n, i); }, fam);
}

// wilker --------------------------------------------------------------------------------------

const char* outcome_name(WilkerOutcome o) {
    switch (o) {
        case WilkerOutcome::Rejected: return "preconditions fail";
        case WilkerOutcome::Holds: return "holds";
        case WilkerOutcome::Counterexample: return "counterexample";
    }
    return "?";
}

void build_wilker(Builder& b, int variant) {
    Family<KoSpace> fam;
    fam.check = [variant](const KoSpace& s) {
        Verdict v;
        auto record = [&](const std::string& where, const WilkerResult& r) {
            v.count(where + " " + outcome_name(r.outcome));
            v.require(r.outcome != WilkerOutcome::Counterexample, where + ": " + r.detail);
        };
        record("kospace", wilker_check(s, variant));
        record("degroot dual", wilker_check(degroot_dual(s), variant));
        const auto bd = kospace_to_bidcpo(s);
        record("bidcpo", wilker_check(bd, variant));
        record("lawson dual", wilker_check(lawson_dual(bd), variant));
        return v;
    };
    fam.smaller = smaller_kospaces;
    fam.describe = describe_json<KoSpace>;
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    b.random<KoSpace>(
        "bicontinuous", kRandomInstances,
        [n](Rng& rng, std::size_t) { return random_bicontinuous_kospace(rng, between(rng, 1, n)); }, fam);
}

// hofmis and meets-joins share a corpus of bicontinuous bi-dcpos --------------------------------

BiDcpo random_bicontinuous_bidcpo(Rng& rng, std::size_t n, std::size_t i) {
    BiDcpo b = (i % 2 == 0) ? kospace_to_bidcpo(random_bicontinuous_kospace(rng, between(rng, 1, n)))
                            : from_dcpo_filters(random_poset(rng, between(rng, 1, n))).value();
    return (i % 4 >= 2) ? lawson_dual(b) : b;
}

std::vector<BiDcpo> smaller_bidcpos(const BiDcpo& b) {
    std::vector<BiDcpo> out;
    for (auto& p : smaller_polarities(b.pol())) {
        auto v = validate_bidcpo(p);
        if (v && check_bicontinuous(v.value()).bicontinuous) out.push_back(std::move(v).value());
    }
    return out;
}

void way_below_checks(const BiDcpo& b, Verdict& v) {
    const auto& p = b.pol();
    const auto order = p.o_order();
    for (Index u = 0; u < p.o_size(); ++u) {
        Subset below(p.o_size());
        for (Index w = 0; w < p.o_size(); ++w)
            if (interpolated_below(b, w, u)) below.set(w);
        v.require(is_directed(order, below), "elements way below " + p.o_names()[u] + " are not directed");
        auto join = least_upper_bound(p.o_size(), [&](Index x, Index y) { return p.o_leq(x, y); }, members(below));
        v.require(join == u, "elements way below " + p.o_names()[u] + " do not join to it");
    }
    if (p.o_size() > kWayBelowOracleLimit) {
        v.count("literal way-below skipped");
        return;
    }
    for (Index w = 0; w < p.o_size(); ++w)
        for (Index u = 0; u < p.o_size(); ++u)
            v.require(interpolated_below(b, w, u) == dcpo_way_below(order, w, u),
                      "interpolated relation differs from way-below at (" + p.o_names()[w] + "," +
                          p.o_names()[u] + ")");
    v.count("literal way-below compared");
}

void build_hofmis(Builder& b) {
    Family<BiDcpo> fam;
    fam.check = [](const BiDcpo& bd) {
        Verdict v;
        if (!check_bicontinuous(bd).bicontinuous) {
            v.count("not bicontinuous");
            return v;
        }
        const auto hm = hofmann_mislove(bd);
        v.require(hm.k_to_filter.size() == bd.pol().k_size() && hm.o_to_filter.size() == bd.pol().o_size(),
                  "bijection tables have the wrong size");
        way_below_checks(bd, v);
        way_below_checks(lawson_dual(bd), v);
        v.count("bicontinuous");
        return v;
    };
    fam.smaller = smaller_bidcpos;
    fam.describe = describe_json<BiDcpo>;
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    b.random<BiDcpo>("bicontinuous", kRandomInstances,
                     [n](Rng& rng, std::size_t i) { return random_bicontinuous_bidcpo(rng, n, i); }, fam);
}

bool family_closed(const std::vector<Subset>& fam, std::size_t n, bool unions) {
    auto has = [&](const Subset& s) { return std::binary_search(fam.begin(), fam.end(), s, subset_less); };
    if (!has(unions ? Subset(n) : full_subset(n))) return false;
    for (const auto& a : fam)
        for (const auto& b : fam)
            if (!has(unions ? (a | b) : (a & b))) return false;
    return true;
}

void build_meets_joins(Builder& b) {
    Family<BiDcpo> fam;
    fam.check = [](const BiDcpo& bd) {
        Verdict v;
        const auto& p = bd.pol();
        const auto d = bidcpo_to_embedded(bd).dbl();
        // These two hold in every double base lattice.
        bool every_row_codirected = true;
        const auto order = p.o_order();
        for (Index k = 0; k < p.k_size(); ++k) every_row_codirected = every_row_codirected && is_codirected(order, p.row(k));
        v.require(oset_closed_under_finite_meets(d) == (has_finite_meets(order) && every_row_codirected),
                  "o-set meet closure does not match the o-order");
        v.require(oset_closed_under_finite_joins(d) == has_finite_joins(order),
                  "o-set join closure does not match the o-order");
        if (!check_bicontinuous(bd).bicontinuous) {
            v.count("not bicontinuous");
            return v;
        }
        const bool shared = check_meets_joins_transfer(bd);
        v.count(shared ? "finite meets and joins" : "no finite meets or joins");
        if (auto s = bidcpo_to_kospace(bd)) {
            const auto& ks = s.value();
            const bool o_meets = family_closed(ks.ofam().members(), ks.size(), false);
            const bool k_joins = family_closed(ks.kfam().members(), ks.size(), true);
            v.require(o_meets == k_joins, "o-sets closed under intersections but k-sets not under unions, or back");
        }
        for (auto side : {LatticeSide::O, LatticeSide::K}) {
            auto r = distributivity_from_side(bd, side);
            const std::string name = side == LatticeSide::O ? "o-side" : "k-side";
            v.count(name + (r.ok() ? " applies" : " hypotheses fail"));
        }
        return v;
    };
    fam.smaller = smaller_bidcpos;
    fam.describe = describe_json<BiDcpo>;
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    b.random<BiDcpo>("bicontinuous", kRandomInstances,
                     [n](Rng& rng, std::size_t i) { return random_bicontinuous_bidcpo(rng, n, i); }, fam);
    // Arbitrary double base lattices for the closure statements.
    Family<Polarity> any;
    any.check = [](const Polarity& p) {
        Verdict v;
        const auto d = to_double_base(p).value();
        const auto order = p.o_order();
        bool rows = true;
        for (Index k = 0; k < p.k_size(); ++k) rows = rows && is_codirected(order, p.row(k));
        v.require(oset_closed_under_finite_meets(d) == (has_finite_meets(order) && rows),
                  "o-set meet closure does not match the o-order");
        v.require(oset_closed_under_finite_joins(d) == has_finite_joins(order),
                  "o-set join closure does not match the o-order");
        return v;
    };
    any.smaller = smaller_polarities;
    any.describe = describe_json<Polarity>;
    b.random<Polarity>(
        "polarity", kRandomInstances,
        [n](Rng& rng, std::size_t) { return random_purified_polarity(rng, between(rng, 1, n), between(rng, 1, n)); },
        any);
}

// bijcorr-roundtrip ---------------------------------------------------------------------------

void build_bijcorr(Builder& b) {
    Family<KoSpace> fam;
    fam.check = [](const KoSpace& s) {
        Verdict v;
        const auto r = object_roundtrips(s);
        v.require(r.all_pass(), "failed roundtrips: " + r.failures());
        return v;
    };
    fam.smaller = smaller_kospaces;
    fam.describe = describe_json<KoSpace>;
    std::vector<KoSpace> all;
    for (const auto& p : posets_up_to(b.bound.first))
        for (auto& s : admissible_kospaces(p)) all.push_back(std::move(s));
    b.fixed("exhaustive", all, fam);
    b.random<KoSpace>(
        "random", kRandomRoundtrips, [](Rng& rng, std::size_t) { return random_kospace(rng, between(rng, 4, 5)); },
        fam);
}

// main-functoriality --------------------------------------------------------------------------

std::optional<Index> k_named(const Polarity& p, const std::string& name) {
    const auto& ns = p.k_names();
    auto it = std::find(ns.begin(), ns.end(), name);
    if (it == ns.end()) return std::nullopt;
    return static_cast<Index>(it - ns.begin());
}
std::optional<Index> o_named(const Polarity& p, const std::string& name) {
    const auto& ns = p.o_names();
    auto it = std::find(ns.begin(), ns.end(), name);
    if (it == ns.end()) return std::nullopt;
    return static_cast<Index>(it - ns.begin());
}

Verdict crelation_roundtrip(const CRelation& r) {
    Verdict v;
    const auto g = crelation_to_galois(r);
    auto back = galois_to_crelation(g);
    v.require(back.ok(), "image of a c-relation has no c-relation");
    if (!back.ok()) return v;
    const auto& r2 = back.value();
    // Points come back named by the set names of their principal upsets.
    auto unit = [](const FinPoset& from, const FinPoset& to) {
        std::vector<std::optional<Index>> f;
        for (Index x = 0; x < from.size(); ++x) f.push_back(to.find(set_name(from.up(x), from.names())));
        return f;
    };
    const auto f = unit(r.source().base(), r2.source().base());
    const auto h = unit(r.target().base(), r2.target().base());
    bool total = r.source().size() == r2.source().size() && r.target().size() == r2.target().size();
    for (const auto& x : f) total = total && x.has_value();
    for (const auto& y : h) total = total && y.has_value();
    v.require(total, "unit maps are not bijections");
    if (!total) return v;
    for (Index x = 0; x < f.size(); ++x)
        for (Index y = 0; y < h.size(); ++y)
            v.require(r.rel().related(x, y) == r2.rel().related(*f[x], *h[y]), "relation not recovered");
    v.require(kospace_isomorphic(r.source(), r2.source()).has_value(), "source not recovered");
    v.require(kospace_isomorphic(r.target(), r2.target()).has_value(), "target not recovered");
    const auto id = crelation_to_galois(identity_crelation(r.source()));
    v.require(id == GaloisMorphism::identity(id.source()), "identity c-relation not sent to an identity");
    return v;
}

Verdict galois_roundtrip(const GaloisMorphism& m) {
    Verdict v;
    auto r = galois_to_crelation(m);
    v.require(r.ok(), "Galois morphism between distributive bi-dcpos has no c-relation");
    if (!r.ok()) return v;
    const auto g = crelation_to_galois(r.value());
    // Each k-element k is sent to the k-set of points below it, each o-element u to the o-set of points related to it.
    auto hat_k = [](const Polarity& p, const KoSpace& s, Index k) {
        Subset a(s.size());
        for (Index x = 0; x < s.size(); ++x)
            if (p.k_leq(p.k_index(s.base().name(x)), k)) a.set(x);
        return set_name(a, s.base().names());
    };
    auto hat_o = [](const Polarity& p, const KoSpace& s, Index u) {
        Subset a(s.size());
        for (Index x = 0; x < s.size(); ++x)
            if (p.related(p.k_index(s.base().name(x)), u)) a.set(x);
        return set_name(a, s.base().names());
    };
    const auto& s1 = r.value().source();
    const auto& s2 = r.value().target();
    const auto& p1 = m.source();
    const auto& p2 = m.target();
    bool found = true;
    for (Index k = 0; k < p1.k_size() && found; ++k) {
        auto a = k_named(g.source(), hat_k(p1, s1, k));
        auto b = k_named(g.target(), hat_k(p2, s2, m.fwd()[k]));
        found = a && b;
        if (found) v.require(g.fwd()[*a] == *b, "forward component not recovered at " + p1.k_names()[k]);
    }
    for (Index u = 0; u < p2.o_size() && found; ++u) {
        auto a = o_named(g.target(), hat_o(p2, s2, u));
        auto b = o_named(g.source(), hat_o(p1, s1, m.bwd()[u]));
        found = a && b;
        if (found) v.require(g.bwd()[*a] == *b, "backward component not recovered at " + p2.o_names()[u]);
    }
    v.require(found, "hat map leaves the recovered polarity");
    v.require(g.source().k_size() == p1.k_size() && g.source().o_size() == p1.o_size() &&
                  g.target().k_size() == p2.k_size() && g.target().o_size() == p2.o_size(),
              "recovered polarities have the wrong size");
    const auto src = bidcpo_to_kospace(validate_bidcpo(p1).value()).value();
    auto id = galois_to_crelation(GaloisMorphism::identity(p1));
    v.require(id.ok() && id.value() == identity_crelation(src), "identity morphism not sent to an identity");
    return v;
}

Verdict composition_check(const std::pair<CRelation, CRelation>& chain) {
    Verdict v;
    const auto& [r1, r2] = chain;
    const auto g1 = crelation_to_galois(r1);
    const auto g2 = crelation_to_galois(r2);
    v.require(crelation_to_galois(compose(r1, r2)) == compose(g1, g2), "composite of c-relations not preserved");
    auto back = galois_to_crelation(compose(g1, g2));
    auto b1 = galois_to_crelation(g1);
    auto b2 = galois_to_crelation(g2);
    v.require(back.ok() && b1.ok() && b2.ok() && back.value() == compose(b1.value(), b2.value()),
              "composite of Galois morphisms not preserved");
    return v;
}

void build_main_functoriality(Builder& b) {
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    Family<CRelation> crel;
    crel.check = crelation_roundtrip;
    crel.smaller = smaller_crelations;
    crel.describe = describe_json<CRelation>;
    b.random<CRelation>(
        "crelation", kFunctorPairs,
        [n](Rng& rng, std::size_t) { return random_crelation(rng, between(rng, 1, n), between(rng, 1, n)); }, crel);

    Family<GaloisMorphism> gal;
    gal.check = galois_roundtrip;
    gal.describe = describe_json<GaloisMorphism>;
    const auto m = std::min<std::size_t>(n, 3);
    b.random<GaloisMorphism>(
        "galois", kFunctorPairs,
        [m](Rng& rng, std::size_t) { return random_distributive_galois(rng, between(rng, 1, m), between(rng, 1, m)); },
        gal);

    using Chain = std::pair<CRelation, CRelation>;
    Family<Chain> comp;
    comp.check = composition_check;
    comp.describe = [](const Chain& c) { return describe_json(c.first) + " ; " + describe_json(c.second); };
    b.random<Chain>(
        "compose", kCompositions,
        [m](Rng& rng, std::size_t) {
            return random_crelation_chain(rng, between(rng, 1, m), between(rng, 1, m), between(rng, 1, m));
        },
        comp);
}

// degroot-involution --------------------------------------------------------------------------

void build_degroot(Builder& b) {
    const auto n = std::max<std::size_t>(b.bound.first, 1);
    Family<KoSpace> ko;
    ko.check = [](const KoSpace& s) {
        Verdict v;
        v.require(degroot_dual(degroot_dual(s)) == s, "double de Groot dual differs");
        return v;
    };
    ko.smaller = smaller_kospaces;
    ko.describe = describe_json<KoSpace>;
    b.random<KoSpace>(
        "kospace", kRandomInstances, [n](Rng& rng, std::size_t) { return random_kospace(rng, between(rng, 1, n)); },
        ko);

    Family<CRelation> cr;
    cr.check = [](const CRelation& r) {
        Verdict v;
        v.require(crelation_degroot(crelation_degroot(r)) == r, "double de Groot dual of a c-relation differs");
        return v;
    };
    cr.smaller = smaller_crelations;
    cr.describe = describe_json<CRelation>;
    b.random<CRelation>(
        "crelation", kDualityInstances,
        [n](Rng& rng, std::size_t) { return random_crelation(rng, between(rng, 1, n), between(rng, 1, n)); }, cr);

    Family<Dirspace> ds;
    ds.check = [](const Dirspace& d) {
        Verdict v;
        if (!(d.is_locally_compact() && d.is_well_filtered() && d.opens_are_directed_unions())) {
            v.count("dirspace does not qualify");
            return v;
        }
        v.count("qualifying dirspace");
        v.require(d.has_degroot_duality(), "double de Groot dual of a qualifying dirspace differs");
        return v;
    };
    ds.describe = describe_json<Dirspace>;
    b.random<Dirspace>(
        "dirspace", kRandomInstances,
        [n](Rng& rng, std::size_t) { return random_dirspace(rng, between(rng, 1, n)); }, ds);
}

// fca-roundtrip -------------------------------------------------------------------------------

Verdict polarity_roundtrip(const Polarity& p) {
    Verdict v;
    const auto d = to_double_base(p).value();
    v.require(polarity_isomorphic(to_polarity(d), p).has_value(), "polarity not recovered");
    auto again = to_double_base(to_polarity(d));
    v.require(again.ok() && double_base_isomorphic(again.value(), d).has_value(), "double base lattice not recovered");
    return v;
}

std::size_t position_in(const std::vector<Index>& xs, Index x) {
    auto it = std::lower_bound(xs.begin(), xs.end(), x);
    if (it == xs.end() || *it != x) throw Error("element outside the designated subset");
    return static_cast<std::size_t>(it - xs.begin());
}

Verdict morphism_roundtrip(const GaloisMorphism& m) {
    Verdict v;
    const auto e = galois_to_embedded(m);
    const auto g = embedded_to_galois(e);
    const ConceptLattice c1(m.source()), c2(m.target());
    const auto k1 = e.source().k_elements();
    const auto k2 = e.target().k_elements();
    const auto o1 = e.source().o_elements();
    const auto o2 = e.target().o_elements();
    for (Index k = 0; k < m.source().k_size(); ++k)
        v.require(g.fwd()[position_in(k1, c1.iota_k(k))] == position_in(k2, c2.iota_k(m.fwd()[k])),
                  "forward component changes at " + m.source().k_names()[k]);
    for (Index u = 0; u < m.target().o_size(); ++u)
        v.require(g.bwd()[position_in(o2, c2.iota_o(u))] == position_in(o1, c1.iota_o(m.bwd()[u])),
                  "backward component changes at " + m.target().o_names()[u]);

    // And from the embedded side: extend the restriction again and compare through the units.
    const auto e2 = galois_to_embedded(g);
    const auto u1 = double_base_unit(e.source(), ConceptLattice(to_polarity(e.source())));
    const auto u2 = double_base_unit(e.target(), ConceptLattice(to_polarity(e.target())));
    for (Index a = 0; a < u1.size(); ++a)
        v.require(e2.fwd()[u1[a]] == u2[e.fwd()[a]], "extended forward map differs");
    for (Index b = 0; b < u2.size(); ++b)
        v.require(e2.bwd()[u2[b]] == u1[e.bwd()[b]], "extended backward map differs");
    return v;
}

void build_fca(Builder& b) {
    Family<Polarity> pol;
    pol.check = polarity_roundtrip;
    pol.smaller = smaller_polarities;
    pol.describe = describe_json<Polarity>;
    const auto rows = std::max<std::size_t>(b.bound.first, 1);
    const auto cols = std::max<std::size_t>(b.bound.second, 1);
    b.random<Polarity>(
        "polarity", kRandomRoundtrips,
        [rows, cols](Rng& rng, std::size_t) {
            return random_purified_polarity(rng, between(rng, 1, rows), between(rng, 1, cols));
        },
        pol);

    Family<GaloisMorphism> mor;
    mor.check = morphism_roundtrip;
    mor.describe = describe_json<GaloisMorphism>;
    const auto n = std::min<std::size_t>(std::max(rows, cols), 4);
    b.random<GaloisMorphism>("morphism", kMorphismRoundtrips,
                             [n](Rng& rng, std::size_t i) { return random_morphism(rng, n, i); }, mor);
}

// registry ------------------------------------------------------------------------------------

struct Entry {
    SweepInfo info;
    void (*build)(Builder&);
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> table = {
        {{"bifounded", "every finite bi-dcpo is bifounded, and so is its concept lattice", "3x3"}, build_bifounded},
        {{"key-lemma", "CP pairs equal the neswarrow pairs in distributive lattices", "6"}, build_key_lemma},
        {{"raney-char", "Raney iff distributive and bifounded", "6"}, build_raney_char},
        {{"corr-distributivity", "bi-dcpo, embedded and concept-lattice distributivity agree", "3x3"},
         build_corr_distributivity},
        {{"esakia", "c-relations preserve codirected intersections and directed unions", "4"}, build_esakia},
        {{"wilker-1", "Wilker interpolation through unions whenever its preconditions hold", "4"},
         [](Builder& b) { build_wilker(b, 1); }},
        {{"wilker-2", "Wilker interpolation through intersections whenever its preconditions hold", "4"},
         [](Builder& b) { build_wilker(b, 2); }},
        {{"hofmis", "Hofmann-Mislove bijections and the way-below characterisation", "4"}, build_hofmis},
        {{"meets-joins", "finite meets of o-elements iff finite joins of k-elements", "4"}, build_meets_joins},
        {{"bijcorr-roundtrip", "six object roundtrips between ko-spaces, bi-dcpos and embedded bi-dcpos", "3"},
         build_bijcorr},
        {{"main-functoriality", "c-relations and Galois morphisms correspond functorially", "4"},
         build_main_functoriality},
        {{"degroot-involution", "double de Groot dual is the identity", "4"}, build_degroot},
        {{"frame-pipeline", "finite frames are recovered from their points", "6"}, build_frame_pipeline},
        {{"fca-roundtrip", "polarities and Galois morphisms survive the concept-lattice roundtrip", "5x5"}, build_fca},
        {{"morphism-preservation", "Galois morphisms preserve codirected meets and directed joins", "4"},
         build_morphism_preservation},
    };
    return table;
}

}  // namespace

const std::vector<SweepInfo>& sweep_registry() {
    static const std::vector<SweepInfo> infos = [] {
        std::vector<SweepInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return infos;
}

std::optional<SweepInfo> find_sweep(const std::string& id) {
    for (const auto& info : sweep_registry())
        if (info.id == id) return info;
    return std::nullopt;
}

std::vector<InstanceOutcome> run_tasks(const std::vector<SweepTask>& tasks, unsigned jobs) {
    std::vector<InstanceOutcome> results(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                results[i] = tasks[i].run();
            } catch (const std::exception& e) {
                results[i] = InstanceOutcome{tasks[i].name, false, std::string("exception: ") + e.what(), {}};
            }
        }
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size())));
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    pool.clear();
    std::sort(results.begin(), results.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    return results;
}

SweepReport run_sweep(const std::string& id, const SweepOptions& options) {
    const Entry* entry = nullptr;
    for (const auto& e : entries())
        if (e.info.id == id) entry = &e;
    if (!entry) {
        std::string known;
        for (const auto& e : entries()) known += (known.empty() ? "" : ", ") + e.info.id;
        throw Error("unknown sweep '" + id + "'; known sweeps: " + known);
    }
    const std::string bound_text = options.bound.empty() ? entry->info.default_bound : options.bound;
    const bool pair_expected = entry->info.default_bound.find('x') != std::string::npos;
    if (pair_expected != (bound_text.find('x') != std::string::npos))
        throw Error("sweep " + id + " expects a bound of the form " + (pair_expected ? "AxB" : "n") + ", got '" +
                    bound_text + "'");
    Builder builder{id, options.seed, parse_bound(bound_text), {}};
    entry->build(builder);

    SweepReport report;
    report.id = id;
    report.bound = bound_text;
    report.seed = options.seed;
    auto results = run_tasks(builder.tasks, options.jobs);
    std::map<std::string, std::size_t> tallies;
    for (auto& r : results) {
        ++report.total;
        for (const auto& [name, n] : r.tallies) tallies[name] += n;
        if (r.pass) {
            ++report.passed;
        } else {
            report.failures.push_back(std::move(r));
        }
    }
    report.tallies.assign(tallies.begin(), tallies.end());
    if (!report.failures.empty() && options.shrink) {
        const auto& first = report.failures.front().name;
        for (const auto& t : builder.tasks)
            if (t.name == first && t.shrink) report.shrunk = t.shrink();
    }
    return report;
}

std::string render_text(const SweepReport& r) {
    std::ostringstream out;
    out << "sweep " << r.id << " bound " << r.bound << " seed " << r.seed << ": " << r.total << " instances, "
        << r.passed << " passed, " << r.failures.size() << " failed\n";
    for (const auto& [name, n] : r.tallies) out << "  " << name << ": " << n << "\n";
    if (!r.failures.empty()) {
        out << "first counterexample: " << r.failures.front().name << ": " << r.failures.front().detail << "\n";
        if (!r.shrunk.empty()) out << "shrunk: " << r.shrunk << "\n";
    }
    return out.str();
}

std::string render_json(const SweepReport& r) {
    io::Json j;
    j["kind"] = "sweep-report";
    j["id"] = r.id;
    j["bound"] = r.bound;
    j["seed"] = r.seed;
    j["total"] = r.total;
    j["passed"] = r.passed;
    j["failed"] = r.failures.size();
    j["tallies"] = io::Json::object();
    for (const auto& [name, n] : r.tallies) j["tallies"][name] = n;
    j["failures"] = io::Json::array();
    for (const auto& f : r.failures) j["failures"].push_back({{"name", f.name}, {"detail", f.detail}});
    if (!r.shrunk.empty()) j["shrunk"] = r.shrunk;
    return j.dump(2) + "\n";
}

}  // namespace kodual
