#include "kodual/generate.hpp"

#include <algorithm>

namespace kodual {

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Rng instance_rng(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    return Rng(mix_seed(seed ^ mix_seed(stream ^ mix_seed(index))));
}

std::size_t uniform_below(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

bool coin(Rng& rng, double p) { return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p; }

std::vector<std::string> element_names(std::size_t n, const std::string& prefix) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

namespace {

std::vector<std::string> letters(std::size_t n) {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(std::string(1, static_cast<char>('a' + i)));
    return out;
}

std::vector<Index> linear_extension(const FinPoset& p) {
    std::vector<Index> order(p.size());
    for (Index i = 0; i < p.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return p.down(a).count() < p.down(b).count(); });
    return order;
}

}  // namespace

std::vector<FinPoset> posets_up_to(std::size_t n) {
    if (n > 6) throw GuardrailError("poset catalog is limited to 6 elements");
    std::vector<FinPoset> out;
    for (std::size_t m = 0; m <= n; ++m) {
        const auto names = letters(m);
        std::vector<std::pair<Index, Index>> slots;
        for (Index i = 0; i < m; ++i)
            for (Index j = i + 1; j < m; ++j) slots.emplace_back(i, j);
        const std::size_t first = out.size();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << slots.size()); ++mask) {
            auto leq = [&](Index a, Index b) {
                if (a == b) return true;
                if (a > b) return false;
                auto it = std::find(slots.begin(), slots.end(), std::pair<Index, Index>{a, b});
                return (mask >> (it - slots.begin()) & 1) != 0;
            };
            // keep only transitively closed masks so each labelled order is visited once
            bool closed = true;
            for (Index a = 0; a < m && closed; ++a)
                for (Index b = a + 1; b < m && closed; ++b)
                    for (Index c = b + 1; c < m && closed; ++c)
                        if (leq(a, b) && leq(b, c) && !leq(a, c)) closed = false;
            if (!closed) continue;
            FinPoset p = FinPoset::from_predicate(names, leq);
            bool seen = false;
            for (std::size_t i = first; i < out.size() && !seen; ++i) seen = poset_isomorphic(out[i], p).has_value();
            if (!seen) out.push_back(std::move(p));
        }
    }
    return out;
}

std::vector<FinLattice> lattices_up_to(std::size_t n) {
    std::vector<FinLattice> out;
    if (n >= 1) out.push_back(FinLattice::make(FinPoset::chain({"0"})));
    if (n < 2) return out;
    // A lattice with at least two elements is a bounded poset: bottom, a middle poset, top.
    for (const auto& middle : posets_up_to(n - 2)) {
        std::vector<std::string> names = {"0", "1"};
        for (const auto& x : middle.names()) names.push_back(x);
        auto leq = [&](Index a, Index b) {
            if (a == b || a == 0 || b == 1) return true;
            if (a == 1 || b == 0) return false;
            return middle.leq(a - 2, b - 2);
        };
        if (auto l = FinLattice::from_poset(FinPoset::from_predicate(names, leq))) out.push_back(std::move(*l));
    }
    std::stable_sort(out.begin(), out.end(), [](const FinLattice& a, const FinLattice& b) { return a.size() < b.size(); });
    return out;
}

std::vector<Polarity> purified_polarities_up_to(std::size_t max_k, std::size_t max_o) {
    if (max_k * max_o > 16) throw GuardrailError("polarity catalog is limited to 16 relation cells");
    std::vector<Polarity> out;
    for (std::size_t nk = 0; nk <= max_k; ++nk)
        for (std::size_t no = 0; no <= max_o; ++no) {
            const auto kn = element_names(nk, "k"), on = element_names(no, "u");
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << (nk * no)); ++mask) {
                Polarity p = Polarity::from_predicate(kn, on, [&](Index k, Index u) { return (mask >> (k * no + u) & 1) != 0; });
                if (is_purified(p)) out.push_back(std::move(p));
            }
        }
    return out;
}

std::vector<KoSpace> admissible_kospaces(const FinPoset& p) {
    const auto ups = all_upsets(p);
    std::vector<Subset> kreq, oreq, kfree, ofree;
    for (Index x = 0; x < p.size(); ++x) {
        kreq.push_back(p.up(x));
        oreq.push_back(p.full() - p.down(x));
    }
    for (const auto& u : ups) {
        if (std::find(kreq.begin(), kreq.end(), u) == kreq.end()) kfree.push_back(u);
        if (std::find(oreq.begin(), oreq.end(), u) == oreq.end()) ofree.push_back(u);
    }
    if (kfree.size() > 12 || ofree.size() > 12) throw GuardrailError("too many optional upsets to enumerate");
    std::vector<KoSpace> out;
    for (std::uint32_t km = 0; km < (std::uint32_t{1} << kfree.size()); ++km)
        for (std::uint32_t om = 0; om < (std::uint32_t{1} << ofree.size()); ++om) {
            auto k = kreq;
            auto o = oreq;
            for (Index i = 0; i < kfree.size(); ++i)
                if (km >> i & 1) k.push_back(kfree[i]);
            for (Index i = 0; i < ofree.size(); ++i)
                if (om >> i & 1) o.push_back(ofree[i]);
            out.push_back(validate_kospace(p, std::move(k), std::move(o)).value());
        }
    return out;
}

FinPoset random_poset(Rng& rng, std::size_t n, double edge) {
    NamePairs pairs;
    const auto names = element_names(n);
    for (Index i = 0; i < n; ++i)
        for (Index j = i + 1; j < n; ++j)
            if (coin(rng, edge)) pairs.emplace_back(names[i], names[j]);
    return FinPoset::from_relation(names, pairs);
}

KoSpace random_kospace(Rng& rng, const FinPoset& p, double extra) {
    const auto ups = all_upsets(p);
    std::vector<Subset> k, o;
    for (Index x = 0; x < p.size(); ++x) {
        k.push_back(p.up(x));
        o.push_back(p.full() - p.down(x));
    }
    for (const auto& u : ups)
        if (coin(rng, extra)) k.push_back(u);
    for (const auto& u : ups)
        if (coin(rng, extra)) o.push_back(u);
    return validate_kospace(p, std::move(k), std::move(o)).value();
}

KoSpace random_kospace(Rng& rng, std::size_t n) {
    const FinPoset p = random_poset(rng, n);
    return random_kospace(rng, p);
}

KoSpace random_bicontinuous_kospace(Rng& rng, std::size_t n) {
    const FinPoset p = random_poset(rng, n);
    for (int attempt = 0; attempt < 64; ++attempt) {
        KoSpace s = random_kospace(rng, p);
        if (check_bicontinuous(s).bicontinuous) return s;
    }
    std::vector<Subset> f;
    for (Index x = 0; x < p.size(); ++x) {
        f.push_back(p.up(x));
        f.push_back(p.full() - p.down(x));
    }
    for (const auto& u : all_upsets(p))
        if (coin(rng, 0.5)) f.push_back(u);
    return validate_kospace(p, f, f).value();
}

Polarity random_purified_polarity(Rng& rng, std::size_t nk, std::size_t no, double density) {
    std::vector<bool> cells(nk * no);
    for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = coin(rng, density);
    return purify(Polarity::from_predicate(element_names(nk, "k"), element_names(no, "u"),
                                           [&](Index k, Index u) { return cells[k * no + u]; }));
}

Polarity random_purified_polarity_exact(Rng& rng, std::size_t nk, std::size_t no, double density) {
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<bool> cells(nk * no);
        for (std::size_t i = 0; i < cells.size(); ++i) cells[i] = coin(rng, density);
        auto p = Polarity::from_predicate(element_names(nk, "k"), element_names(no, "u"),
                                          [&](Index k, Index u) { return cells[k * no + u]; });
        if (is_purified(p)) return p;
    }
    return random_purified_polarity(rng, nk, no, density);
}

WeakRel random_weakrel(Rng& rng, const FinPoset& source, const FinPoset& target, std::size_t pairs) {
    std::vector<std::pair<Index, Index>> chosen;
    if (source.size() > 0 && target.size() > 0)
        for (std::size_t i = 0; i < pairs; ++i)
            chosen.emplace_back(uniform_below(rng, source.size()), uniform_below(rng, target.size()));
    return WeakRel::closure_of(source, target, chosen);
}

namespace {

WeakRel random_weakrel_between(Rng& rng, const FinPoset& x, const FinPoset& y) {
    return random_weakrel(rng, x, y, uniform_below(rng, x.size() * y.size() + 1));
}

std::vector<Subset> with_images(std::vector<Subset> fam, const WeakRel& r, const std::vector<Subset>& from) {
    for (const auto& k : from) fam.push_back(r.forward(k));
    return fam;
}

std::vector<Subset> with_preimages(std::vector<Subset> fam, const WeakRel& r, const std::vector<Subset>& from) {
    for (const auto& u : from) fam.push_back(r.universal_preimage(u));
    return fam;
}

}  // namespace

CRelation random_crelation(Rng& rng, std::size_t n_source, std::size_t n_target) {
    const FinPoset x = random_poset(rng, n_source);
    const FinPoset y = random_poset(rng, n_target);
    const WeakRel r = random_weakrel_between(rng, x, y);
    const KoSpace s0 = random_kospace(rng, x);
    const KoSpace t0 = random_kospace(rng, y);
    auto t = validate_kospace(y, with_images(t0.kfam().members(), r, s0.kfam().members()), t0.ofam().members()).value();
    auto s = validate_kospace(x, s0.kfam().members(), with_preimages(s0.ofam().members(), r, t.ofam().members())).value();
    return validate_crelation(r, std::move(s), std::move(t)).value();
}

std::pair<CRelation, CRelation> random_crelation_chain(Rng& rng, std::size_t n1, std::size_t n2, std::size_t n3) {
    const FinPoset x1 = random_poset(rng, n1), x2 = random_poset(rng, n2), x3 = random_poset(rng, n3);
    const WeakRel r1 = random_weakrel_between(rng, x1, x2);
    const WeakRel r2 = random_weakrel_between(rng, x2, x3);
    const KoSpace s1 = random_kospace(rng, x1), s2 = random_kospace(rng, x2), s3 = random_kospace(rng, x3);
    // k-sets travel forward along the chain, o-sets backward
    auto k2 = with_images(s2.kfam().members(), r1, s1.kfam().members());
    auto k3 = with_images(s3.kfam().members(), r2, k2);
    auto o2 = with_preimages(s2.ofam().members(), r2, s3.ofam().members());
    auto o1 = with_preimages(s1.ofam().members(), r1, o2);
    auto t1 = validate_kospace(x1, s1.kfam().members(), o1).value();
    auto t2 = validate_kospace(x2, k2, o2).value();
    auto t3 = validate_kospace(x3, k3, s3.ofam().members()).value();
    return {validate_crelation(r1, t1, t2).value(), validate_crelation(r2, t2, t3).value()};
}

std::optional<GaloisMorphism> random_galois(Rng& rng, const Polarity& source, const Polarity& target,
                                            std::size_t tries) {
    for (std::size_t t = 0; t < tries; ++t) {
        if (t % 2 == 0) {
            if (source.o_size() == 0 && target.o_size() > 0) continue;
            std::vector<Index> bwd(target.o_size());
            for (auto& v : bwd) v = uniform_below(rng, source.o_size());
            if (auto fwd = galois_fwd_from_bwd(source, target, bwd))
                return GaloisMorphism::make(source, target, std::move(*fwd), std::move(bwd)).value();
        } else {
            if (target.k_size() == 0 && source.k_size() > 0) continue;
            std::vector<Index> fwd(source.k_size());
            for (auto& v : fwd) v = uniform_below(rng, target.k_size());
            if (auto bwd = galois_bwd_from_fwd(source, target, fwd))
                return GaloisMorphism::make(source, target, std::move(fwd), std::move(*bwd)).value();
        }
    }
    return std::nullopt;
}

GaloisMorphism random_distributive_galois(Rng& rng, std::size_t n_source, std::size_t n_target) {
    const BiDcpo a = kospace_to_bidcpo(random_kospace(rng, n_source));
    const BiDcpo b = kospace_to_bidcpo(random_kospace(rng, n_target));
    if (auto m = random_galois(rng, a.pol(), b.pol(), 200)) return *m;
    return crelation_to_galois(random_crelation(rng, n_source, n_target));
}

Dirspace random_dirspace(Rng& rng, std::size_t n, double density) {
    if (n > 10) throw GuardrailError("random dirspaces are limited to 10 points");
    std::vector<Subset> opens;
    for (unsigned long bits = 1; bits < (1UL << n); ++bits)
        if (coin(rng, density)) opens.emplace_back(n, bits);
    return Dirspace::make(element_names(n), std::move(opens)).value();
}

std::vector<Index> random_monotone_map(Rng& rng, const FinPoset& d2, const FinPoset& d1) {
    if (d2.size() == 0) return {};
    if (d1.size() == 0) throw PreconditionError("no map into an empty poset");
    const auto order = linear_extension(d2);
    for (int attempt = 0; attempt < 20; ++attempt) {
        std::vector<Index> f(d2.size());
        bool stuck = false;
        for (Index x : order) {
            Subset allowed = d1.full();
            for (Index y : members(d2.down(x)))
                if (y != x) allowed &= d1.up(f[y]);
            const auto options = members(allowed);
            if (options.empty()) {
                stuck = true;
                break;
            }
            f[x] = options[uniform_below(rng, options.size())];
        }
        if (!stuck) return f;
    }
    return std::vector<Index>(d2.size(), uniform_below(rng, d1.size()));
}

}  // namespace kodual
