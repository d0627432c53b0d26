#include "kodual/order.hpp"

#include <algorithm>
#include <numeric>

namespace kodual {

FinPoset FinPoset::from_predicate(const std::vector<std::string>& elements,
                                  const std::function<bool(Index, Index)>& leq,
                                  std::vector<Index>* position) {
    const std::size_t n = elements.size();
    const auto order = sorted_positions(elements);
    std::vector<Index> rank(n);
    for (Index r = 0; r < n; ++r) rank[order[r]] = r;

    FinPoset p;
    p.names_.reserve(n);
    for (Index r = 0; r < n; ++r) p.names_.push_back(elements[order[r]]);
    p.up_.assign(n, Subset(n));
    for (Index i = 0; i < n; ++i) {
        p.up_[rank[i]].set(rank[i]);
        for (Index j = 0; j < n; ++j)
            if (i != j && leq(i, j)) p.up_[rank[i]].set(rank[j]);
    }
    for (Index k = 0; k < n; ++k)
        for (Index i = 0; i < n; ++i)
            if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    p.down_.assign(n, Subset(n));
    for (Index i = 0; i < n; ++i)
        for (Index j : members(p.up_[i])) {
            if (i != j && p.up_[j].test(i))
                throw Error("order is not antisymmetric: " + p.names_[i] + " <= " + p.names_[j] +
                            " <= " + p.names_[i]);
            p.down_[j].set(i);
        }
    if (position) *position = rank;
    return p;
}

FinPoset FinPoset::from_relation(std::vector<std::string> elements, const NamePairs& relation) {
    std::vector<std::pair<Index, Index>> idx;
    auto lookup = [&](const std::string& s) {
        auto it = std::find(elements.begin(), elements.end(), s);
        if (it == elements.end()) throw Error("unknown element '" + s + "'");
        return static_cast<Index>(it - elements.begin());
    };
    for (const auto& [a, b] : relation) idx.emplace_back(lookup(a), lookup(b));
    std::vector<Subset> rel(elements.size(), Subset(elements.size()));
    for (auto [a, b] : idx) rel[a].set(b);
    return from_predicate(elements, [&](Index a, Index b) { return rel[a].test(b); });
}

FinPoset FinPoset::chain(const std::vector<std::string>& xs) {
    return from_predicate(xs, [](Index a, Index b) { return a <= b; });
}

FinPoset FinPoset::antichain(const std::vector<std::string>& xs) {
    return from_predicate(xs, [](Index a, Index b) { return a == b; });
}

std::optional<Index> FinPoset::find(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name,
                               [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    if (it == names_.end() || *it != name) return std::nullopt;
    return static_cast<Index>(it - names_.begin());
}

Index FinPoset::index_of(const std::string& name) const {
    auto i = find(name);
    if (!i) throw Error("unknown element '" + name + "'");
    return *i;
}

Subset FinPoset::up_closure(const Subset& s) const {
    Subset out(size());
    for (Index i : members(s)) out |= up_[i];
    return out;
}

Subset FinPoset::down_closure(const Subset& s) const {
    Subset out(size());
    for (Index i : members(s)) out |= down_[i];
    return out;
}

bool FinPoset::is_upset(const Subset& s) const {
    for (Index i : members(s))
        if (!up_[i].is_subset_of(s)) return false;
    return true;
}

bool FinPoset::is_downset(const Subset& s) const {
    for (Index i : members(s))
        if (!down_[i].is_subset_of(s)) return false;
    return true;
}

std::vector<std::pair<Index, Index>> FinPoset::covers() const {
    std::vector<std::pair<Index, Index>> out;
    for (Index a = 0; a < size(); ++a)
        for (Index b : members(up_[a])) {
            if (a == b) continue;
            Subset between = up_[a] & down_[b];
            if (between.count() == 2) out.emplace_back(a, b);
        }
    return out;
}

NamePairs FinPoset::leq_pairs() const {
    NamePairs out;
    for (Index a = 0; a < size(); ++a)
        for (Index b : members(up_[a]))
            if (a != b) out.emplace_back(names_[a], names_[b]);
    return out;
}

FinPoset FinPoset::dual() const {
    FinPoset d;
    d.names_ = names_;
    d.up_ = down_;
    d.down_ = up_;
    return d;
}

FinPoset FinPoset::restrict(const Subset& keep) const {
    const auto ks = members(keep);
    std::vector<std::string> ns;
    for (Index i : ks) ns.push_back(names_[i]);
    return from_predicate(ns, [&](Index a, Index b) { return leq(ks[a], ks[b]); });
}

namespace {

void collect_upsets(const FinPoset& p, const std::vector<Index>& order, std::size_t t, Subset& cur,
                    std::vector<Subset>& out) {
    if (t == order.size()) {
        out.push_back(cur);
        return;
    }
    const Index x = order[t];
    collect_upsets(p, order, t + 1, cur, out);
    Subset above = p.up(x);
    above.reset(x);
    if (above.is_subset_of(cur)) {
        cur.set(x);
        collect_upsets(p, order, t + 1, cur, out);
        cur.reset(x);
    }
}

}  // namespace

std::vector<Subset> all_upsets(const FinPoset& p, bool override_guardrail) {
    if (p.size() > kMaxEnumeratedElements && !override_guardrail)
        throw GuardrailError("refusing to enumerate upsets of a poset with " + std::to_string(p.size()) +
                             " elements (limit " + std::to_string(kMaxEnumeratedElements) + ")");
    // Maximal elements first: x is decided only after everything strictly above it.
    std::vector<Index> order(p.size());
    std::iota(order.begin(), order.end(), Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Index a, Index b) { return p.up(a).count() < p.up(b).count(); });
    std::vector<Subset> out;
    Subset cur = p.empty();
    collect_upsets(p, order, 0, cur, out);
    sort_unique(out);
    return out;
}

bool is_directed(const FinPoset& p, const Subset& s) {
    if (s.none()) return false;
    const auto ms = members(s);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!(p.up(ms[i]) & p.up(ms[j]) & s).any()) return false;
    return true;
}

bool is_codirected(const FinPoset& p, const Subset& s) {
    if (s.none()) return false;
    const auto ms = members(s);
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!(p.down(ms[i]) & p.down(ms[j]) & s).any()) return false;
    return true;
}

std::vector<Subset> filters(const FinPoset& p) {
    std::vector<Subset> out;
    for (Index x = 0; x < p.size(); ++x) out.push_back(p.up(x));
    sort_unique(out);
    return out;
}

namespace {

// The least element of s, if s has one.
std::optional<Index> least_in(const FinPoset& p, const Subset& s) {
    for (Index m : members(s))
        if (s.is_subset_of(p.up(m))) return m;
    return std::nullopt;
}

std::optional<Index> greatest_in(const FinPoset& p, const Subset& s) {
    for (Index m : members(s))
        if (s.is_subset_of(p.down(m))) return m;
    return std::nullopt;
}

}  // namespace

std::optional<FinLattice> FinLattice::from_poset(FinPoset p) {
    const std::size_t n = p.size();
    if (n == 0) return std::nullopt;
    FinLattice l;
    auto top = greatest_in(p, p.full());
    auto bottom = least_in(p, p.full());
    if (!top || !bottom) return std::nullopt;
    l.top_ = *top;
    l.bottom_ = *bottom;
    l.meet_.assign(n * n, 0);
    l.join_.assign(n * n, 0);
    for (Index a = 0; a < n; ++a)
        for (Index b = a; b < n; ++b) {
            auto j = least_in(p, p.up(a) & p.up(b));
            auto m = greatest_in(p, p.down(a) & p.down(b));
            if (!j || !m) return std::nullopt;
            l.join_[a * n + b] = l.join_[b * n + a] = *j;
            l.meet_[a * n + b] = l.meet_[b * n + a] = *m;
        }
    l.order_ = std::move(p);
    return l;
}

FinLattice FinLattice::make(FinPoset p) {
    auto l = from_poset(std::move(p));
    if (!l) throw Error("poset is not a lattice");
    return *std::move(l);
}

Index FinLattice::meet_of(const Subset& s) const {
    Index acc = top_;
    for (Index i : members(s)) acc = meet(acc, i);
    return acc;
}

Index FinLattice::join_of(const Subset& s) const {
    Index acc = bottom_;
    for (Index i : members(s)) acc = join(acc, i);
    return acc;
}

UpsetLattice upset_lattice(const FinPoset& p, bool override_guardrail) {
    auto sets = all_upsets(p, override_guardrail);
    std::vector<std::string> names;
    for (const auto& s : sets) names.push_back(set_name(s, p.names()));
    std::vector<Index> pos;
    auto order = FinPoset::from_predicate(
        names, [&](Index a, Index b) { return sets[a].is_subset_of(sets[b]); }, &pos);
    std::vector<Subset> placed(sets.size());
    for (Index i = 0; i < sets.size(); ++i) placed[pos[i]] = sets[i];
    return {FinLattice::make(std::move(order)), std::move(placed)};
}

bool is_distributive_lattice(const FinLattice& l) {
    const std::size_t n = l.size();
    for (Index k = 0; k < n; ++k)
        for (Index u = 0; u < n; ++u) {
            if (l.leq(k, u)) continue;
            for (Index c = 0; c < n; ++c)
                if (l.leq(k, l.join(u, c)) && l.leq(l.meet(c, k), u)) return false;
        }
    return true;
}

WeakRel::WeakRel(FinPoset source, FinPoset target, std::vector<Subset> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
    if (images_.size() != source_.size()) throw Error("relation table does not match its source");
    for (Index x = 0; x < source_.size(); ++x) {
        if (images_[x].size() != target_.size()) throw Error("relation table does not match its target");
        if (!target_.is_upset(images_[x]))
            throw Error("not a weakening relation: image of " + source_.name(x) + " is not an upset");
        for (Index lower : members(source_.down(x)))
            if (!images_[x].is_subset_of(images_[lower]))
                throw Error("not a weakening relation: " + source_.name(lower) + " <= " + source_.name(x) +
                            " but the image of " + source_.name(lower) + " is smaller");
    }
}

WeakRel WeakRel::from_pairs(FinPoset source, FinPoset target, const NamePairs& pairs) {
    std::vector<Subset> images(source.size(), target.empty());
    for (const auto& [x, y] : pairs) images[source.index_of(x)].set(target.index_of(y));
    return WeakRel(std::move(source), std::move(target), std::move(images));
}

WeakRel WeakRel::closure_of(FinPoset source, FinPoset target,
                            const std::vector<std::pair<Index, Index>>& pairs) {
    std::vector<Subset> images(source.size(), target.empty());
    for (auto [x, y] : pairs)
        for (Index lower : members(source.down(x))) images[lower] |= target.up(y);
    return WeakRel(std::move(source), std::move(target), std::move(images));
}

WeakRel WeakRel::identity(const FinPoset& p) {
    std::vector<Subset> images;
    for (Index x = 0; x < p.size(); ++x) images.push_back(p.up(x));
    return WeakRel(p, p, std::move(images));
}

NamePairs WeakRel::pairs() const {
    NamePairs out;
    for (Index x = 0; x < source_.size(); ++x)
        for (Index y : members(images_[x])) out.emplace_back(source_.name(x), target_.name(y));
    return out;
}

Subset WeakRel::forward(const Subset& a) const {
    Subset out = target_.empty();
    for (Index x : members(a)) out |= images_[x];
    return out;
}

Subset WeakRel::universal_preimage(const Subset& b) const {
    Subset out = source_.empty();
    for (Index x = 0; x < source_.size(); ++x)
        if (images_[x].is_subset_of(b)) out.set(x);
    return out;
}

WeakRel WeakRel::converse() const {
    std::vector<Subset> images(target_.size(), source_.empty());
    for (Index x = 0; x < source_.size(); ++x)
        for (Index y : members(images_[x])) images[y].set(x);
    return WeakRel(target_.dual(), source_.dual(), std::move(images));
}

WeakRel weakrel_compose(const WeakRel& r, const WeakRel& s) {
    if (!(r.target() == s.source())) throw Error("composition type error: target and source differ");
    std::vector<Subset> images;
    for (Index x = 0; x < r.source().size(); ++x) images.push_back(s.forward(r.image(x)));
    return WeakRel(r.source(), s.target(), std::move(images));
}

RelStructure poset_structure(const FinPoset& p) {
    RelStructure s;
    s.color.assign(p.size(), 0);
    std::vector<Subset> up;
    for (Index i = 0; i < p.size(); ++i) up.push_back(p.up(i));
    s.add_relation(std::move(up));
    return s;
}

std::optional<std::vector<Index>> poset_isomorphic(const FinPoset& p, const FinPoset& q) {
    return find_isomorphism(poset_structure(p), poset_structure(q));
}

std::optional<std::vector<Index>> lattice_isomorphic(const FinLattice& a, const FinLattice& b) {
    return poset_isomorphic(a.poset(), b.poset());
}

}  // namespace kodual
