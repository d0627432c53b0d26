#include "kodual/iso.hpp"

#include <algorithm>
#include <map>

namespace kodual {

namespace {

using Signature = std::pair<std::uint32_t, std::vector<std::uint64_t>>;

std::vector<std::uint64_t> neighbourhood(const RelStructure& s, const std::vector<std::uint32_t>& color,
                                         const std::vector<std::vector<Subset>>& preds, Index v) {
    std::vector<std::uint64_t> out;
    for (std::size_t r = 0; r < s.relations.size(); ++r) {
        for (Index w : members(s.relations[r][v]))
            out.push_back((std::uint64_t(r) << 33) | (std::uint64_t(0) << 32) | color[w]);
        for (Index w : members(preds[r][v]))
            out.push_back((std::uint64_t(r) << 33) | (std::uint64_t(1) << 32) | color[w]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<Subset>> transpose(const RelStructure& s) {
    std::vector<std::vector<Subset>> preds;
    for (const auto& rel : s.relations) {
        std::vector<Subset> p(s.size(), Subset(s.size()));
        for (Index v = 0; v < s.size(); ++v)
            for (Index w : members(rel[v])) p[w].set(v);
        preds.push_back(std::move(p));
    }
    return preds;
}

std::size_t distinct(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> all(a);
    all.insert(all.end(), b.begin(), b.end());
    std::sort(all.begin(), all.end());
    return static_cast<std::size_t>(std::unique(all.begin(), all.end()) - all.begin());
}

// Joint colour refinement so that colour ids are comparable between the two structures.
void refine(const RelStructure& a, const RelStructure& b, std::vector<std::uint32_t>& ca,
            std::vector<std::uint32_t>& cb) {
    const auto pa = transpose(a);
    const auto pb = transpose(b);
    std::size_t classes = distinct(ca, cb);
    for (std::size_t round = 0; round <= a.size() + b.size(); ++round) {
        std::map<Signature, std::uint32_t> ids;
        std::vector<Signature> sa, sb;
        for (Index v = 0; v < a.size(); ++v) sa.emplace_back(ca[v], neighbourhood(a, ca, pa, v));
        for (Index v = 0; v < b.size(); ++v) sb.emplace_back(cb[v], neighbourhood(b, cb, pb, v));
        for (const auto& s : sa) ids.emplace(s, 0);
        for (const auto& s : sb) ids.emplace(s, 0);
        std::uint32_t next = 0;
        for (auto& [sig, id] : ids) id = next++;
        for (Index v = 0; v < a.size(); ++v) ca[v] = ids[sa[v]];
        for (Index v = 0; v < b.size(); ++v) cb[v] = ids[sb[v]];
        const std::size_t now = distinct(ca, cb);
        if (now == classes) break;
        classes = now;
    }
}

class Search {
public:
    Search(const RelStructure& a, const RelStructure& b, std::vector<std::uint32_t> ca,
           std::vector<std::uint32_t> cb)
        : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)), image_(a.size()), used_(b.size()) {}

    bool run(Index v) {
        if (v == a_.size()) return true;
        for (Index w = 0; w < b_.size(); ++w) {
            if (used_[w] || ca_[v] != cb_[w] || !consistent(v, w)) continue;
            image_[v] = w;
            used_[w] = true;
            if (run(v + 1)) return true;
            used_[w] = false;
        }
        return false;
    }

    const std::vector<Index>& image() const { return image_; }

private:
    bool consistent(Index v, Index w) const {
        for (std::size_t r = 0; r < a_.relations.size(); ++r) {
            const auto& ra = a_.relations[r];
            const auto& rb = b_.relations[r];
            if (ra[v].test(v) != rb[w].test(w)) return false;
            for (Index u = 0; u < v; ++u) {
                const Index x = image_[u];
                if (ra[v].test(u) != rb[w].test(x) || ra[u].test(v) != rb[x].test(w)) return false;
            }
        }
        return true;
    }

    const RelStructure& a_;
    const RelStructure& b_;
    std::vector<std::uint32_t> ca_, cb_;
    std::vector<Index> image_;
    std::vector<bool> used_;
};

}  // namespace

std::optional<std::vector<Index>> find_isomorphism(const RelStructure& a, const RelStructure& b) {
    if (a.size() != b.size() || a.relations.size() != b.relations.size()) return std::nullopt;
    std::vector<std::uint32_t> ca = a.color, cb = b.color;
    refine(a, b, ca, cb);
    std::vector<std::uint32_t> ha(ca), hb(cb);
    std::sort(ha.begin(), ha.end());
    std::sort(hb.begin(), hb.end());
    if (ha != hb) return std::nullopt;
    Search search(a, b, std::move(ca), std::move(cb));
    if (!search.run(0)) return std::nullopt;
    return search.image();
}

}  // namespace kodual
