#include "kodual/detail/subfamily.hpp"

#include <string>
#include <vector>

namespace kodual::detail {

void for_each_directed_subset(std::size_t count, bool codirected, bool override_guardrail,
                              const std::function<bool(Index, Index)>& leq,
                              const std::function<void(Mask)>& visit) {
    if (count > kMaxEnumeratedFamily && !override_guardrail)
        throw GuardrailError("refusing to enumerate subfamilies of " + std::to_string(count) + " members (limit " +
                             std::to_string(kMaxEnumeratedFamily) + ")");
    if (count >= 32) throw GuardrailError("subfamily enumeration is limited to 31 members");
    std::vector<Mask> bound(count, 0);  // members above (below) member i
    for (Index i = 0; i < count; ++i)
        for (Index j = 0; j < count; ++j)
            if (codirected ? leq(j, i) : leq(i, j)) bound[i] |= Mask{1} << j;
    for (Mask mask = 1; mask < (Mask{1} << count); ++mask) {
        bool ok = true;
        for (Index i = 0; i < count && ok; ++i) {
            if (!(mask >> i & 1)) continue;
            for (Index j = i + 1; j < count && ok; ++j)
                if ((mask >> j & 1) && !(bound[i] & bound[j] & mask)) ok = false;
        }
        if (ok) visit(mask);
    }
}

void for_each_directed_family(const std::vector<Subset>& family, std::size_t carrier, bool codirected,
                              bool override_guardrail, const std::function<void(Mask, const Subset&)>& visit) {
    for_each_directed_subset(
        family.size(), codirected, override_guardrail,
        [&](Index a, Index b) { return family[a].is_subset_of(family[b]); },
        [&](Mask mask) {
            Subset combined = codirected ? full_subset(carrier) : Subset(carrier);
            for (Index i = 0; i < family.size(); ++i)
                if (mask >> i & 1) {
                    if (codirected)
                        combined &= family[i];
                    else
                        combined |= family[i];
                }
            visit(mask, combined);
        });
}

}  // namespace kodual::detail
