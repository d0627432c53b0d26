#pragma once

#include "kodual/core.hpp"

#include <cstdint>
#include <functional>

namespace kodual::detail {

using Mask = std::uint32_t;

/// Visits every nonempty subset (as a bit mask over 0..count-1) that is directed under `leq`
/// (any two members have an upper bound inside the subset), or codirected when `codirected`.
/// Throws GuardrailError above kMaxEnumeratedFamily elements unless overridden.
void for_each_directed_subset(std::size_t count, bool codirected, bool override_guardrail,
                              const std::function<bool(Index, Index)>& leq,
                              const std::function<void(Mask)>& visit);

/// Same, for a family of sets ordered by inclusion; also passes the union (directed)
/// or intersection (codirected) of the chosen members.
void for_each_directed_family(const std::vector<Subset>& family, std::size_t carrier, bool codirected,
                              bool override_guardrail, const std::function<void(Mask, const Subset&)>& visit);

}  // namespace kodual::detail
