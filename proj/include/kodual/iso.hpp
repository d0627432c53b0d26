#pragma once

#include "kodual/core.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace kodual {

/// Vertex-colored structure with a fixed number of binary relations.
/// Isomorphisms must preserve colors and every relation in both directions.
struct RelStructure {
    std::vector<std::uint32_t> color;
    std::vector<std::vector<Subset>> relations;  // relations[r][v] = successors of v

    std::size_t size() const { return color.size(); }
    void add_relation(std::vector<Subset> succ) { relations.push_back(std::move(succ)); }
};

/// First isomorphism a -> b in lexicographic order of (image of vertex 0, vertex 1, ...).
std::optional<std::vector<Index>> find_isomorphism(const RelStructure& a, const RelStructure& b);

}  // namespace kodual
