#pragma once

#include <limits>
#include <optional>
#include <vector>

#include "lapmult/graph.hpp"

namespace lapmult {

// Connected components as vertex blocks; vertices ascending inside a block,
// blocks ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);

bool is_connected(const Graph& g);

inline constexpr int kInfiniteDiameter = std::numeric_limits<int>::max();

// Largest eccentricity; kInfiniteDiameter when the graph is disconnected.
int diameter(const Graph& g);

// Vertices (ascending) of one induced copy of `pattern` in g, or nothing.
std::optional<std::vector<int>> find_induced(const Graph& g, const Graph& pattern);

bool contains_induced(const Graph& g, const Graph& pattern);

// P_4-free test through the complement-of-components recursion: a graph is in
// the class exactly when every connected induced piece of order >= 2 has a
// disconnected complement.
bool is_cograph(const Graph& g);

}  // namespace lapmult
