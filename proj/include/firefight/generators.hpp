#pragma once

#include <cstdint>
#include <vector>

#include "firefight/graph.hpp"

namespace firefight {

// Grows a cactus from root 0 by hanging either a fresh cycle (with
// probability cycle_fraction) or a pendant edge off a random vertex.
Graph random_cactus(int n, double cycle_fraction, int max_cycle_len, std::uint64_t seed);

Graph random_tree(int n, std::uint64_t seed);

// Exactly one cycle; through the root when cycle_through_root is set.
Graph random_one_almost_tree(int n, int max_cycle_len, std::uint64_t seed, bool cycle_through_root);

std::vector<int> random_sequence(int length, int total_budget, bool even_only, std::uint64_t seed);

}  // namespace firefight
