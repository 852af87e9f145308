#include "firefight/generators.hpp"

#include <algorithm>
#include <random>

#include "firefight/errors.hpp"

namespace firefight {

namespace {

// Uniform in [0, bound). Plain modulo keeps streams identical across
// standard libraries.
int draw(std::mt19937_64& rng, int bound) { return static_cast<int>(rng() % static_cast<std::uint64_t>(bound)); }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void add_cycle(std::vector<Edge>& edges, int& count, Vertex at, int length) {
  Vertex prev = at;
  for (int i = 1; i < length; ++i) {
    edges.emplace_back(prev, count);
    prev = count++;
  }
  edges.emplace_back(prev, at);
}

}  // namespace

Graph random_cactus(int n, double cycle_fraction, int max_cycle_len, std::uint64_t seed) {
  if (n < 2) throw Error(ErrorCode::BadParams, "random_cactus needs n >= 2");
  if (cycle_fraction < 0.0 || cycle_fraction > 1.0) throw Error(ErrorCode::BadParams, "cycle_fraction outside [0,1]");
  if (cycle_fraction > 0.0 && max_cycle_len < 3) throw Error(ErrorCode::BadParams, "max_cycle_len must be >= 3");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  int count = 1;
  while (count < n) {
    const Vertex at = draw(rng, count);
    const int room = std::min(max_cycle_len, n - count + 1);
    if (room >= 3 && unit(rng) < cycle_fraction) {
      add_cycle(edges, count, at, 3 + draw(rng, room - 2));
    } else {
      edges.emplace_back(at, count++);
    }
  }
  return Graph(n, edges, 0);
}

Graph random_tree(int n, std::uint64_t seed) { return random_cactus(n, 0.0, 3, seed); }

Graph random_one_almost_tree(int n, int max_cycle_len, std::uint64_t seed, bool cycle_through_root) {
  const int min_n = cycle_through_root ? 3 : 4;
  if (n < min_n || max_cycle_len < 3) throw Error(ErrorCode::BadParams, "one-almost tree needs room for a cycle");
  std::mt19937_64 rng(seed);
  const int longest = std::min(max_cycle_len, cycle_through_root ? n : n - 1);
  const int length = 3 + draw(rng, longest - 2);
  const int before = cycle_through_root ? draw(rng, n - length + 1) : 1 + draw(rng, n - length);
  std::vector<Edge> edges;
  int count = 1;
  for (int i = 0; i < before; ++i) {
    const Vertex at = draw(rng, count);
    edges.emplace_back(at, count++);
  }
  const Vertex hub = cycle_through_root ? 0 : 1 + draw(rng, count - 1);
  add_cycle(edges, count, hub, length);
  while (count < n) {
    const Vertex at = draw(rng, count);
    edges.emplace_back(at, count++);
  }
  return Graph(n, edges, 0);
}

std::vector<int> random_sequence(int length, int total_budget, bool even_only, std::uint64_t seed) {
  if (length < 0 || total_budget < 0) throw Error(ErrorCode::BadParams, "length and budget must be nonnegative");
  std::mt19937_64 rng(seed);
  std::vector<int> out;
  int left = total_budget;
  for (int i = 0; i < length; ++i) {
    const int step = even_only ? 2 : 1;
    const int value = step * draw(rng, left / step + 1);
    out.push_back(value);
    left -= value;
  }
  return out;
}

}  // namespace firefight
