#include <numeric>

#include "doctest.h"
#include "firefight/cactus.hpp"
#include "firefight/errors.hpp"
#include "firefight/generators.hpp"

using namespace firefight;

TEST_CASE("random cactus") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 2 + static_cast<int>(seed % 25);
    const Graph g = random_cactus(n, 0.5, 7, seed);
    CHECK(g.num_vertices() == n);
    CHECK_NOTHROW(validate_and_decompose(g));
  }
  CHECK(validate_and_decompose(random_cactus(20, 0.0, 5, 3)).class_tag == GraphClass::Tree);
  const Graph tri = random_cactus(3, 1.0, 3, 9);
  CHECK(tri.num_edges() == 3);
  CHECK(validate_and_decompose(tri).cycles.size() == 1);
  CHECK(random_cactus(15, 0.4, 6, 42).edges() == random_cactus(15, 0.4, 6, 42).edges());
  CHECK_THROWS_AS(random_cactus(1, 0.5, 5, 1), Error);
  CHECK_THROWS_AS(random_cactus(5, 1.5, 5, 1), Error);
  CHECK_THROWS_AS(random_cactus(5, 0.5, 2, 1), Error);
}

TEST_CASE("random trees and 1-almost trees") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    CHECK(validate_and_decompose(random_tree(10, seed)).class_tag == GraphClass::Tree);
    const Graph a = random_one_almost_tree(12, 6, seed, seed % 2 == 0);
    const auto d = validate_and_decompose(a);
    CHECK(d.class_tag == GraphClass::OneAlmostTree);
    CHECK(d.is_root_cycle(0) == (seed % 2 == 0));
    CHECK(d.cycles[0].size() <= 6);
  }
  CHECK_THROWS_AS(random_one_almost_tree(3, 5, 1, false), Error);
}

TEST_CASE("random sequences") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto even = random_sequence(5, 6, true, seed);
    CHECK(even.size() == 5);
    CHECK(std::accumulate(even.begin(), even.end(), 0) <= 6);
    for (int f : even) CHECK(f % 2 == 0);
  }
  for (int f : random_sequence(4, 0, false, 5)) CHECK(f == 0);
  CHECK(random_sequence(6, 9, false, 77) == random_sequence(6, 9, false, 77));
  CHECK_THROWS_AS(random_sequence(-1, 3, false, 1), Error);
}
