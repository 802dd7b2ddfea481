/* Copyright 2026 The primrep Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "primrep/error.hpp"
#include "primrep/partition.hpp"
#include "primrep/transformation.hpp"

using namespace primrep;

namespace {
  constexpr std::uint64_t kSeed = 20261014;
}

TEST_CASE("compose") {
  Transformation id{0, 1}, t{1, 0}, c0{0, 0};
  CHECK(compose(id, t) == t);
  CHECK(compose(c0, t) == c0);
  CHECK(compose(t, t) == id);
  CHECK(compose(Transformation{1, 1, 0}, Transformation{2, 0, 0})
        == Transformation{0, 1, 1});
  CHECK_THROWS_AS(compose(id, Transformation{0, 1, 2}), Error);
  CHECK_THROWS_AS(Transformation({0, 3}), Error);
}

TEST_CASE("transformation predicates") {
  Transformation f{0, 0, 2};
  CHECK_FALSE(f.is_permutation());
  CHECK_FALSE(f.is_constant());
  CHECK(f.is_idempotent());
  CHECK(f.rank() == 2);
  CHECK(f.image_set() == std::vector<Point>{0, 2});
  CHECK(Transformation{1, 2, 0}.inverse() == Transformation{2, 0, 1});
  CHECK_THROWS_AS(f.inverse(), Error);
  CHECK(Transformation{0, 0, 2}.restrict_to(std::vector<Point>{0, 2})
        == Transformation{0, 1});
}

TEST_CASE("kernel_partition") {
  CHECK(kernel_partition(Transformation{2, 0, 1}).is_diagonal());
  CHECK(kernel_partition(Transformation{1, 1, 1}).is_universal());
  auto k = kernel_partition(Transformation{0, 0, 2});
  CHECK(k.blocks() == std::vector<std::vector<Point>>{{0, 1}, {2}});
}

TEST_CASE("generate_equivalence") {
  CHECK(generate_equivalence({}, 4) == Partition::diagonal(4));
  std::vector<PointPair> p1{{0, 1}, {1, 2}};
  CHECK(generate_equivalence(p1, 3).is_universal());
  std::vector<PointPair> p2{{0, 1}, {2, 3}};
  CHECK(generate_equivalence(p2, 4).blocks()
        == std::vector<std::vector<Point>>{{0, 1}, {2, 3}});
  std::vector<PointPair> bad{{0, 4}};
  CHECK_THROWS_AS(generate_equivalence(bad, 4), Error);
}

TEST_CASE("partition lattice operations") {
  auto a = Partition::from_labels(std::vector<int>{0, 0, 1, 1});
  auto b = Partition::from_labels(std::vector<int>{0, 1, 1, 2});
  CHECK(a.meet(b).is_diagonal());
  CHECK(a.join(b).is_universal());
  CHECK(a.meet(b).refines(a));
  CHECK(a.refines(a.join(b)));
  CHECK_FALSE(a.refines(b));
  std::vector<Transformation> swap{Transformation{1, 0, 3, 2}};
  CHECK(a.is_compatible(swap));
  CHECK_FALSE(b.is_compatible(swap));
}

TEST_CASE("foundations properties (seeded)") {
  std::mt19937_64 rng(kSeed);
  MESSAGE("seed " << kSeed);
  for (int round = 0; round < 300; ++round) {
    std::size_t n = 1 + rng() % 6;
    auto f = oracles::random_transformation(rng, n);
    auto g = oracles::random_transformation(rng, n);
    auto h = oracles::random_transformation(rng, n);
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
    CHECK(kernel_partition(g).refines(kernel_partition(compose(f, g))));

    std::vector<Index> labels(n);
    for (auto& l : labels) {
      l = rng() % 3;
    }
    auto p = Partition::from_labels(labels);
    CHECK(generate_equivalence(p.generating_pairs(), n) == p);
    std::vector<PointPair> all;
    for (Point a = 0; a < n; ++a) {
      for (Point b = 0; b < n; ++b) {
        if (p.same_block(a, b)) {
          all.emplace_back(a, b);
        }
      }
    }
    CHECK(generate_equivalence(all, n) == p);

    std::vector<Transformation> maps{f, g};
    std::vector<PointPair>      seed{{static_cast<Point>(rng() % n),
                                       static_cast<Point>(rng() % n)}};
    auto c = compatible_closure(maps, n, seed);
    CHECK(c == oracles::naive_congruence(maps, n, seed));
    CHECK(c.is_compatible(maps));
  }
}
