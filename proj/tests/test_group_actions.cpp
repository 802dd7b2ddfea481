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

#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "primrep/error.hpp"
#include "primrep/group_action.hpp"

using namespace primrep;
using fixtures::A1;
using fixtures::A2;
using fixtures::A3;

namespace {
  constexpr std::uint64_t kSeed = 4242;

  GroupAction relabel(GroupAction const& A, std::vector<Point> const& pi) {
    std::vector<Point> inv(pi.size());
    for (Point x = 0; x < pi.size(); ++x) {
      inv[pi[x]] = x;
    }
    std::vector<Transformation> gens;
    for (Index g : A.generators()) {
      std::vector<Point> im(pi.size());
      for (Point y = 0; y < pi.size(); ++y) {
        im[y] = pi[A.element(g)(inv[y])];
      }
      gens.emplace_back(std::move(im));
    }
    return GroupAction::from_generators(A.degree(), gens);
  }
}  // namespace

TEST_CASE("group construction") {
  CHECK(A3().order() == 6);
  CHECK(A3().identity() == 0);
  CHECK(A1().order() == 1);
  auto Z = GroupAction::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  CHECK(Z.order() == 3);
  CHECK(Z.element_order(1) == 3);
  CHECK_THROWS_AS(GroupAction::from_table({{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(GroupAction::from_generators(2, {Transformation{0, 0}}),
                  Error);
  for (Index a = 0; a < 6; ++a) {
    CHECK(A3().product(a, A3().inverse(a)) == A3().identity());
  }
}

TEST_CASE("transitivity") {
  CHECK(is_transitive(A3()));
  CHECK_FALSE(is_transitive(A1()));
  CHECK(is_transitive(A2()));
  std::vector<Point> s0{0};
  CHECK(transitivity_class(A3(), s0) == std::vector<Point>{0, 1, 2});
  CHECK(transitivity_class(A1(), s0) == std::vector<Point>{0});
  auto               sw = GroupAction::from_generators(3, {Transformation{1, 0, 2}});
  std::vector<Point> s2{2};
  CHECK(transitivity_class(sw, s2) == std::vector<Point>{2});
  std::vector<Point> bad{5};
  CHECK_THROWS_AS(transitivity_class(sw, bad), Error);
}

TEST_CASE("primitivity of groups") {
  CHECK(is_primitive_group(A3()).primitive);
  auto r = is_primitive_group(fixtures::C4());
  CHECK_FALSE(r.primitive);
  REQUIRE(r.witness);
  CHECK(r.witness->blocks()
        == std::vector<std::vector<Point>>{{0, 2}, {1, 3}});
  CHECK(r.witness->is_compatible(fixtures::C4().elements()));
  CHECK(is_primitive_group(A1()).primitive);
  CHECK(is_primitive_group(A2()).primitive);
  auto sw = GroupAction::from_generators(3, {Transformation{1, 0, 2}});
  CHECK_FALSE(is_primitive_group(sw).primitive);
}

TEST_CASE("action equivalence") {
  auto same = action_equivalence(A3(), A3());
  REQUIRE(same);
  CHECK(is_action_equivalence(A3(), A3(), *same));
  CHECK_FALSE(action_equivalence(A2(), A1()));
  auto B = relabel(A2(), {1, 0});
  auto w = action_equivalence(A2(), B);
  REQUIRE(w);
  CHECK(is_action_equivalence(A2(), B, *w));
  CHECK_THROWS_AS(action_equivalence(A3(), A3(), 3), CapExceeded);
  // regular and natural actions of S_3 are not equivalent
  auto reg = GroupAction::from_table(
      {{0, 1, 2, 3, 4, 5}, {1, 0, 3, 2, 5, 4}, {2, 4, 0, 5, 1, 3},
       {3, 5, 1, 4, 0, 2}, {4, 2, 5, 0, 3, 1}, {5, 3, 4, 1, 2, 0}});
  CHECK(reg.order() == 6);
  CHECK_FALSE(action_equivalence(A3(), reg));
}

TEST_CASE("group isomorphisms and embeddings") {
  std::size_t count = 0;
  for_each_group_isomorphism(A3(), A3(), [&](std::vector<Index> const&) {
    ++count;
    return true;
  });
  CHECK(count == 6);
  count = 0;
  for_each_group_embedding(fixtures::Z2(), A3(),
                           [&](std::vector<Index> const&) {
                             ++count;
                             return true;
                           });
  CHECK(count == 3);
}

TEST_CASE("group action properties (seeded)") {
  std::mt19937_64 rng(kSeed);
  MESSAGE("seed " << kSeed);
  for (int round = 0; round < 60; ++round) {
    std::size_t                 n = 2 + rng() % 4;
    std::vector<Transformation> gens;
    for (std::size_t k = 0, ng = rng() % 3; k < ng; ++k) {
      std::vector<Point> p(n);
      std::iota(p.begin(), p.end(), Point(0));
      std::shuffle(p.begin(), p.end(), rng);
      gens.emplace_back(std::move(p));
    }
    auto A  = GroupAction::from_generators(n, gens);
    auto pr = is_primitive_group(A);
    CHECK(pr.primitive
          == oracles::primitive_by_partitions(
              {A.elements().begin(), A.elements().end()}, n));
    if (pr.primitive && n >= 3) {
      CHECK(is_transitive(A));
    }
    if (pr.witness) {
      CHECK(pr.witness->is_compatible(A.elements()));
      CHECK_FALSE(pr.witness->is_diagonal());
      CHECK_FALSE(pr.witness->is_universal());
    }
    std::vector<Point> pi(n);
    std::iota(pi.begin(), pi.end(), Point(0));
    std::shuffle(pi.begin(), pi.end(), rng);
    auto B = relabel(A, pi);
    auto w = action_equivalence(A, B);
    REQUIRE(w);
    CHECK(is_action_equivalence(A, B, *w));
    CHECK(is_primitive_group(B).primitive == pr.primitive);
  }
}
