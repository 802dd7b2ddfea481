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
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "primrep/error.hpp"
#include "primrep/ramified.hpp"

using namespace primrep;
using namespace primrep::fixtures;
using Kind = CyclicityVerdict::Kind;

namespace {
  constexpr std::uint64_t kSeed = 5150;

  // Regular c-ramified matrices: exhaustive over A1, A2 up to 2 x 2 and over
  // A3 up to 1 x 2 / 2 x 1, plus a seeded sample of 2 x 2 over A3.
  std::vector<RamifiedMatrix> family(std::mt19937_64& rng) {
    std::vector<RamifiedMatrix> out;
    for (auto const& A : {A1(), A2()}) {
      for (std::size_t m = 1; m <= 2; ++m) {
        for (std::size_t n = 1; n <= 2; ++n) {
          for (auto& P : oracles::all_c_ramified(A, m, n, true)) {
            out.push_back(std::move(P));
          }
        }
      }
    }
    for (auto [m, n] : {std::pair{1, 1}, {1, 2}, {2, 1}}) {
      for (auto& P : oracles::all_c_ramified(A3(), m, n, true)) {
        out.push_back(std::move(P));
      }
    }
    for (int k = 0; k < 60; ++k) {
      out.push_back(oracles::random_c_ramified(rng, A3(), 2, 2));
    }
    return out;
  }

  bool proportional_rows(RamifiedMatrix const& P, Index a, Index b) {
    auto const& G = P.action();
    for (Index g = 0; g < G.order(); ++g) {
      bool ok = true;
      for (Index i = 0; i < P.cols() && ok; ++i) {
        ok = compose(G.element(g), P.entry_map(a, i)) == P.entry_map(b, i);
      }
      if (ok) {
        return true;
      }
    }
    return false;
  }
}  // namespace

TEST_CASE("act_triple") {
  CHECK(act_triple(P1(), {0, 0, 0}, {0, 0}) == VectorElement{0, 0});
  for (Point x = 0; x < 3; ++x) {
    CHECK(act_triple(P2(), {0, 0, 1}, {0, x}) == VectorElement{0, 0});
  }
  CHECK(act_triple(P5(), {1, 1, 1}, {1, 0}) == VectorElement{1, 0});
  CHECK(act_triple(P5(), {0, 1, 0}, {1, 0}) == VectorElement{0, 1});
}

TEST_CASE("theta") {
  CHECK(theta(P1()).is_diagonal());
  CHECK(theta(P1()).degree() == 2);
  auto t2 = theta(P2());
  CHECK(t2.num_blocks() == 5);
  CHECK(t2.same_block(vector_index(P2(), {0, 0}), vector_index(P2(), {1, 0})));
  CHECK(theta(P5()).is_diagonal());
  CHECK(theta(P5()).degree() == 4);
}

TEST_CASE("compose_triples") {
  CHECK(compose_triples(P1(), {0, 1, 0}, {0, 0, 0})
        == TripleProduct(MonomialTriple{0, 1, 0}));
  CHECK(compose_triples(P2(), {0, 0, 1}, {0, 0, 0})
        == TripleProduct(ConstantOutcome{0, 0}));
  CHECK(compose_triples(P2(), {1, 0, 0}, {0, 0, 0})
        == TripleProduct(MonomialTriple{1, 0, 0}));
  RamifiedMatrix N(A3(), 1, 1,
                   {RamifiedEntry{RamifiedEntry::Kind::map, 0, 0,
                                  Transformation{0, 0, 1}}});
  CHECK(std::holds_alternative<GeneralOutcome>(
      compose_triples(N, {0, 0, 0}, {0, 0, 0})));
}

TEST_CASE("build_action") {
  auto L1 = ramified_action(P1(), theta(P1()));
  CHECK(L1.rep.carrier() == 2);
  CHECK(L1.triples == 2);
  CHECK(L1.constants == 2);
  CHECK(L1.rep.size() == 4);
  CHECK(brute_isomorphic(transformation_semigroup(L1.rep), T2()));
  auto L2 = ramified_action(P2(), theta(P2()));
  CHECK(L2.rep.carrier() == 5);
  CHECK(L2.triples == 24);
  CHECK(L2.constants == 5);
  CHECK(L2.extra == 0);
  auto L5 = build_action(P5(), true);
  CHECK(L5.carrier() == 4);
  CHECK(L5.size() == 12);
  CHECK(validate_representation(L2.rep).valid);
  CHECK(build_action(P2(), false).carrier() == 6);

  RamifiedMatrix bad(A2(), 1, 2, {E::constant(0), E::constant(1)});
  CHECK_THROWS_AS(build_action(bad, true), PreconditionError);
}

TEST_CASE("graph and reductivity") {
  auto g1 = graph(P1());
  CHECK(g1.edges.empty());
  CHECK(g1.connected);
  auto g2 = graph(P2());
  CHECK(g2.edges == std::vector<std::pair<Index, Index>>{{0, 1}});
  CHECK(g2.connected);
  auto g5 = graph(P5());
  CHECK(g5.edges.empty());
  CHECK_FALSE(g5.connected);

  CHECK_FALSE(reductivity(P3()).left);
  CHECK(reductivity(P3()).right);
  CHECK(reductivity(P2()).left);
  CHECK(reductivity(P2()).right);
  CHECK(reductivity(P5()).left);
  CHECK(reductivity(P5()).right);
}

TEST_CASE("matrices_equivalent") {
  auto w = matrices_equivalent(P2(), P2());
  REQUIRE(w);
  CHECK(is_matrix_equivalence(P2(), P2(), *w));
  RamifiedMatrix swapped(A3(), 2, 2,
                         {E::constant(0), E::group(0), E::group(0),
                          E::constant(0)});
  auto ws = matrices_equivalent(P2(), swapped);
  REQUIRE(ws);
  CHECK(is_matrix_equivalence(P2(), swapped, *ws));
  CHECK_FALSE(matrices_equivalent(P1(), P5()));
  // a relabelled action: the constant moves with the point map
  RamifiedMatrix moved(A3(), 2, 2,
                       {E::group(0), E::constant(2), E::constant(2),
                        E::group(0)});
  CHECK(matrices_equivalent(P2(), moved));
  // a row gauge moves the constant, so its position value is free
  RamifiedMatrix split(A3(), 2, 2,
                       {E::group(0), E::constant(0), E::constant(1),
                        E::group(0)});
  CHECK(matrices_equivalent(P2(), split));
  RamifiedMatrix flat(A2(), 2, 2,
                      {E::group(0), E::group(0), E::group(0), E::group(0)});
  CHECK_FALSE(matrices_equivalent(P5(), flat));
}

TEST_CASE("is_ramification") {
  std::vector<Index> id{0, 1};
  CHECK_FALSE(is_ramification(P5(), Q2(), id));
  RamifiedMatrix P(A2(), 2, 2,
                   {E::group(0), E::constant(0), E::constant(1), E::group(0)});
  CHECK(is_ramification(P, Q2(), id));
  CHECK(is_ramification(P1(), Q1(), id));
  CHECK_THROWS_AS(is_ramification(P3(), Q2(), id), Error);
  CHECK(permutation_skeleton(P) == SandwichMatrix(A2(), 2, 2,
                                                  {0, std::nullopt,
                                                   std::nullopt, 0}));
}

TEST_CASE("faithful_ramified") {
  auto r2 = faithful_ramified(P2(), theta(P2()));
  CHECK(r2.faithful);
  CHECK(r2.neighborhoods.size() == 2);
  CHECK(r2.faithful_reduced);
  auto r3 = faithful_ramified(P3(), theta(P3()));
  CHECK_FALSE(r3.faithful);
  CHECK(r3.neighborhoods.size() == 1);
  CHECK_FALSE(r3.failure.empty());
  auto r5 = faithful_ramified(P5(), Partition::diagonal(4));
  CHECK(r5.faithful);
  CHECK(r5.alpha_is_theta);
  CHECK_THROWS_AS(faithful_ramified(P2(), Partition::universal(6)),
                  PreconditionError);
}

TEST_CASE("transitivity and cyclicity") {
  CHECK(transitivity_check(P1(), theta(P1())));
  RamifiedMatrix trivial(A1(), 1, 1, {E::group(0)});
  CHECK_FALSE(transitivity_check(trivial, theta(trivial)));
  CHECK(transitivity_check(P2(), theta(P2())));

  auto c1 = cyclicity_check(P1(), theta(P1()));
  CHECK(c1.kind == Kind::from_vector);
  CHECK(c1.generator == VectorElement{0, 0});
  // every triple reaches both columns, so P5 is transitive and cyclic
  CHECK(transitivity_check(P5(), theta(P5())));
  CHECK(cyclicity_check(P5(), theta(P5())).kind == Kind::from_vector);
  CHECK(cyclicity_check(P2(), theta(P2())).kind == Kind::from_vector);
  CHECK(cyclicity_check(trivial, theta(trivial)).kind == Kind::not_cyclic);

  RamifiedMatrix N(A3(), 1, 1,
                   {RamifiedEntry{RamifiedEntry::Kind::map, 0, 0,
                                  Transformation{0, 0, 1}}});
  CHECK_THROWS_AS(transitivity_check(N, theta(N)), PreconditionError);
}

TEST_CASE("initial-state cyclicity") {
  RamifiedMatrix P(A1(), 2, 2,
                   {E::group(0), E::constant(1), E::constant(0), E::group(0)});
  std::vector<VectorElement> init{{0, 0}, {1, 0}};
  auto v = cyclicity_check(P, theta(P), init);
  auto R = initial_state_representation(P, theta(P), init);
  CHECK(R.carrier() == theta(P).num_blocks() + 1);
  CHECK(v.kind == Kind::not_cyclic);
  CHECK_FALSE(oracles::generates_from(R, R.carrier() - 1));
  REQUIRE(v.orbit_union_verdict);
  CHECK(*v.orbit_union_verdict);

  std::vector<VectorElement> init2{{0, 0}, {1, 1}};
  auto v2 = cyclicity_check(P, theta(P), init2);
  auto R2 = initial_state_representation(P, theta(P), init2);
  CHECK((v2.kind == Kind::from_initial)
        == oracles::generates_from(R2, R2.carrier() - 1));
  CHECK_THROWS_AS(cyclicity_check(P, theta(P), std::vector<VectorElement>{}),
                  Error);
}

TEST_CASE("enumerate_c_ramifications") {
  CHECK(enumerate_c_ramifications(Q1(), A2()).size() == 1);
  auto e2 = enumerate_c_ramifications(Q2(), A2());
  CHECK(e2.size() == 4);
  auto e3 = enumerate_c_ramifications(Q2(), A3());
  CHECK(e3.size() == 9);
  CRamificationStream s(Q2(), A3());
  CHECK(s.total() == 9);
  std::set<std::string> seen;
  for (auto const& P : e3) {
    CHECK(P.is_c_ramified());
    CHECK(is_ramification(P, Q2(), s.gamma()));
    seen.insert(P.to_string());
  }
  CHECK(seen.size() == 9);
}

TEST_CASE("ramified properties") {
  MESSAGE("seed " << kSeed);
  std::mt19937_64 rng(kSeed);
  auto            fam = family(rng);
  for (auto const& P : fam) {
    auto th = theta(P);
    auto U  = build_action(P, false);
    CHECK(th == max_deflation(U));
    for (Index i = 0; i < P.cols(); ++i) {
      for (Point x = 0; x < P.degree(); ++x) {
        for (Point y = x + 1; y < P.degree(); ++y) {
          CHECK_FALSE(th.same_block(vector_index(P, {i, x}),
                                    vector_index(P, {i, y})));
        }
      }
    }
    for (Index k = 0; k < num_triples(P); ++k) {
      auto M = triple_at(P, k);
      CHECK(triple_index(P, M) == k);
      for (Index v = 0; v < P.num_vectors(); ++v) {
        for (Index w = v + 1; w < P.num_vectors(); ++w) {
          if (th.same_block(v, w)) {
            CHECK(act_triple(P, M, vector_element(P, v))
                  == act_triple(P, M, vector_element(P, w)));
          }
        }
      }
    }

    auto act = ramified_action(P, th);
    CHECK(act.extra == 0);
    CHECK(validate_representation(act.rep).valid);
    auto report = faithful_ramified(P, th);
    CHECK(report.faithful
          == oracles::triples_injective(act.rep, act.triples));

    // kernels of triples with distinct rows
    for (Index a = 0; a < P.rows(); ++a) {
      for (Index b = a + 1; b < P.rows(); ++b) {
        auto ka = kernel_partition(act.rep.map(triple_index(P, {0, 0, a})));
        auto kb = kernel_partition(act.rep.map(triple_index(P, {0, 0, b})));
        CHECK((ka == kb) == proportional_rows(P, a, b));
      }
    }

    // connectivity through neighborhood squares
    std::vector<PointPair> pairs;
    for (auto const& X : report.neighborhoods) {
      for (Point p : X) {
        pairs.emplace_back(X.front(), p);
      }
    }
    CHECK(graph(P).connected
          == generate_equivalence(pairs, th.num_blocks()).is_universal());

    auto J = oracles::restrict_elements(act.rep, act.triples);
    CHECK(transitivity_check(P, th) == oracles::transitive_by_reachability(J));
    auto cyc = cyclicity_check(P, th);
    CHECK((cyc.kind != Kind::not_cyclic)
          == oracles::cyclic_generator(J).has_value());
    if (cyc.generator) {
      CHECK(oracles::generates_from(
          J, th.block_of(vector_index(P, *cyc.generator))));
    }

    if (report.faithful && P.degree() <= 2) {
      auto L  = transformation_semigroup(act.rep);
      auto g  = green(L);
      auto t0 = *L.index_of(act.rep.map(0));
      auto F  = principal_factor(L, g, g.j_classes.block_of(t0));
      CHECK(brute_isomorphic(F, build_rees(permutation_skeleton(P))));
    }
  }
}

TEST_CASE("equivalence witnesses") {
  MESSAGE("seed " << kSeed + 1);
  std::mt19937_64 rng(kSeed + 1);
  for (int k = 0; k < 40; ++k) {
    auto const A = (k % 2) ? A3() : A2();
    auto       P = oracles::random_c_ramified(rng, A, 2, 2);
    // shuffle rows and columns and relabel by a random group element
    std::vector<std::size_t> rs{0, 1}, cs{0, 1};
    std::shuffle(rs.begin(), rs.end(), rng);
    std::shuffle(cs.begin(), cs.end(), rng);
    std::vector<RamifiedEntry> e;
    for (auto r : rs) {
      for (auto c : cs) {
        e.push_back(P.at(r, c));
      }
    }
    RamifiedMatrix P2(A, 2, 2, e);
    auto           w = matrices_equivalent(P, P2);
    REQUIRE(w);
    CHECK(is_matrix_equivalence(P, P2, *w));
    auto back = matrices_equivalent(P2, P);
    REQUIRE(back);
    CHECK(is_matrix_equivalence(P2, P, *back));
  }
}
