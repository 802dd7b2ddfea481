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

// Shared small instances for the test suites.

#ifndef PRIMREP_TESTS_FIXTURES_HPP_
#define PRIMREP_TESTS_FIXTURES_HPP_

#include <vector>

#include "primrep/group_action.hpp"
#include "primrep/ramified.hpp"
#include "primrep/rees.hpp"
#include "primrep/semigroup.hpp"

namespace primrep::fixtures {

  using E = RamifiedEntry;

  // Trivial group on {0, 1}.
  inline GroupAction A1() {
    return GroupAction::from_generators(2, {});
  }
  // S_2 on {0, 1}; element 1 is the swap t.
  inline GroupAction A2() {
    return GroupAction::from_generators(2, {Transformation{1, 0}});
  }
  // S_3 on {0, 1, 2}, elements in lexicographic order.
  inline GroupAction A3() {
    return GroupAction::from_generators(
        3, {Transformation{1, 0, 2}, Transformation{1, 2, 0}});
  }
  // Z_4 acting regularly on 4 points.
  inline GroupAction C4() {
    return GroupAction::from_generators(4, {Transformation{1, 2, 3, 0}});
  }

  inline RamifiedMatrix P1() {
    return RamifiedMatrix(A2(), 1, 1, {E::group(0)});
  }
  inline RamifiedMatrix P2() {
    return RamifiedMatrix(A3(), 2, 2,
                          {E::group(0), E::constant(0), E::constant(0),
                           E::group(0)});
  }
  inline RamifiedMatrix P3() {
    return RamifiedMatrix(A2(), 1, 2, {E::group(0), E::group(0)});
  }
  inline RamifiedMatrix P5() {
    return RamifiedMatrix(A2(), 2, 2,
                          {E::group(0), E::group(0), E::group(0),
                           E::group(1)});
  }

  // Full transformation monoid on two points.
  inline FiniteSemigroup T2() {
    std::vector<Transformation> gens{Transformation{1, 0},
                                     Transformation{0, 0}};
    return close(gens);
  }

  inline GroupAction Z2() {
    return GroupAction::from_table({{0, 1}, {1, 0}});
  }
  inline GroupAction Z3() {
    return GroupAction::from_table({{0, 1, 2}, {1, 2, 0}, {2, 0, 1}});
  }
  inline GroupAction Z1() {
    return GroupAction::from_table({{0}});
  }

  inline SandwichMatrix Q1() {
    return SandwichMatrix(Z2(), 1, 1, {0});
  }
  inline SandwichMatrix Q2() {
    return SandwichMatrix(Z2(), 2, 2, {0, std::nullopt, std::nullopt, 0});
  }

}  // namespace primrep::fixtures

#endif  // PRIMREP_TESTS_FIXTURES_HPP_
