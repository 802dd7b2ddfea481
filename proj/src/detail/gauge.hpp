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

#ifndef PRIMREP_DETAIL_GAUGE_HPP_
#define PRIMREP_DETAIL_GAUGE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "primrep/group_action.hpp"
#include "primrep/transformation.hpp"

namespace primrep::detail {

  enum class CellKind { zero, perm, constant, map };

  struct Cell {
    CellKind       kind  = CellKind::zero;
    Index          perm  = 0;
    Point          point = 0;
    Transformation map;
  };

  struct GaugeSolution {
    std::vector<Index> a;
    std::vector<Index> b;
  };

  // Solves T(λ, i) = a_λ S(λ, i) b_i for a, b over G, both grids m x n
  // row-major with perm cells holding elements of G.
  std::optional<GaugeSolution> solve_gauge(GroupAction const&       G,
                                           std::size_t              m,
                                           std::size_t              n,
                                           std::vector<Cell> const& S,
                                           std::vector<Cell> const& T);

  // S(σλ, τi) at position (λ, i).
  std::vector<Cell> permute_cells(std::vector<Cell> const&  S,
                                  std::size_t               n,
                                  std::vector<Index> const& sigma,
                                  std::vector<Index> const& tau);

}  // namespace primrep::detail

#endif  // PRIMREP_DETAIL_GAUGE_HPP_
