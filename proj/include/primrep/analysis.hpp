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

#ifndef PRIMREP_ANALYSIS_HPP_
#define PRIMREP_ANALYSIS_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "group_action.hpp"
#include "partition.hpp"
#include "ramified.hpp"
#include "rees.hpp"
#include "representation.hpp"
#include "semigroup.hpp"

namespace primrep {

  //! Default bound on the carrier of ker_construction().
  inline constexpr std::size_t kKerCap = 100000;

  //! The elements of `rep` with a new zero (the last index); undefined
  //! products become 0.
  FiniteSemigroup zero_extension(Representation const& rep);

  //! Properties of a representation whose elements, with a zero adjoined,
  //! form a completely 0-simple semigroup.
  struct RRepClassification {
    bool is_r_rep      = false;
    bool is_c_rep      = false;
    bool range_covered = false;
    bool reduced       = false;
    bool m_faithful    = false;
    //! Group part faithful, one image per R-class, one kernel per L-class.
    bool faithful = false;
    //! The binding is injective.
    bool        faithful_direct = false;
    std::size_t r_classes       = 0;
    std::size_t l_classes       = 0;
    //! Distinct images of the idempotents, sorted.
    std::vector<std::vector<Point>> neighborhoods;
    //! Distinct kernels in order of first occurrence.
    std::vector<Partition> kernels;
  };

  //! Throws PreconditionError unless zero_extension(rep) is completely
  //! 0-simple.
  RRepClassification classify_r_rep(Representation const& rep);

  struct RamifyResult {
    GroupAction       action;
    RamifiedMatrix    matrix;
    Partition         alpha;
    ReesGeneratingSet rgs;
    //! Y -> V / α and element -> triple index of `matrix`.
    RepresentationMap kappa;
    //! j_action(matrix, alpha).
    Representation target;
  };

  //! Rebuilds an m-faithful range-covered R-representation as a ramified
  //! Rees representation.
  //!
  //! X is the image of the base idempotent (by default the first one), G
  //! the restriction of its H-class to X, P(λ, i) the restriction of
  //! g_λ f_i to X and α identifies r_x with s_w when f_r(x) = f_s(w).
  //! The returned κ is checked to be an equivalence.
  RamifyResult ramify(Representation const& rep,
                      std::optional<Index>  base = std::nullopt);

  struct PrimitivityCertificate {
    bool primitive = false;
    //! A compatible partition other than Δ and ∇, when not primitive.
    std::optional<Partition> witness;
    //! The witness came from a search over point pairs.
    bool witness_searched = false;
    //! The first condition that failed, empty when primitive.
    std::string reason;
    //! The minimal functions (Y; J), products undefined outside J.
    std::optional<Representation> minimal_functions;
    //! ramify() of `minimal_functions`, when it got that far.
    std::optional<RamifyResult> structure;
  };

  //! Decides primitivity of a faithful representation through the
  //! group action, matrix and graph of its minimal functions.
  PrimitivityCertificate structural_primitivity(Representation const& rep);

  //! (Y^m; J): an element of the λ-th L-class sends (a_0, ..., a_{m-1}) to
  //! the constant tuple of j(a_λ). Tuples are numbered lexicographically.
  //! Throws CapExceeded when |Y|^m exceeds `cap`.
  Representation ker_construction(Representation const& rep,
                                  std::size_t           cap = kKerCap);

  //! Tuple number of (a_0, ..., a_{m-1}) in ker_construction().
  Point ker_tuple_index(std::size_t carrier, std::vector<Point> const& a);

  //! κ is injective on points, bijective on elements, and
  //! κ(s(y)) = κ(s)(κ(y)) for every point y and element s.
  bool is_action_embedding(Representation const&    A,
                           Representation const&    B,
                           RepresentationMap const& kappa);

  struct DiagonalEmbedding {
    //! ramify() of the restriction to J(Y).
    RamifyResult ramified;
    //! ker_construction(ramified.target).
    Representation    target;
    RepresentationMap kappa;
    bool              verified = false;
  };

  //! Embeds a faithful reduced R-representation into the kernel
  //! construction of its ramified Rees representation: points of J(Y) go
  //! to constant tuples, any other y to its tuple of e_λ(y).
  DiagonalEmbedding embed_diagonal(Representation const& rep,
                                   std::size_t           cap = kKerCap);

}  // namespace primrep

#endif  // PRIMREP_ANALYSIS_HPP_
