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

#ifndef PRIMREP_REES_HPP_
#define PRIMREP_REES_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <vector>

#include "group_action.hpp"
#include "semigroup.hpp"

namespace primrep {

  //! An m x n matrix over G^0; rows are indexed by Λ, columns by I.
  //!
  //! The group is an abstract group stored as a permutation group; an
  //! entry is an element index of it, or nothing for 0.
  struct SandwichMatrix {
    GroupAction                       group;
    std::size_t                       rows = 0;
    std::size_t                       cols = 0;
    std::vector<std::optional<Index>> entries;

    SandwichMatrix() = default;
    SandwichMatrix(GroupAction                       g,
                   std::size_t                       m,
                   std::size_t                       n,
                   std::vector<std::optional<Index>> e);

    std::optional<Index> at(std::size_t lambda, std::size_t i) const {
      return entries[lambda * cols + i];
    }
    //! Every row and every column has a non-zero entry.
    bool is_regular() const;
    std::size_t num_zeros() const;

    friend bool operator==(SandwichMatrix const&, SandwichMatrix const&)
        = default;
  };

  //! [r, g, λ] with r < cols, λ < rows.
  struct ReesTriple {
    Index r      = 0;
    Index g      = 0;
    Index lambda = 0;

    friend auto operator<=>(ReesTriple const&, ReesTriple const&) = default;
  };

  //! A triple, or nothing for the zero.
  using ReesElement = std::optional<ReesTriple>;

  ReesElement rees_product(SandwichMatrix const& Q,
                           ReesElement const&    a,
                           ReesElement const&    b);

  //! Element numbering of build_rees(Q): ((r |G| + g) m + λ), zero last.
  Index       rees_index(SandwichMatrix const& Q, ReesElement const& a);
  ReesElement rees_element(SandwichMatrix const& Q, Index k);
  std::size_t rees_size(SandwichMatrix const& Q);

  //! M(G; Q) with zero. Throws when Q is not regular, unless
  //! `require_regular` is false.
  FiniteSemigroup build_rees(SandwichMatrix const& Q,
                             bool                  require_regular = true);

  //! Representatives for the non-zero J-class of a completely 0-simple
  //! semigroup, based at the idempotent e.
  struct ReesGeneratingSet {
    Index e = 0;
    //! f[r] lies in L_e, one per R-class; the R-classes are numbered by
    //! this list.
    std::vector<Index> f;
    //! g[λ] lies in R_e, one per L-class.
    std::vector<Index> g;
    //! The group H_e, sorted.
    std::vector<Index> h;
    //! R-class number (L-class number) of each element, -1 for the zero.
    std::vector<int> column_of;
    std::vector<int> row_of;
  };

  //! Picks f and g with the smallest index in each H-class of L_e and
  //! R_e, except that e represents its own classes. Explicit lists may be
  //! supplied instead and are validated. Throws PreconditionError when S
  //! is not completely 0-simple or e is not a non-zero idempotent.
  ReesGeneratingSet rees_generating_set(
      FiniteSemigroup const&                   S,
      Index                                    e,
      std::optional<std::vector<Index>> const& f = std::nullopt,
      std::optional<std::vector<Index>> const& g = std::nullopt);

  //! The generating set of build_rees(Q) whose extracted matrix is Q
  //! itself, anchored at the first non-zero entry of Q. Entry k of the
  //! extracted group corresponds to a group element through anchored_group_map().
  ReesGeneratingSet anchored_generating_set(SandwichMatrix const&  Q,
                                            FiniteSemigroup const& S);
  //! For that generating set: position in rgs.h of the image of each g.
  std::vector<Index> anchored_group_map(SandwichMatrix const&    Q,
                                        ReesGeneratingSet const& rgs);

  //! j = f[r] h[k] g[λ]; returns {r, k, λ}.
  ReesTriple factorize(FiniteSemigroup const&   S,
                       ReesGeneratingSet const& rgs,
                       Index                    j);

  struct ReesExtraction {
    //! Acts on itself; element k corresponds to rgs.h[k].
    GroupAction              group;
    SandwichMatrix           matrix;
    //! Image of every element of S in build_rees(matrix) terms.
    std::vector<ReesElement> iso;
    ReesGeneratingSet        rgs;
  };

  //! Rees coordinates of a completely 0-simple semigroup. The base is
  //! the first non-zero idempotent unless a generating set is supplied.
  //! The returned map is checked to be an isomorphism.
  ReesExtraction extract_rees(FiniteSemigroup const&                  S,
                              std::optional<ReesGeneratingSet> const& rgs
                              = std::nullopt);

  //! A monomial square matrix over a group: row k has the entry value[k]
  //! in column col[k].
  struct PermutationalMatrix {
    std::vector<Index> col;
    std::vector<Index> value;

    std::size_t size() const noexcept {
      return col.size();
    }
    static PermutationalMatrix identity(std::size_t n, Index one);
    friend bool operator==(PermutationalMatrix const&,
                           PermutationalMatrix const&)
        = default;
  };

  //! Q' = φ(U Q V), U m x m and V n x n over the group of Q, φ an
  //! isomorphism onto the group of Q'.
  struct SandwichEquivalence {
    PermutationalMatrix U;
    PermutationalMatrix V;
    std::vector<Index>  phi;
  };

  SandwichMatrix multiply(PermutationalMatrix const& U,
                          SandwichMatrix const&      Q);
  SandwichMatrix multiply(SandwichMatrix const&      Q,
                          PermutationalMatrix const& V);
  //! Entry-wise image under an isomorphism onto `target`.
  SandwichMatrix apply_isomorphism(SandwichMatrix const&     Q,
                                   std::vector<Index> const& phi,
                                   GroupAction const&        target);

  std::optional<SandwichEquivalence>
  sandwich_equivalent(SandwichMatrix const& Q, SandwichMatrix const& Q2);

  bool is_sandwich_equivalence(SandwichMatrix const&      Q,
                               SandwichMatrix const&      Q2,
                               SandwichEquivalence const& w);

}  // namespace primrep

#endif  // PRIMREP_REES_HPP_
