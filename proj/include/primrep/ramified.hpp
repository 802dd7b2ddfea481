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

#ifndef PRIMREP_RAMIFIED_HPP_
#define PRIMREP_RAMIFIED_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "group_action.hpp"
#include "partition.hpp"
#include "rees.hpp"
#include "representation.hpp"
#include "transformation.hpp"

namespace primrep {

  //! An entry of a ramified matrix: a permutation from G (by index), a
  //! constant, or some other non-permutation of X.
  struct RamifiedEntry {
    enum class Kind { perm, constant, map };

    Kind           kind  = Kind::perm;
    Index          perm  = 0;
    Point          point = 0;
    Transformation map;

    static RamifiedEntry group(Index g) {
      return {Kind::perm, g, 0, {}};
    }
    static RamifiedEntry constant(Point x) {
      return {Kind::constant, 0, x, {}};
    }

    friend bool operator==(RamifiedEntry const& a, RamifiedEntry const& b) {
      if (a.kind != b.kind) {
        return false;
      }
      switch (a.kind) {
        case Kind::perm:
          return a.perm == b.perm;
        case Kind::constant:
          return a.point == b.point;
        default:
          return a.map == b.map;
      }
    }
  };

  //! Classifies a transformation of X: elements of G become group
  //! entries, constant maps constants. Throws for permutations outside G.
  RamifiedEntry normalize_entry(GroupAction const& A, Transformation const& t);

  //! An m x n matrix over (X; G) with entries in G and the
  //! non-permutations of X; rows are indexed by Λ, columns by I.
  class RamifiedMatrix {
   public:
    RamifiedMatrix() = default;
    RamifiedMatrix(GroupAction                action,
                   std::size_t                rows,
                   std::size_t                cols,
                   std::vector<RamifiedEntry> entries);

    GroupAction const& action() const noexcept {
      return _action;
    }
    std::size_t rows() const noexcept {
      return _rows;
    }
    std::size_t cols() const noexcept {
      return _cols;
    }
    std::size_t degree() const noexcept {
      return _action.degree();
    }
    RamifiedEntry const& at(std::size_t lambda, std::size_t i) const {
      return _entries[lambda * _cols + i];
    }
    std::vector<RamifiedEntry> const& entries() const noexcept {
      return _entries;
    }
    //! The entry as a transformation of X.
    Transformation entry_map(std::size_t lambda, std::size_t i) const;
    Point          apply(std::size_t lambda, std::size_t i, Point x) const;

    //! Every non-permutation entry is a constant.
    bool is_c_ramified() const;
    //! Every row and every column has a group entry.
    bool is_regular() const;

    //! |V| = cols * |X|.
    std::size_t num_vectors() const noexcept {
      return _cols * degree();
    }

    std::string to_string() const;

    friend bool operator==(RamifiedMatrix const& a, RamifiedMatrix const& b) {
      return a._action == b._action && a._rows == b._rows
             && a._cols == b._cols && a._entries == b._entries;
    }

   private:
    GroupAction                _action;
    std::size_t                _rows = 0;
    std::size_t                _cols = 0;
    std::vector<RamifiedEntry> _entries;
  };

  //! [r, g, λ]: r a column, λ a row.
  using MonomialTriple = ReesTriple;

  //! The monomial vector i_x, numbered i |X| + x.
  struct VectorElement {
    Index i = 0;
    Point x = 0;

    friend auto operator<=>(VectorElement const&, VectorElement const&)
        = default;
  };

  inline Index vector_index(RamifiedMatrix const& P, VectorElement v) {
    return static_cast<Index>(v.i * P.degree() + v.x);
  }
  inline VectorElement vector_element(RamifiedMatrix const& P, Index k) {
    return {static_cast<Index>(k / P.degree()),
            static_cast<Point>(k % P.degree())};
  }

  //! Position of a triple in the element list of the ramified actions:
  //! ((r |G| + g) m + λ).
  Index          triple_index(RamifiedMatrix const& P, MonomialTriple t);
  MonomialTriple triple_at(RamifiedMatrix const& P, Index k);
  std::size_t    num_triples(RamifiedMatrix const& P);

  VectorElement act_triple(RamifiedMatrix const& P,
                           MonomialTriple        M,
                           VectorElement         v);

  //! r_x ~ s_y when P(λ, r)(x) = P(λ, s)(y) for every row λ.
  Partition theta(RamifiedMatrix const& P);

  //! The product M N acts on V as the constant at r_x.
  struct ConstantOutcome {
    Index r;
    Point x;
    friend bool operator==(ConstantOutcome const&,
                           ConstantOutcome const&) = default;
  };

  //! The product M N acts by i_x -> r_{f(P(μ, i)(x))}.
  struct GeneralOutcome {
    Index          r;
    Transformation f;
    Index          mu;
    friend bool operator==(GeneralOutcome const&,
                           GeneralOutcome const&) = default;
  };

  using TripleProduct
      = std::variant<MonomialTriple, ConstantOutcome, GeneralOutcome>;

  TripleProduct compose_triples(RamifiedMatrix const& P,
                                MonomialTriple        M,
                                MonomialTriple        N);

  //! The action of the triples and the constants on V / α.
  struct RamifiedAction {
    Representation rep;
    Partition      alpha;
    std::size_t    triples   = 0;
    std::size_t    constants = 0;
    //! Products of triples that are neither triples nor constants; only
    //! possible when P is not c-ramified.
    std::size_t extra = 0;
  };

  //! Elements: the triples in triple_index() order, the constants of
  //! V / α, then whatever else composition produces. Products are total.
  //! Throws PreconditionError unless P is regular and α refines θ_P.
  RamifiedAction ramified_action(RamifiedMatrix const& P,
                                 Partition const&      alpha);

  //! ramified_action with α = θ_P (quotient) or α = Δ.
  Representation build_action(RamifiedMatrix const& P, bool quotient);

  //! The triples alone on V / α; a product is defined exactly when it is
  //! again a triple.
  Representation j_action(RamifiedMatrix const& P, Partition const& alpha);

  struct GraphResult {
    std::vector<std::pair<Index, Index>> edges;
    bool                                 connected = false;
  };

  //! Columns r != s are adjacent when some r_x, s_y are θ_P related.
  GraphResult graph(RamifiedMatrix const& P);

  struct Reductivity {
    bool left  = true;
    bool right = true;
  };

  Reductivity reductivity(RamifiedMatrix const& P);

  //! P' = β(A P B): A is m x m and B is n x n, both over the group of P,
  //! and β is an action equivalence.
  struct MatrixEquivalence {
    PermutationalMatrix A;
    PermutationalMatrix B;
    ActionEquivalence   beta;
  };

  RamifiedMatrix multiply(PermutationalMatrix const& A,
                          RamifiedMatrix const&      P);
  RamifiedMatrix multiply(RamifiedMatrix const&      P,
                          PermutationalMatrix const& B);
  //! Group entries through the group part of β, constants through the
  //! point part, other maps by conjugation.
  RamifiedMatrix apply_equivalence(RamifiedMatrix const&    P,
                                   ActionEquivalence const& beta,
                                   GroupAction const&       target);

  std::optional<MatrixEquivalence>
  matrices_equivalent(RamifiedMatrix const& P, RamifiedMatrix const& P2);

  bool is_matrix_equivalence(RamifiedMatrix const&    P,
                             RamifiedMatrix const&    P2,
                             MatrixEquivalence const& w);

  //! gamma[g] is the index in P's group of the image of Q's element g.
  bool is_ramification(RamifiedMatrix const&     P,
                       SandwichMatrix const&     Q,
                       std::vector<Index> const& gamma);

  //! The group entries of P as a sandwich matrix over P's group.
  SandwichMatrix permutation_skeleton(RamifiedMatrix const& P);

  struct FaithfulnessReport {
    bool faithful        = false;
    bool group_faithful  = true;
    bool right_reductive = false;
    bool left_reductive  = false;
    //! Distinct images of the idempotent triples on V / α.
    std::vector<std::vector<Point>> neighborhoods;
    bool                            alpha_is_theta = false;
    bool                            reduced        = false;
    //! Faithful and reduced.
    bool        faithful_reduced = false;
    std::string failure;
  };

  FaithfulnessReport faithful_ramified(RamifiedMatrix const& P,
                                       Partition const&      alpha);

  //! The constants occurring in column s.
  std::vector<Point> column_constants(RamifiedMatrix const& P, Index s);

  //! For every x and column s, {r_y / α : r ∈ I, y ∈ G(K_s ∪ {x})} is all
  //! of V / α.
  bool transitivity_check(RamifiedMatrix const& P, Partition const& alpha);

  struct CyclicityVerdict {
    enum class Kind { not_cyclic, from_vector, from_initial };

    Kind                         kind = Kind::not_cyclic;
    std::optional<VectorElement> generator;
    //! With an initial tuple: the verdict of the coarser
    //! {r_y / α : y ∈ ∪ G(K_{r_λ} ∪ {x_λ})} test.
    std::optional<bool> orbit_union_verdict;
  };

  //! Without `initial`: is some r_x a cyclic generator of (V / α; J)?
  //! With `initial` (one vector per row): is the added state a cyclic
  //! generator of the initial-state extension?
  CyclicityVerdict
  cyclicity_check(RamifiedMatrix const&                     P,
                  Partition const&                          alpha,
                  std::optional<std::vector<VectorElement>> initial
                  = std::nullopt);

  //! V / α plus one extra point (the last), on which [r, g, λ] acts as
  //! r_y / α with y = g P(λ, r_λ)(x_λ). Products of triples that are not
  //! triples are left undefined.
  Representation
  initial_state_representation(RamifiedMatrix const&             P,
                               Partition const&                  alpha,
                               std::vector<VectorElement> const& initial);

  //! Lazily lists the c-ramifications of a regular Q over (X; G): each
  //! zero of Q is replaced by every constant, group entries go through
  //! the embedding γ (by default the first one found).
  class CRamificationStream {
   public:
    CRamificationStream(SandwichMatrix                           Q,
                        GroupAction                              A,
                        std::optional<std::vector<Index>> const& gamma
                        = std::nullopt);

    std::optional<RamifiedMatrix> next();
    //! |X|^(zeros of Q), saturating at SIZE_MAX.
    std::size_t total() const noexcept {
      return _total;
    }
    std::vector<Index> const& gamma() const noexcept {
      return _gamma;
    }

   private:
    SandwichMatrix           _Q;
    GroupAction              _A;
    std::vector<Index>       _gamma;
    std::vector<std::size_t> _zeros;
    std::vector<Point>       _digits;
    std::size_t              _total = 1;
    bool                     _done  = false;
  };

  std::vector<RamifiedMatrix>
  enumerate_c_ramifications(SandwichMatrix const&                    Q,
                            GroupAction const&                       A,
                            std::optional<std::vector<Index>> const& gamma
                            = std::nullopt);

}  // namespace primrep

#endif  // PRIMREP_RAMIFIED_HPP_
