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

#ifndef PRIMREP_GROUP_ACTION_HPP_
#define PRIMREP_GROUP_ACTION_HPP_

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "partition.hpp"
#include "transformation.hpp"

namespace primrep {

  //! Default bound on |G| for action_equivalence.
  inline constexpr std::size_t kDefaultGroupCap = 5040;

  //! A closed group of permutations of {0, ..., degree - 1}.
  //!
  //! Groups built from generators list their elements in lexicographic
  //! order of image lists, so the identity is element 0. A group given by
  //! its Cayley table acts on itself by left multiplication and keeps the
  //! order of the table.
  class GroupAction {
   public:
    GroupAction() = default;

    //! The closure of `generators` (which may be empty: trivial group).
    static GroupAction from_generators(std::size_t                 degree,
                                       std::vector<Transformation> generators);

    //! table[a][b] = ab. Throws unless the table is a group.
    static GroupAction
    from_table(std::vector<std::vector<Index>> const& table);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::size_t order() const noexcept {
      return _elements.size();
    }
    Transformation const& element(Index g) const {
      return _elements[g];
    }
    std::span<Transformation const> elements() const noexcept {
      return _elements;
    }
    std::optional<Index> index_of(Transformation const& t) const;

    Index product(Index a, Index b) const {
      return _table[a * order() + b];
    }
    Index inverse(Index a) const {
      return _inverse[a];
    }
    Index identity() const noexcept {
      return _identity;
    }
    //! Element order of g.
    std::size_t element_order(Index g) const;

    std::span<Index const> generators() const noexcept {
      return _generators;
    }

    friend bool operator==(GroupAction const& a, GroupAction const& b) {
      return a._degree == b._degree && a._elements == b._elements;
    }

   private:
    void finish();

    std::size_t                 _degree = 0;
    std::vector<Transformation> _elements;
    std::unordered_map<Transformation, Index, TransformationHash> _lookup;
    std::vector<Index> _table;
    std::vector<Index> _inverse;
    std::vector<Index> _generators;
    Index              _identity = 0;
  };

  bool is_transitive(GroupAction const& A);

  //! Outcome of a primitivity test; `witness` is a compatible partition
  //! other than the diagonal and the universal one, when there is one.
  struct PrimitivityResult {
    bool                     primitive;
    std::optional<Partition> witness;
  };

  PrimitivityResult is_primitive_group(GroupAction const& A);

  //! Union of the orbits of the seed points, sorted.
  std::vector<Point> transitivity_class(GroupAction const&     A,
                                        std::span<Point const> seeds);

  //! points[x] is the image of x, group[g] the image of element g.
  struct ActionEquivalence {
    std::vector<Point> points;
    std::vector<Index> group;
  };

  //! Calls `visit` on every equivalence A -> B until it returns false.
  //! Returns false when stopped early. Throws CapExceeded when |G| > cap.
  bool for_each_action_equivalence(
      GroupAction const&                                  A,
      GroupAction const&                                  B,
      std::function<bool(ActionEquivalence const&)> const& visit,
      std::size_t                                         cap
      = kDefaultGroupCap);

  std::optional<ActionEquivalence>
  action_equivalence(GroupAction const& A,
                     GroupAction const& B,
                     std::size_t        cap = kDefaultGroupCap);

  //! Checks both equivalence equations on every (element, point) pair.
  bool is_action_equivalence(GroupAction const&       A,
                             GroupAction const&       B,
                             ActionEquivalence const& beta);

  //! Calls `visit` on every isomorphism G -> H (as an image list of the
  //! abstract groups) until it returns false.
  bool for_each_group_isomorphism(
      GroupAction const&                                   G,
      GroupAction const&                                   H,
      std::function<bool(std::vector<Index> const&)> const& visit);

  //! Calls `visit` on every injective homomorphism G -> H.
  bool for_each_group_embedding(
      GroupAction const&                                   G,
      GroupAction const&                                   H,
      std::function<bool(std::vector<Index> const&)> const& visit);

  //! A generating set of G chosen greedily from its elements.
  std::vector<Index> small_generating_set(GroupAction const& G);

}  // namespace primrep

#endif  // PRIMREP_GROUP_ACTION_HPP_
