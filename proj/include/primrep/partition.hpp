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

#ifndef PRIMREP_PARTITION_HPP_
#define PRIMREP_PARTITION_HPP_

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "transformation.hpp"

namespace primrep {

  using PointPair = std::pair<Point, Point>;

  //! An equivalence relation on {0, ..., degree - 1} in canonical form.
  //!
  //! Block ids are assigned in order of first occurrence, so two Partition
  //! values compare equal exactly when they describe the same relation.
  class Partition {
   public:
    Partition() = default;

    //! Canonicalizes an arbitrary labelling: points with equal labels share
    //! a block.
    template <typename Label>
    static Partition from_labels(std::span<Label const> labels);
    template <typename Label>
    static Partition from_labels(std::vector<Label> const& labels) {
      return from_labels(std::span<Label const>(labels));
    }

    static Partition diagonal(std::size_t degree);
    static Partition universal(std::size_t degree);

    std::size_t degree() const noexcept {
      return _block.size();
    }
    std::size_t num_blocks() const noexcept {
      return _num_blocks;
    }
    Index block_of(Point p) const {
      return _block[p];
    }
    std::span<Index const> block_ids() const noexcept {
      return _block;
    }
    bool same_block(Point p, Point q) const {
      return _block[p] == _block[q];
    }

    bool is_diagonal() const noexcept {
      return _num_blocks == _block.size();
    }
    bool is_universal() const noexcept {
      return _num_blocks <= 1;
    }

    //! Blocks as sorted point lists, in block-id order.
    std::vector<std::vector<Point>> blocks() const;

    //! A spanning set of pairs: each point paired with its block's first.
    std::vector<PointPair> generating_pairs() const;

    //! True when every block of this lies inside a block of `other`.
    bool refines(Partition const& other) const;

    //! Every map sends related points to related points.
    bool is_compatible(std::span<Transformation const> maps) const;

    Partition meet(Partition const& other) const;
    Partition join(Partition const& other) const;

    std::string to_string() const;

    friend bool operator==(Partition const&, Partition const&) = default;

   private:
    std::vector<Index> _block;
    std::size_t        _num_blocks = 0;
  };

  //! p ~ q exactly when f(p) = f(q).
  Partition kernel_partition(Transformation const& f);

  //! The smallest equivalence on `degree` points containing every pair.
  Partition generate_equivalence(std::span<PointPair const> pairs,
                                 std::size_t                degree);

  //! Disjoint-set forest with path halving and union by size.
  class DisjointSets {
   public:
    explicit DisjointSets(std::size_t n);

    std::size_t find(std::size_t x);
    //! Returns true when x and y were in different sets.
    bool unite(std::size_t x, std::size_t y);
    std::size_t size() const noexcept {
      return _parent.size();
    }
    Partition to_partition();

   private:
    std::vector<std::size_t> _parent;
    std::vector<std::size_t> _size;
  };

  //! The smallest equivalence containing `pairs` that is preserved by every
  //! map in `maps` (Mal'cev closure).
  //!
  //! The pair set is first saturated under the monoid generated by `maps`
  //! (a breadth-first orbit of unordered pairs), then closed to an
  //! equivalence. Since only unary operations are involved this single pass
  //! already yields a compatible relation; `maps` need not be closed under
  //! composition.
  Partition compatible_closure(std::span<Transformation const> maps,
                               std::size_t                     degree,
                               std::span<PointPair const>      pairs);

  template <typename Label>
  Partition Partition::from_labels(std::span<Label const> labels) {
    Partition               result;
    std::map<Label, Index>  seen;
    result._block.reserve(labels.size());
    for (auto const& l : labels) {
      auto [it, inserted] = seen.try_emplace(l, static_cast<Index>(seen.size()));
      result._block.push_back(it->second);
    }
    result._num_blocks = seen.size();
    return result;
  }

}  // namespace primrep

#endif  // PRIMREP_PARTITION_HPP_
