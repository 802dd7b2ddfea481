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

#ifndef PRIMREP_SEMIGROUP_HPP_
#define PRIMREP_SEMIGROUP_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "partition.hpp"
#include "transformation.hpp"

namespace primrep {

  //! Default bound on the number of elements produced by close().
  inline constexpr std::size_t kDefaultClosureCap = 100000;

  //! Semigroups up to this size keep a full multiplication table; larger
  //! transformation semigroups multiply through their carrier.
  inline constexpr std::size_t kTableLimit = 2048;

  //! A finite semigroup on the index set {0, ..., size - 1}.
  //!
  //! Every value carries a list of generators together with the right and
  //! left Cayley graphs with respect to them; Green's relations and ideal
  //! computations only walk those graphs. Semigroups given by a table use
  //! all of their elements as generators.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;

    //! table[a][b] is the product ab. Associativity is not checked here,
    //! see is_associative().
    static FiniteSemigroup
    from_table(std::vector<std::vector<Index>> const& table);

    //! A closed set of pairwise distinct transformations, in the given
    //! order. Throws if the set is not closed under composition.
    static FiniteSemigroup
    from_transformations(std::vector<Transformation> elements);

    std::size_t size() const noexcept {
      return _size;
    }

    Index product(Index a, Index b) const;

    std::optional<Index> zero() const noexcept {
      return _zero;
    }
    std::optional<Index> identity() const noexcept {
      return _identity;
    }

    bool has_carrier() const noexcept {
      return !_carrier.empty();
    }
    std::size_t degree() const noexcept {
      return _carrier.empty() ? 0 : _carrier.front().degree();
    }
    Transformation const& carrier(Index a) const {
      return _carrier[a];
    }
    std::span<Transformation const> carriers() const noexcept {
      return _carrier;
    }
    std::optional<Index> index_of(Transformation const& t) const;

    std::span<Index const> generators() const noexcept {
      return _generators;
    }
    //! a * generators()[k]
    Index right(Index a, std::size_t k) const {
      return _right[a * _generators.size() + k];
    }
    //! generators()[k] * a
    Index left(Index a, std::size_t k) const {
      return _left[a * _generators.size() + k];
    }

    bool has_table() const noexcept {
      return !_table.empty() || _size == 0;
    }

    bool is_idempotent(Index a) const {
      return product(a, a) == a;
    }
    std::vector<Index> idempotents() const;

    //! Exhaustive check, cubic in size().
    bool is_associative() const;

    //! Elements reachable from a by right multiplication, including a
    //! (the principal right ideal aS^1), as a sorted list.
    std::vector<Index> right_ideal(Index a) const;
    std::vector<Index> left_ideal(Index a) const;
    std::vector<Index> two_sided_ideal(Index a) const;

   private:
    friend FiniteSemigroup close(std::span<Transformation const>,
                                 std::size_t);

    void init_special_elements();
    void init_table_if_small();

    std::size_t                 _size = 0;
    std::vector<Index>          _table;
    std::vector<Transformation> _carrier;
    std::unordered_map<Transformation, Index, TransformationHash> _lookup;
    std::vector<Index>   _generators;
    std::vector<Index>   _right;
    std::vector<Index>   _left;
    std::optional<Index> _zero;
    std::optional<Index> _identity;
  };

  //! The subsemigroup generated by `generators`, enumerated breadth first.
  //! Elements are numbered in order of discovery, starting with the
  //! distinct generators. Throws CapExceeded past `cap` elements.
  FiniteSemigroup close(std::span<Transformation const> generators,
                        std::size_t cap = kDefaultClosureCap);

  //! Green's relations of a finite semigroup, as partitions of its index
  //! set. Class ids are the canonical block ids of the partitions.
  struct GreenData {
    Partition r_classes;
    Partition l_classes;
    Partition h_classes;
    Partition j_classes;
    //! j_order[a][b] is true when J-class a lies below J-class b.
    std::vector<std::vector<bool>> j_order;

    bool j_leq(Index a, Index b) const {
      return j_order[a][b];
    }
    std::size_t num_j_classes() const noexcept {
      return j_classes.num_blocks();
    }
  };

  GreenData green(FiniteSemigroup const& S);

  struct RegularJClass {
    Index j_class;
    Index idempotent;
  };

  //! The J-classes containing an idempotent, each with its smallest
  //! idempotent. Throws if some element of such a class has no inverse
  //! (or an element outside them has one).
  std::vector<RegularJClass> regular_jclasses(FiniteSemigroup const& S,
                                              GreenData const&       g);

  //! Elements of J-class `j_class` in increasing order.
  std::vector<Index> jclass_elements(GreenData const& g, Index j_class);

  //! J ∪ {0}: the elements of the class in increasing order followed by a
  //! new zero. Products leaving the class become 0.
  FiniteSemigroup principal_factor(FiniteSemigroup const& S,
                                   GreenData const&       g,
                                   Index                  j_class);

  //! Has a zero, the non-zero elements form a single J-class, that class
  //! contains an idempotent, and the only ideals are {0} and S.
  bool is_completely_0_simple(FiniteSemigroup const& S);

  //! A multiplication preserving bijection S -> T, as an image list, or
  //! nothing. Backtracks over the images of a small generating set.
  std::optional<std::vector<Index>> brute_isomorphic(FiniteSemigroup const& S,
                                                     FiniteSemigroup const& T);

  //! True when phi is a bijection preserving every product.
  bool is_isomorphism(FiniteSemigroup const& S,
                      FiniteSemigroup const& T,
                      std::span<Index const> phi);

}  // namespace primrep

#endif  // PRIMREP_SEMIGROUP_HPP_
