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

#ifndef PRIMREP_REPRESENTATION_HPP_
#define PRIMREP_REPRESENTATION_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "group_action.hpp"
#include "partition.hpp"
#include "semigroup.hpp"
#include "transformation.hpp"

namespace primrep {

  //! An indexed family of abstract elements, each bound to a
  //! transformation of the carrier {0, ..., carrier - 1}, with a partial
  //! product table.
  //!
  //! product(u, v) = w promises map(w) = map(u) map(v); validity of that
  //! promise is checked by validate_representation(), not here.
  class Representation {
   public:
    Representation() = default;

    //! When `products` is omitted it is inferred: uv is the first element
    //! bound to map(u) map(v), or undefined when there is none.
    Representation(std::size_t                                      carrier,
                   std::vector<Transformation>                      maps,
                   std::vector<std::string>                         names = {},
                   std::optional<std::vector<std::optional<Index>>> products
                   = std::nullopt);

    std::size_t carrier() const noexcept {
      return _carrier;
    }
    std::size_t size() const noexcept {
      return _maps.size();
    }
    Transformation const& map(Index u) const {
      return _maps[u];
    }
    std::span<Transformation const> maps() const noexcept {
      return _maps;
    }
    std::string const& name(Index u) const {
      return _names[u];
    }
    std::optional<Index> product(Index u, Index v) const {
      return _products[u * size() + v];
    }
    //! Row-major, size() x size().
    std::vector<std::optional<Index>> const& products() const noexcept {
      return _products;
    }
    //! The first element bound to t.
    std::optional<Index> find(Transformation const& t) const;

    //! The binding is injective.
    bool is_faithful() const;

   private:
    std::size_t                       _carrier = 0;
    std::vector<Transformation>       _maps;
    std::vector<std::string>          _names;
    std::vector<std::optional<Index>> _products;
  };

  struct ValidationReport {
    bool                                  valid = true;
    bool                                  faithful = true;
    //! The first cell (u, v) whose product disagrees with composition.
    std::optional<std::pair<Index, Index>> bad_cell;
    std::string                           message;
  };

  ValidationReport validate_representation(Representation const& rep);

  //! Adds the constant maps that are missing, named "c<point>". After
  //! expansion c s = c and s c is the constant at s(c).
  Representation expand_constants(Representation const& rep);

  //! a ~ b when every element sends a and b to the same point.
  Partition max_deflation(Representation const& rep);

  //! Smallest compatible equivalence containing `pairs`. Throws if the
  //! closure is not compatible or a pair is out of range.
  Partition congruence_generated(Representation const&      rep,
                                 std::span<PointPair const> pairs);

  //! Closes every pair of points; carriers of size at most 2 are
  //! primitive.
  PrimitivityResult is_primitive_bruteforce(Representation const& rep);

  struct MinimalStructure {
    //! Minimal non-singleton images, each sorted, in increasing order.
    std::vector<std::vector<Point>> minimal_sets;
    //! Elements whose image is a minimal set.
    std::vector<Index> minimal_functions;
    //! Generated by the squares of the minimal sets.
    Partition rho;
  };

  MinimalStructure minimal_structure(Representation const& rep);

  //! The closed transformation semigroup generated by the bound maps.
  FiniteSemigroup transformation_semigroup(Representation const& rep);

  //! A point bijection and an element bijection between two
  //! representations.
  struct RepresentationMap {
    std::vector<Point> points;
    std::vector<Index> elements;
  };

  //! Both maps are bijections, B binds elements[s] to the conjugate of
  //! A's s, and products defined on both sides correspond.
  bool is_representation_equivalence(Representation const&    A,
                                     Representation const&    B,
                                     RepresentationMap const& kappa);

  //! Searches point bijections; elements bound to equal maps are matched
  //! in index order. Throws PreconditionError for carriers above 10.
  std::optional<RepresentationMap>
  representation_equivalence(Representation const& A, Representation const& B);

  //! All f on the carrier with fS and Sf inside S, where S is the set of
  //! bound maps. Throws PreconditionError for carriers above 6.
  FiniteSemigroup translational_hull(Representation const& rep);

  //! The representation of a transformation semigroup by its carrier.
  Representation as_representation(FiniteSemigroup const& S);

}  // namespace primrep

#endif  // PRIMREP_REPRESENTATION_HPP_
