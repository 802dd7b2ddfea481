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

#ifndef PRIMREP_TRANSFORMATION_HPP_
#define PRIMREP_TRANSFORMATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace primrep {

  //! Points of every carrier set are dense 0-based integers.
  using Point = std::uint32_t;

  //! Indices into element lists (semigroups, groups, representations).
  using Index = std::uint32_t;

  //! A total self-map of the point set {0, ..., degree - 1}.
  //!
  //! Values are immutable once constructed; the constructor rejects images
  //! that fall outside the point set.
  class Transformation {
   public:
    Transformation() = default;
    explicit Transformation(std::vector<Point> images);
    Transformation(std::initializer_list<Point> images)
        : Transformation(std::vector<Point>(images)) {}

    static Transformation identity(std::size_t degree);
    static Transformation constant(std::size_t degree, Point value);

    std::size_t degree() const noexcept {
      return _images.size();
    }

    Point operator()(Point p) const {
      return _images[p];
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    bool is_permutation() const;
    bool is_constant() const;
    bool is_idempotent() const;

    //! Sorted list of distinct image points.
    std::vector<Point> image_set() const;
    std::size_t rank() const;

    //! Inverse of a permutation; throws if this is not a permutation.
    Transformation inverse() const;

    //! Restriction to an invariant subset, renumbered by the position of
    //! each point in `subset` (which must be sorted and mapped into itself).
    Transformation restrict_to(std::span<Point const> subset) const;

    std::string to_string() const;

    friend bool operator==(Transformation const&, Transformation const&)
        = default;
    friend auto operator<=>(Transformation const&, Transformation const&)
        = default;

   private:
    std::vector<Point> _images;
  };

  //! compose(f, g)(p) = f(g(p)).
  Transformation compose(Transformation const& f, Transformation const& g);

  struct TransformationHash {
    std::size_t operator()(Transformation const& t) const noexcept;
  };

}  // namespace primrep

template <>
struct std::hash<primrep::Transformation> : primrep::TransformationHash {};

#endif  // PRIMREP_TRANSFORMATION_HPP_
