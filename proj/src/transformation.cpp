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

#include "primrep/transformation.hpp"

#include <algorithm>
#include <sstream>

#include "primrep/error.hpp"

namespace primrep {

  Transformation::Transformation(std::vector<Point> images)
      : _images(std::move(images)) {
    for (Point p : _images) {
      if (p >= _images.size()) {
        throw Error("transformation image " + std::to_string(p)
                    + " out of range for degree "
                    + std::to_string(_images.size()));
      }
    }
  }

  Transformation Transformation::identity(std::size_t degree) {
    std::vector<Point> im(degree);
    for (std::size_t p = 0; p < degree; ++p) {
      im[p] = static_cast<Point>(p);
    }
    return Transformation(std::move(im));
  }

  Transformation Transformation::constant(std::size_t degree, Point value) {
    if (value >= degree) {
      throw Error("constant value out of range");
    }
    return Transformation(std::vector<Point>(degree, value));
  }

  bool Transformation::is_permutation() const {
    std::vector<bool> hit(_images.size(), false);
    for (Point p : _images) {
      if (hit[p]) {
        return false;
      }
      hit[p] = true;
    }
    return true;
  }

  bool Transformation::is_constant() const {
    return std::adjacent_find(_images.begin(), _images.end(),
                              std::not_equal_to<>())
           == _images.end();
  }

  bool Transformation::is_idempotent() const {
    return std::all_of(_images.begin(), _images.end(),
                       [this](Point p) { return _images[p] == p; });
  }

  std::vector<Point> Transformation::image_set() const {
    std::vector<Point> im(_images);
    std::sort(im.begin(), im.end());
    im.erase(std::unique(im.begin(), im.end()), im.end());
    return im;
  }

  std::size_t Transformation::rank() const {
    return image_set().size();
  }

  Transformation Transformation::inverse() const {
    if (!is_permutation()) {
      throw Error("inverse of a non-permutation");
    }
    std::vector<Point> inv(_images.size());
    for (std::size_t p = 0; p < _images.size(); ++p) {
      inv[_images[p]] = static_cast<Point>(p);
    }
    return Transformation(std::move(inv));
  }

  Transformation Transformation::restrict_to(
      std::span<Point const> subset) const {
    std::vector<Point> local(subset.size());
    for (std::size_t k = 0; k < subset.size(); ++k) {
      Point image = _images[subset[k]];
      auto  it    = std::lower_bound(subset.begin(), subset.end(), image);
      if (it == subset.end() || *it != image) {
        throw Error("restriction to a subset that is not invariant");
      }
      local[k] = static_cast<Point>(it - subset.begin());
    }
    return Transformation(std::move(local));
  }

  std::string Transformation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t p = 0; p < _images.size(); ++p) {
      os << (p ? "," : "") << _images[p];
    }
    os << ']';
    return os.str();
  }

  Transformation compose(Transformation const& f, Transformation const& g) {
    if (f.degree() != g.degree()) {
      throw Error("compose: degree mismatch (" + std::to_string(f.degree())
                  + " vs " + std::to_string(g.degree()) + ")");
    }
    std::vector<Point> im(g.degree());
    for (std::size_t p = 0; p < im.size(); ++p) {
      im[p] = f(g(static_cast<Point>(p)));
    }
    return Transformation(std::move(im));
  }

  std::size_t TransformationHash::operator()(
      Transformation const& t) const noexcept {
    // FNV-1a over the image sequence
    std::size_t h = 1469598103934665603ULL;
    for (Point p : t.images()) {
      h ^= p;
      h *= 1099511628211ULL;
    }
    return h;
  }

}  // namespace primrep
