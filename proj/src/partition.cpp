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

#include "primrep/partition.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "primrep/error.hpp"

namespace primrep {

  Partition Partition::diagonal(std::size_t degree) {
    std::vector<std::size_t> labels(degree);
    for (std::size_t p = 0; p < degree; ++p) {
      labels[p] = p;
    }
    return from_labels(labels);
  }

  Partition Partition::universal(std::size_t degree) {
    return from_labels(std::vector<std::size_t>(degree, 0));
  }

  std::vector<std::vector<Point>> Partition::blocks() const {
    std::vector<std::vector<Point>> out(_num_blocks);
    for (std::size_t p = 0; p < _block.size(); ++p) {
      out[_block[p]].push_back(static_cast<Point>(p));
    }
    return out;
  }

  std::vector<PointPair> Partition::generating_pairs() const {
    std::vector<PointPair> out;
    std::vector<Point>     first(_num_blocks, 0);
    std::vector<bool>      seen(_num_blocks, false);
    for (std::size_t p = 0; p < _block.size(); ++p) {
      Index b = _block[p];
      if (!seen[b]) {
        seen[b]  = true;
        first[b] = static_cast<Point>(p);
      } else {
        out.emplace_back(first[b], static_cast<Point>(p));
      }
    }
    return out;
  }

  bool Partition::refines(Partition const& other) const {
    if (other.degree() != degree()) {
      return false;
    }
    std::vector<std::int64_t> target(_num_blocks, -1);
    for (std::size_t p = 0; p < _block.size(); ++p) {
      auto& t = target[_block[p]];
      if (t == -1) {
        t = other._block[p];
      } else if (t != other._block[p]) {
        return false;
      }
    }
    return true;
  }

  bool Partition::is_compatible(std::span<Transformation const> maps) const {
    for (auto const& f : maps) {
      if (f.degree() != degree()) {
        throw Error("compatibility check: degree mismatch");
      }
      // related points share a block with the block's first point, so it is
      // enough to compare every point against that representative
      std::vector<std::int64_t> image_block(_num_blocks, -1);
      for (std::size_t p = 0; p < _block.size(); ++p) {
        auto& t  = image_block[_block[p]];
        auto  ip = _block[f(static_cast<Point>(p))];
        if (t == -1) {
          t = ip;
        } else if (t != ip) {
          return false;
        }
      }
    }
    return true;
  }

  Partition Partition::meet(Partition const& other) const {
    if (other.degree() != degree()) {
      throw Error("partition meet: degree mismatch");
    }
    std::vector<std::pair<Index, Index>> labels(degree());
    for (std::size_t p = 0; p < degree(); ++p) {
      labels[p] = {_block[p], other._block[p]};
    }
    return from_labels(labels);
  }

  Partition Partition::join(Partition const& other) const {
    if (other.degree() != degree()) {
      throw Error("partition join: degree mismatch");
    }
    auto pairs = generating_pairs();
    auto more  = other.generating_pairs();
    pairs.insert(pairs.end(), more.begin(), more.end());
    return generate_equivalence(pairs, degree());
  }

  std::string Partition::to_string() const {
    std::ostringstream os;
    os << '{';
    bool first_block = true;
    for (auto const& b : blocks()) {
      os << (first_block ? "" : ",") << '{';
      for (std::size_t k = 0; k < b.size(); ++k) {
        os << (k ? "," : "") << b[k];
      }
      os << '}';
      first_block = false;
    }
    os << '}';
    return os.str();
  }

  Partition kernel_partition(Transformation const& f) {
    return Partition::from_labels(
        std::vector<Point>(f.images().begin(), f.images().end()));
  }

  Partition generate_equivalence(std::span<PointPair const> pairs,
                                 std::size_t                degree) {
    DisjointSets ds(degree);
    for (auto [a, b] : pairs) {
      if (a >= degree || b >= degree) {
        throw Error("generate_equivalence: point out of range");
      }
      ds.unite(a, b);
    }
    return ds.to_partition();
  }

  DisjointSets::DisjointSets(std::size_t n) : _parent(n), _size(n, 1) {
    for (std::size_t k = 0; k < n; ++k) {
      _parent[k] = k;
    }
  }

  std::size_t DisjointSets::find(std::size_t x) {
    while (_parent[x] != x) {
      _parent[x] = _parent[_parent[x]];
      x          = _parent[x];
    }
    return x;
  }

  bool DisjointSets::unite(std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) {
      return false;
    }
    if (_size[x] < _size[y]) {
      std::swap(x, y);
    }
    _parent[y] = x;
    _size[x] += _size[y];
    return true;
  }

  Partition DisjointSets::to_partition() {
    std::vector<std::size_t> labels(_parent.size());
    for (std::size_t k = 0; k < labels.size(); ++k) {
      labels[k] = find(k);
    }
    return Partition::from_labels(labels);
  }

  Partition compatible_closure(std::span<Transformation const> maps,
                               std::size_t                     degree,
                               std::span<PointPair const>      pairs) {
    for (auto const& f : maps) {
      if (f.degree() != degree) {
        throw Error("compatible_closure: degree mismatch");
      }
    }
    // seen[a * degree + b] for a < b
    std::vector<bool>     seen(degree * degree, false);
    std::deque<PointPair> queue;
    DisjointSets          ds(degree);
    auto                  push = [&](Point a, Point b) {
      if (a == b) {
        return;
      }
      if (a > b) {
        std::swap(a, b);
      }
      auto key = static_cast<std::size_t>(a) * degree + b;
      if (!seen[key]) {
        seen[key] = true;
        queue.emplace_back(a, b);
      }
    };
    for (auto [a, b] : pairs) {
      if (a >= degree || b >= degree) {
        throw Error("compatible_closure: point out of range");
      }
      push(a, b);
    }
    while (!queue.empty()) {
      auto [a, b] = queue.front();
      queue.pop_front();
      ds.unite(a, b);
      for (auto const& f : maps) {
        push(f(a), f(b));
      }
    }
    return ds.to_partition();
  }

}  // namespace primrep
