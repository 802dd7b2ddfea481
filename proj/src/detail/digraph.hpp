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

// Internal graph helpers shared by the semigroup and representation code.

#ifndef PRIMREP_SRC_DETAIL_DIGRAPH_HPP_
#define PRIMREP_SRC_DETAIL_DIGRAPH_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "primrep/transformation.hpp"

namespace primrep::detail {

  // Strongly connected components of a graph on n vertices where every
  // vertex has `degree` out-edges, given by succ(v, k). Returns a component
  // label per vertex; labels are in reverse topological order (a component
  // only reaches components with smaller or equal labels).
  template <typename Succ>
  std::vector<Index> scc_labels(std::size_t n, std::size_t degree, Succ succ) {
    constexpr Index      kUnset = static_cast<Index>(-1);
    std::vector<Index>   label(n, kUnset);
    std::vector<Index>   low(n, 0);
    std::vector<Index>   order(n, kUnset);
    std::vector<Index>   stack;
    std::vector<bool>    on_stack(n, false);
    Index                counter    = 0;
    Index                components = 0;

    struct Frame {
      Index       v;
      std::size_t next;
    };
    std::vector<Frame> frames;

    for (std::size_t root = 0; root < n; ++root) {
      if (order[root] != kUnset) {
        continue;
      }
      frames.push_back({static_cast<Index>(root), 0});
      order[root] = low[root] = counter++;
      stack.push_back(static_cast<Index>(root));
      on_stack[root] = true;
      while (!frames.empty()) {
        auto& f = frames.back();
        if (f.next < degree) {
          Index w = succ(f.v, f.next++);
          if (order[w] == kUnset) {
            order[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = true;
            frames.push_back({w, 0});
          } else if (on_stack[w] && order[w] < low[f.v]) {
            low[f.v] = order[w];
          }
          continue;
        }
        Index v = f.v;
        frames.pop_back();
        if (!frames.empty() && low[v] < low[frames.back().v]) {
          low[frames.back().v] = low[v];
        }
        if (low[v] == order[v]) {
          Index w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            label[w]    = components;
          } while (w != v);
          ++components;
        }
      }
    }
    return label;
  }

  // reach[a][b] is true when component a reaches component b, for the
  // condensation of the graph labelled by scc_labels.
  template <typename Succ>
  std::vector<std::vector<bool>> component_reachability(
      std::size_t               n,
      std::size_t               degree,
      Succ                      succ,
      std::vector<Index> const& label) {
    std::size_t c = 0;
    for (Index l : label) {
      c = std::max<std::size_t>(c, l + 1);
    }
    std::vector<std::vector<Index>> out(c);
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t k = 0; k < degree; ++k) {
        Index w = succ(static_cast<Index>(v), k);
        if (label[w] != label[v]) {
          out[label[v]].push_back(label[w]);
        }
      }
    }
    std::size_t const                       words = (c + 63) / 64;
    std::vector<std::vector<std::uint64_t>> bits(
        c, std::vector<std::uint64_t>(words, 0));
    // labels are a reverse topological order, so successors come first
    for (std::size_t a = 0; a < c; ++a) {
      auto& o = out[a];
      std::sort(o.begin(), o.end());
      o.erase(std::unique(o.begin(), o.end()), o.end());
      bits[a][a / 64] |= std::uint64_t(1) << (a % 64);
      for (Index b : o) {
        for (std::size_t w = 0; w < words; ++w) {
          bits[a][w] |= bits[b][w];
        }
      }
    }
    std::vector<std::vector<bool>> reach(c, std::vector<bool>(c, false));
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) {
        reach[a][b] = (bits[a][b / 64] >> (b % 64)) & 1;
      }
    }
    return reach;
  }

}  // namespace primrep::detail

#endif  // PRIMREP_SRC_DETAIL_DIGRAPH_HPP_
