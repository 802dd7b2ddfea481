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

#include "detail/gauge.hpp"

#include <functional>

namespace primrep::detail {

  namespace {
    constexpr Index kUnset = static_cast<Index>(-1);

    bool same_kind(Cell const& s, Cell const& t) {
      if (s.kind != t.kind) {
        return false;
      }
      return s.kind != CellKind::map || s.map.degree() == t.map.degree();
    }
  }  // namespace

  std::vector<Cell> permute_cells(std::vector<Cell> const&  S,
                                  std::size_t               n,
                                  std::vector<Index> const& sigma,
                                  std::vector<Index> const& tau) {
    std::vector<Cell> out;
    out.reserve(S.size());
    for (std::size_t l = 0; l < sigma.size(); ++l) {
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(S[sigma[l] * n + tau[i]]);
      }
    }
    return out;
  }

  std::optional<GaugeSolution> solve_gauge(GroupAction const&       G,
                                           std::size_t              m,
                                           std::size_t              n,
                                           std::vector<Cell> const& S,
                                           std::vector<Cell> const& T) {
    for (std::size_t k = 0; k < S.size(); ++k) {
      if (!same_kind(S[k], T[k])) {
        return std::nullopt;
      }
    }
    // vertices 0..m-1 are rows, m..m+n-1 columns; perm cells are edges
    std::size_t const nv = m + n;
    std::vector<std::vector<std::size_t>> adj(nv);
    for (std::size_t l = 0; l < m; ++l) {
      for (std::size_t i = 0; i < n; ++i) {
        if (S[l * n + i].kind == CellKind::perm) {
          adj[l].push_back(m + i);
          adj[m + i].push_back(l);
        }
      }
    }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<bool>                     seen(nv, false);
    for (std::size_t v = 0; v < nv; ++v) {
      if (seen[v]) {
        continue;
      }
      seen[v] = true;
      std::vector<std::size_t> comp{v};
      for (std::size_t pos = 0; pos < comp.size(); ++pos) {
        for (std::size_t w : adj[comp[pos]]) {
          if (!seen[w]) {
            seen[w] = true;
            comp.push_back(w);
          }
        }
      }
      comps.push_back(std::move(comp));
    }

    std::vector<Index> value(nv, kUnset);

    auto cell = [&](std::size_t row, std::size_t colv) -> std::size_t {
      return row * n + (colv - m);
    };

    // assigns the component from its seed; false on a contradiction
    auto propagate = [&](std::vector<std::size_t> const& comp) {
      for (std::size_t v : comp) {
        for (std::size_t w : adj[v]) {
          std::size_t row = v < m ? v : w;
          std::size_t cv  = v < m ? w : v;
          Index       s   = S[cell(row, cv)].perm;
          Index       t   = T[cell(row, cv)].perm;
          Index       want;
          if (v < m) {
            // b = s^-1 a^-1 t
            want = G.product(G.inverse(s),
                             G.product(G.inverse(value[v]), t));
          } else {
            // a = t b^-1 s^-1
            want = G.product(t, G.product(G.inverse(value[v]),
                                          G.inverse(s)));
          }
          if (value[w] == kUnset) {
            value[w] = want;
          } else if (value[w] != want) {
            return false;
          }
        }
      }
      for (std::size_t v : comp) {
        if (v >= m) {
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) {
          auto const& s = S[v * n + i];
          if (s.kind == CellKind::constant
              && G.element(value[v])(s.point) != T[v * n + i].point) {
            return false;
          }
        }
      }
      return true;
    };

    auto leaf = [&]() {
      for (std::size_t l = 0; l < m; ++l) {
        for (std::size_t i = 0; i < n; ++i) {
          auto const& s = S[l * n + i];
          if (s.kind == CellKind::map
              && compose(compose(G.element(value[l]), s.map),
                         G.element(value[m + i]))
                     != T[l * n + i].map) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t c) {
      if (c == comps.size()) {
        return leaf();
      }
      auto const& comp = comps[c];
      for (Index x = 0; x < G.order(); ++x) {
        for (std::size_t v : comp) {
          value[v] = kUnset;
        }
        value[comp.front()] = x;
        if (propagate(comp) && search(c + 1)) {
          return true;
        }
      }
      for (std::size_t v : comp) {
        value[v] = kUnset;
      }
      return false;
    };

    if (!search(0)) {
      return std::nullopt;
    }
    GaugeSolution sol;
    sol.a.assign(value.begin(), value.begin() + m);
    sol.b.assign(value.begin() + m, value.end());
    return sol;
  }

}  // namespace primrep::detail
