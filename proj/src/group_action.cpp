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

#include "primrep/group_action.hpp"

#include <algorithm>
#include <string>

#include "primrep/error.hpp"
#include "primrep/semigroup.hpp"

namespace primrep {

  GroupAction
  GroupAction::from_generators(std::size_t                 degree,
                               std::vector<Transformation> generators) {
    for (auto const& g : generators) {
      if (g.degree() != degree || !g.is_permutation()) {
        throw Error("group generator " + g.to_string()
                    + " is not a permutation of degree "
                    + std::to_string(degree));
      }
    }
    std::vector<Transformation> seeds = generators;
    seeds.push_back(Transformation::identity(degree));
    auto S = close(seeds);

    GroupAction A;
    A._degree = degree;
    A._elements.assign(S.carriers().begin(), S.carriers().end());
    std::sort(A._elements.begin(), A._elements.end());
    A.finish();
    for (auto const& g : generators) {
      Index k = A._lookup.at(g);
      if (std::find(A._generators.begin(), A._generators.end(), k)
          == A._generators.end()) {
        A._generators.push_back(k);
      }
    }
    return A;
  }

  GroupAction
  GroupAction::from_table(std::vector<std::vector<Index>> const& table) {
    auto S = FiniteSemigroup::from_table(table);
    if (S.size() == 0 || !S.identity()) {
      throw Error("group table has no identity");
    }
    Index e = *S.identity();
    for (Index a = 0; a < S.size(); ++a) {
      bool invertible = false;
      for (Index b = 0; b < S.size() && !invertible; ++b) {
        invertible = S.product(a, b) == e;
      }
      if (!invertible) {
        throw Error("group table: element " + std::to_string(a)
                    + " has no inverse");
      }
    }
    if (!S.is_associative()) {
      throw Error("group table is not associative");
    }
    GroupAction A;
    A._degree = S.size();
    for (Index a = 0; a < S.size(); ++a) {
      std::vector<Point> im(S.size());
      for (Index b = 0; b < S.size(); ++b) {
        im[b] = S.product(a, b);
      }
      A._elements.emplace_back(std::move(im));
    }
    A.finish();
    A._generators = small_generating_set(A);
    return A;
  }

  void GroupAction::finish() {
    std::size_t const n = _elements.size();
    _lookup.clear();
    for (Index k = 0; k < n; ++k) {
      _lookup.emplace(_elements[k], k);
    }
    _table.resize(n * n);
    for (Index a = 0; a < n; ++a) {
      for (Index b = 0; b < n; ++b) {
        auto it = _lookup.find(compose(_elements[a], _elements[b]));
        if (it == _lookup.end()) {
          throw Error("permutation set is not closed");
        }
        _table[a * n + b] = it->second;
      }
    }
    _identity = _lookup.at(Transformation::identity(_degree));
    _inverse.resize(n);
    for (Index a = 0; a < n; ++a) {
      _inverse[a] = _lookup.at(_elements[a].inverse());
    }
  }

  std::optional<Index> GroupAction::index_of(Transformation const& t) const {
    auto it = _lookup.find(t);
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::size_t GroupAction::element_order(Index g) const {
    std::size_t k = 1;
    for (Index x = g; x != _identity; x = product(x, g)) {
      ++k;
    }
    return k;
  }

  std::vector<Point> transitivity_class(GroupAction const&     A,
                                        std::span<Point const> seeds) {
    std::vector<bool>  seen(A.degree(), false);
    std::vector<Point> out;
    for (Point s : seeds) {
      if (s >= A.degree()) {
        throw Error("transitivity_class: point " + std::to_string(s)
                    + " out of range");
      }
      if (!seen[s]) {
        seen[s] = true;
        out.push_back(s);
      }
    }
    for (std::size_t pos = 0; pos < out.size(); ++pos) {
      for (Index g : A.generators()) {
        Point y = A.element(g)(out[pos]);
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool is_transitive(GroupAction const& A) {
    if (A.degree() == 0) {
      return true;
    }
    Point zero = 0;
    return transitivity_class(A, std::span<Point const>(&zero, 1)).size()
           == A.degree();
  }

  PrimitivityResult is_primitive_group(GroupAction const& A) {
    if (A.degree() <= 2) {
      return {true, std::nullopt};
    }
    std::vector<Transformation> gens;
    for (Index g : A.generators()) {
      gens.push_back(A.element(g));
    }
    for (Point a = 0; a < A.degree(); ++a) {
      for (Point b = a + 1; b < A.degree(); ++b) {
        PointPair pair{a, b};
        auto      c = compatible_closure(
            gens, A.degree(), std::span<PointPair const>(&pair, 1));
        if (!c.is_universal()) {
          return {false, c};
        }
      }
    }
    return {true, std::nullopt};
  }

  std::vector<Index> small_generating_set(GroupAction const& G) {
    std::vector<Index> order(G.order());
    for (Index k = 0; k < G.order(); ++k) {
      order[k] = k;
    }
    std::stable_sort(order.begin(), order.end(), [&G](Index a, Index b) {
      return G.element_order(a) > G.element_order(b);
    });
    std::vector<Index> gens;
    std::vector<bool>  covered(G.order(), false);
    covered[G.identity()] = true;
    for (Index a : order) {
      if (covered[a]) {
        continue;
      }
      gens.push_back(a);
      std::vector<Index> sub{G.identity()};
      std::fill(covered.begin(), covered.end(), false);
      covered[G.identity()] = true;
      for (std::size_t pos = 0; pos < sub.size(); ++pos) {
        for (Index g : gens) {
          Index y = G.product(sub[pos], g);
          if (!covered[y]) {
            covered[y] = true;
            sub.push_back(y);
          }
        }
      }
    }
    return gens;
  }

  bool for_each_group_isomorphism(
      GroupAction const&                                   G,
      GroupAction const&                                   H,
      std::function<bool(std::vector<Index> const&)> const& visit) {
    if (G.order() != H.order()) {
      return true;
    }
    return for_each_group_embedding(G, H, visit);
  }

  bool for_each_group_embedding(
      GroupAction const&                                   G,
      GroupAction const&                                   H,
      std::function<bool(std::vector<Index> const&)> const& visit) {
    if (H.order() % G.order() != 0) {
      return true;
    }
    constexpr Index    kUnset = static_cast<Index>(-1);
    auto const         gens   = small_generating_set(G);
    std::vector<Index> images(gens.size(), 0);
    std::vector<Index> map;

    auto extend = [&](std::size_t count) {
      map.assign(G.order(), kUnset);
      std::vector<bool>  used(H.order(), false);
      std::vector<Index> queue{G.identity()};
      map[G.identity()]  = H.identity();
      used[H.identity()] = true;
      for (std::size_t pos = 0; pos < queue.size(); ++pos) {
        Index x = queue[pos];
        for (std::size_t k = 0; k < count; ++k) {
          Index gx = G.product(x, gens[k]);
          Index hx = H.product(map[x], images[k]);
          if (map[gx] == kUnset) {
            if (used[hx]) {
              return false;
            }
            map[gx]  = hx;
            used[hx] = true;
            queue.push_back(gx);
          } else if (map[gx] != hx) {
            return false;
          }
        }
      }
      return true;
    };

    std::function<bool(std::size_t)> search = [&](std::size_t depth) {
      if (depth == gens.size()) {
        for (Index a = 0; a < G.order(); ++a) {
          for (Index b = 0; b < G.order(); ++b) {
            if (map[G.product(a, b)] != H.product(map[a], map[b])) {
              return true;
            }
          }
        }
        return visit(map);
      }
      std::size_t want = G.element_order(gens[depth]);
      for (Index y = 0; y < H.order(); ++y) {
        if (H.element_order(y) != want) {
          continue;
        }
        images[depth] = y;
        if (extend(depth + 1) && !search(depth + 1)) {
          return false;
        }
      }
      return true;
    };
    if (gens.empty()) {
      map.assign(1, H.identity());
      return visit(map);
    }
    return search(0);
  }

  namespace {
    class EquivalenceSearch {
     public:
      EquivalenceSearch(
          GroupAction const&                                  A,
          GroupAction const&                                  B,
          std::function<bool(ActionEquivalence const&)> const& visit)
          : _A(A), _B(B), _visit(visit) {
        // orbit sizes are an invariant of points
        _orbit_a = orbit_sizes(A);
        _orbit_b = orbit_sizes(B);
      }

      bool run() {
        std::size_t n = _A.degree();
        _pi.assign(n, kUnset);
        _used.assign(n, false);
        std::vector<std::vector<Index>> cand;
        for (std::size_t k = 0; k < _A.generators().size(); ++k) {
          std::vector<Index> all(_B.order());
          for (Index g = 0; g < _B.order(); ++g) {
            all[g] = g;
          }
          cand.push_back(std::move(all));
        }
        return search(0, cand);
      }

     private:
      static constexpr Point kUnset = static_cast<Point>(-1);

      static std::vector<std::size_t> orbit_sizes(GroupAction const& A) {
        std::vector<std::size_t> out(A.degree());
        for (Point p = 0; p < A.degree(); ++p) {
          out[p] = transitivity_class(A, std::span<Point const>(&p, 1)).size();
        }
        return out;
      }

      bool search(Point p, std::vector<std::vector<Index>> const& cand) {
        std::size_t n = _A.degree();
        if (p == n) {
          return leaf();
        }
        for (Point q = 0; q < n; ++q) {
          if (_used[q] || _orbit_a[p] != _orbit_b[q]) {
            continue;
          }
          _pi[p]   = q;
          _used[q] = true;
          auto next = cand;
          bool ok   = true;
          for (std::size_t k = 0; k < next.size() && ok; ++k) {
            auto const& g = _A.element(_A.generators()[k]);
            auto&       c = next[k];
            c.erase(std::remove_if(c.begin(), c.end(),
                                   [&](Index h) {
                                     return !consistent(g, _B.element(h), p);
                                   }),
                    c.end());
            ok = !c.empty();
          }
          if (ok && !search(p + 1, next)) {
            return false;
          }
          _pi[p]   = kUnset;
          _used[q] = false;
        }
        return true;
      }

      // constraints introduced by assigning point p
      bool consistent(Transformation const& g,
                      Transformation const& h,
                      Point                 p) const {
        if (_pi[g(p)] != kUnset && h(_pi[p]) != _pi[g(p)]) {
          return false;
        }
        for (Point q = 0; q < p; ++q) {
          if (g(q) == p && h(_pi[q]) != _pi[p]) {
            return false;
          }
        }
        return true;
      }

      bool leaf() {
        std::size_t       n = _A.degree();
        ActionEquivalence beta;
        beta.points = _pi;
        std::vector<Point> inv(n);
        for (Point x = 0; x < n; ++x) {
          inv[_pi[x]] = x;
        }
        for (Index a = 0; a < _A.order(); ++a) {
          std::vector<Point> im(n);
          for (Point y = 0; y < n; ++y) {
            im[y] = _pi[_A.element(a)(inv[y])];
          }
          auto k = _B.index_of(Transformation(std::move(im)));
          if (!k) {
            return true;
          }
          beta.group.push_back(*k);
        }
        return _visit(beta);
      }

      GroupAction const&                                  _A;
      GroupAction const&                                  _B;
      std::function<bool(ActionEquivalence const&)> const& _visit;
      std::vector<std::size_t>                            _orbit_a;
      std::vector<std::size_t>                            _orbit_b;
      std::vector<Point>                                  _pi;
      std::vector<bool>                                   _used;
    };
  }  // namespace

  bool for_each_action_equivalence(
      GroupAction const&                                  A,
      GroupAction const&                                  B,
      std::function<bool(ActionEquivalence const&)> const& visit,
      std::size_t                                         cap) {
    if (A.order() > cap || B.order() > cap) {
      throw CapExceeded("action_equivalence: group order above "
                        + std::to_string(cap));
    }
    if (A.degree() != B.degree() || A.order() != B.order()) {
      return true;
    }
    return EquivalenceSearch(A, B, visit).run();
  }

  std::optional<ActionEquivalence> action_equivalence(GroupAction const& A,
                                                      GroupAction const& B,
                                                      std::size_t        cap) {
    std::optional<ActionEquivalence> found;
    for_each_action_equivalence(
        A,
        B,
        [&found](ActionEquivalence const& beta) {
          found = beta;
          return false;
        },
        cap);
    return found;
  }

  bool is_action_equivalence(GroupAction const&       A,
                             GroupAction const&       B,
                             ActionEquivalence const& beta) {
    if (beta.points.size() != A.degree() || beta.group.size() != A.order()
        || A.degree() != B.degree() || A.order() != B.order()) {
      return false;
    }
    std::vector<bool> hit_p(B.degree(), false), hit_g(B.order(), false);
    for (Point p : beta.points) {
      if (p >= B.degree() || hit_p[p]) {
        return false;
      }
      hit_p[p] = true;
    }
    for (Index g : beta.group) {
      if (g >= B.order() || hit_g[g]) {
        return false;
      }
      hit_g[g] = true;
    }
    for (Index g = 0; g < A.order(); ++g) {
      for (Point x = 0; x < A.degree(); ++x) {
        if (beta.points[A.element(g)(x)]
            != B.element(beta.group[g])(beta.points[x])) {
          return false;
        }
      }
      for (Index h = 0; h < A.order(); ++h) {
        if (beta.group[A.product(g, h)]
            != B.product(beta.group[g], beta.group[h])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace primrep
