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

#include "primrep/semigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <string>

#include "detail/digraph.hpp"
#include "primrep/error.hpp"

namespace primrep {

  ////////////////////////////////////////////////////////////////////////
  // FiniteSemigroup
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup
  FiniteSemigroup::from_table(std::vector<std::vector<Index>> const& table) {
    FiniteSemigroup S;
    S._size = table.size();
    S._table.reserve(S._size * S._size);
    for (auto const& row : table) {
      if (row.size() != S._size) {
        throw Error("semigroup table is not square");
      }
      for (Index v : row) {
        if (v >= S._size) {
          throw Error("semigroup table entry " + std::to_string(v)
                      + " out of range");
        }
        S._table.push_back(v);
      }
    }
    S._generators.resize(S._size);
    std::iota(S._generators.begin(), S._generators.end(), Index(0));
    S._right = S._table;
    S._left.resize(S._table.size());
    for (std::size_t a = 0; a < S._size; ++a) {
      for (std::size_t k = 0; k < S._size; ++k) {
        S._left[a * S._size + k] = S._table[k * S._size + a];
      }
    }
    S.init_special_elements();
    return S;
  }

  FiniteSemigroup
  FiniteSemigroup::from_transformations(std::vector<Transformation> elements) {
    FiniteSemigroup S;
    S._size = elements.size();
    for (std::size_t a = 0; a < elements.size(); ++a) {
      if (elements[a].degree() != elements.front().degree()) {
        throw Error("transformations of different degrees");
      }
      if (!S._lookup.emplace(elements[a], static_cast<Index>(a)).second) {
        throw Error("repeated transformation " + elements[a].to_string());
      }
    }
    S._carrier = std::move(elements);
    S._generators.resize(S._size);
    std::iota(S._generators.begin(), S._generators.end(), Index(0));
    S._table.resize(S._size * S._size);
    for (std::size_t a = 0; a < S._size; ++a) {
      for (std::size_t b = 0; b < S._size; ++b) {
        auto it = S._lookup.find(compose(S._carrier[a], S._carrier[b]));
        if (it == S._lookup.end()) {
          throw Error("transformation set is not closed under composition");
        }
        S._table[a * S._size + b] = it->second;
      }
    }
    S._right = S._table;
    S._left.resize(S._table.size());
    for (std::size_t a = 0; a < S._size; ++a) {
      for (std::size_t k = 0; k < S._size; ++k) {
        S._left[a * S._size + k] = S._table[k * S._size + a];
      }
    }
    S.init_special_elements();
    return S;
  }

  FiniteSemigroup close(std::span<Transformation const> generators,
                        std::size_t                     cap) {
    if (generators.empty()) {
      throw Error("close: empty generator list");
    }
    std::size_t const n = generators.front().degree();
    FiniteSemigroup   S;
    for (auto const& g : generators) {
      if (g.degree() != n) {
        throw Error("close: generators of different degrees");
      }
      auto [it, inserted]
          = S._lookup.emplace(g, static_cast<Index>(S._carrier.size()));
      if (inserted) {
        S._carrier.push_back(g);
      }
    }
    // generators are kept once each, in order
    S._generators.resize(S._carrier.size());
    std::iota(S._generators.begin(), S._generators.end(), Index(0));
    std::size_t const k = S._generators.size();

    for (std::size_t a = 0; a < S._carrier.size(); ++a) {
      for (std::size_t j = 0; j < k; ++j) {
        auto x = compose(S._carrier[a], S._carrier[S._generators[j]]);
        auto [it, inserted]
            = S._lookup.emplace(x, static_cast<Index>(S._carrier.size()));
        if (inserted) {
          if (S._carrier.size() >= cap) {
            throw CapExceeded("closure exceeds " + std::to_string(cap)
                              + " elements");
          }
          S._carrier.push_back(std::move(x));
        }
        S._right.push_back(it->second);
      }
    }
    S._size = S._carrier.size();
    S._left.resize(S._size * k);
    for (std::size_t a = 0; a < S._size; ++a) {
      for (std::size_t j = 0; j < k; ++j) {
        S._left[a * k + j] = S._lookup.at(
            compose(S._carrier[S._generators[j]], S._carrier[a]));
      }
    }
    S.init_table_if_small();
    S.init_special_elements();
    return S;
  }

  void FiniteSemigroup::init_table_if_small() {
    if (_size > kTableLimit) {
      return;
    }
    _table.resize(_size * _size);
    for (std::size_t a = 0; a < _size; ++a) {
      for (std::size_t b = 0; b < _size; ++b) {
        _table[a * _size + b] = _lookup.at(compose(_carrier[a], _carrier[b]));
      }
    }
  }

  void FiniteSemigroup::init_special_elements() {
    std::size_t const k = _generators.size();
    for (std::size_t a = 0; a < _size; ++a) {
      bool is_zero = true;
      bool is_one  = true;
      for (std::size_t j = 0; j < k; ++j) {
        Index r = _right[a * k + j];
        Index l = _left[a * k + j];
        is_zero = is_zero && r == a && l == a;
        is_one  = is_one && r == _generators[j] && l == _generators[j];
      }
      if (is_zero && !_zero) {
        _zero = static_cast<Index>(a);
      }
      if (is_one && !_identity) {
        _identity = static_cast<Index>(a);
      }
    }
  }

  Index FiniteSemigroup::product(Index a, Index b) const {
    if (!_table.empty()) {
      return _table[a * _size + b];
    }
    return _lookup.at(compose(_carrier[a], _carrier[b]));
  }

  std::optional<Index>
  FiniteSemigroup::index_of(Transformation const& t) const {
    auto it = _lookup.find(t);
    if (it == _lookup.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::vector<Index> FiniteSemigroup::idempotents() const {
    std::vector<Index> out;
    for (Index a = 0; a < _size; ++a) {
      if (is_idempotent(a)) {
        out.push_back(a);
      }
    }
    return out;
  }

  bool FiniteSemigroup::is_associative() const {
    for (Index a = 0; a < _size; ++a) {
      for (Index b = 0; b < _size; ++b) {
        Index ab = product(a, b);
        for (Index c = 0; c < _size; ++c) {
          if (product(ab, c) != product(a, product(b, c))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  namespace {
    template <typename Step>
    std::vector<Index> reach_from(std::size_t n,
                                  std::size_t k,
                                  Index       a,
                                  Step        step) {
      std::vector<bool>  seen(n, false);
      std::vector<Index> out{a};
      seen[a] = true;
      for (std::size_t pos = 0; pos < out.size(); ++pos) {
        Index x = out[pos];
        for (std::size_t j = 0; j < k; ++j) {
          Index y = step(x, j);
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }  // namespace

  std::vector<Index> FiniteSemigroup::right_ideal(Index a) const {
    return reach_from(_size, _generators.size(), a, [this](Index x, auto j) {
      return right(x, j);
    });
  }

  std::vector<Index> FiniteSemigroup::left_ideal(Index a) const {
    return reach_from(_size, _generators.size(), a, [this](Index x, auto j) {
      return left(x, j);
    });
  }

  std::vector<Index> FiniteSemigroup::two_sided_ideal(Index a) const {
    std::size_t k = _generators.size();
    return reach_from(_size, 2 * k, a, [this, k](Index x, std::size_t j) {
      return j < k ? right(x, j) : left(x, j - k);
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Green's relations
  ////////////////////////////////////////////////////////////////////////

  GreenData green(FiniteSemigroup const& S) {
    std::size_t const n = S.size();
    std::size_t const k = S.generators().size();
    auto right = [&S](Index x, std::size_t j) { return S.right(x, j); };
    auto left  = [&S](Index x, std::size_t j) { return S.left(x, j); };
    auto both  = [&S, k](Index x, std::size_t j) {
      return j < k ? S.right(x, j) : S.left(x, j - k);
    };

    GreenData g;
    g.r_classes = Partition::from_labels(detail::scc_labels(n, k, right));
    g.l_classes = Partition::from_labels(detail::scc_labels(n, k, left));
    g.h_classes = g.r_classes.meet(g.l_classes);

    auto jl     = detail::scc_labels(n, 2 * k, both);
    g.j_classes = Partition::from_labels(jl);
    auto reach  = detail::component_reachability(n, 2 * k, both, jl);

    // translate SCC labels to canonical class ids
    std::size_t        c = g.j_classes.num_blocks();
    std::vector<Index> label_of(c, 0);
    for (std::size_t a = 0; a < n; ++a) {
      label_of[g.j_classes.block_of(static_cast<Point>(a))] = jl[a];
    }
    g.j_order.assign(c, std::vector<bool>(c, false));
    for (std::size_t a = 0; a < c; ++a) {
      for (std::size_t b = 0; b < c; ++b) {
        // a <= b when b reaches a
        g.j_order[a][b] = reach[label_of[b]][label_of[a]];
      }
    }
    return g;
  }

  std::vector<Index> jclass_elements(GreenData const& g, Index j_class) {
    std::vector<Index> out;
    for (std::size_t a = 0; a < g.j_classes.degree(); ++a) {
      if (g.j_classes.block_of(static_cast<Point>(a)) == j_class) {
        out.push_back(static_cast<Index>(a));
      }
    }
    return out;
  }

  std::vector<RegularJClass> regular_jclasses(FiniteSemigroup const& S,
                                              GreenData const&       g) {
    std::size_t const  c = g.num_j_classes();
    std::vector<Index> witness(c, static_cast<Index>(-1));
    for (Index a = 0; a < S.size(); ++a) {
      Index j = g.j_classes.block_of(a);
      if (witness[j] == static_cast<Index>(-1) && S.is_idempotent(a)) {
        witness[j] = a;
      }
    }
    if (S.has_table()) {
      for (Index a = 0; a < S.size(); ++a) {
        bool regular = false;
        for (Index b = 0; b < S.size() && !regular; ++b) {
          regular = S.product(S.product(a, b), a) == a;
        }
        bool flagged = witness[g.j_classes.block_of(a)]
                       != static_cast<Index>(-1);
        if (regular != flagged) {
          throw Error("regularity of element " + std::to_string(a)
                      + " disagrees with its J-class");
        }
      }
    }
    std::vector<RegularJClass> out;
    for (Index j = 0; j < c; ++j) {
      if (witness[j] != static_cast<Index>(-1)) {
        out.push_back({j, witness[j]});
      }
    }
    return out;
  }

  FiniteSemigroup principal_factor(FiniteSemigroup const& S,
                                   GreenData const&       g,
                                   Index                  j_class) {
    if (j_class >= g.num_j_classes()) {
      throw Error("principal_factor: no J-class " + std::to_string(j_class));
    }
    auto                elems = jclass_elements(g, j_class);
    Index const         zero  = static_cast<Index>(elems.size());
    std::map<Index, Index> pos;
    for (Index k = 0; k < elems.size(); ++k) {
      pos[elems[k]] = k;
    }
    std::vector<std::vector<Index>> table(elems.size() + 1,
                                          std::vector<Index>(zero + 1, zero));
    bool regular = false;
    for (Index a = 0; a < elems.size(); ++a) {
      for (Index b = 0; b < elems.size(); ++b) {
        auto it = pos.find(S.product(elems[a], elems[b]));
        if (it != pos.end()) {
          table[a][b] = it->second;
          regular     = regular || (a == b && it->second == a);
        }
      }
    }
    auto F = FiniteSemigroup::from_table(table);
    if (regular && !is_completely_0_simple(F)) {
      throw Error("principal factor of a regular J-class is not completely "
                  "0-simple");
    }
    return F;
  }

  bool is_completely_0_simple(FiniteSemigroup const& S) {
    auto z = S.zero();
    if (!z || S.size() < 2) {
      return false;
    }
    auto  g          = green(S);
    Index zero_class = g.j_classes.block_of(*z);
    std::optional<Index> top;
    for (Index a = 0; a < S.size(); ++a) {
      if (a == *z) {
        continue;
      }
      Index j = g.j_classes.block_of(a);
      if (top && *top != j) {
        // two non-zero J-classes give a proper ideal other than {0}
        return false;
      }
      top = j;
    }
    if (!g.j_leq(zero_class, *top)) {
      return false;
    }
    for (Index a = 0; a < S.size(); ++a) {
      if (a != *z && S.is_idempotent(a)) {
        return true;
      }
    }
    return false;
  }

  ////////////////////////////////////////////////////////////////////////
  // Isomorphism search
  ////////////////////////////////////////////////////////////////////////

  bool is_isomorphism(FiniteSemigroup const& S,
                      FiniteSemigroup const& T,
                      std::span<Index const> phi) {
    if (S.size() != T.size() || phi.size() != S.size()) {
      return false;
    }
    std::vector<bool> hit(T.size(), false);
    for (Index v : phi) {
      if (v >= T.size() || hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        if (phi[S.product(a, b)] != T.product(phi[a], phi[b])) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    using Profile = std::vector<std::size_t>;

    std::vector<Profile> profiles(FiniteSemigroup const& S) {
      std::size_t const n = S.size();
      auto const        g = green(S);
      std::vector<std::size_t> r_size(g.r_classes.num_blocks(), 0),
          l_size(g.l_classes.num_blocks(), 0),
          h_size(g.h_classes.num_blocks(), 0),
          j_size(g.j_classes.num_blocks(), 0);
      for (Index a = 0; a < n; ++a) {
        ++r_size[g.r_classes.block_of(a)];
        ++l_size[g.l_classes.block_of(a)];
        ++h_size[g.h_classes.block_of(a)];
        ++j_size[g.j_classes.block_of(a)];
      }
      std::vector<std::size_t> below(g.num_j_classes(), 0);
      for (std::size_t a = 0; a < below.size(); ++a) {
        for (std::size_t b = 0; b < below.size(); ++b) {
          if (g.j_leq(b, a)) {
            below[a] += j_size[b];
          }
        }
      }
      std::vector<Profile> out(n);
      for (Index a = 0; a < n; ++a) {
        // index and period of the monogenic subsemigroup
        std::vector<Index> powers{a};
        std::size_t        period = 0, index = 0;
        while (true) {
          Index next = S.product(powers.back(), a);
          auto  it   = std::find(powers.begin(), powers.end(), next);
          if (it != powers.end()) {
            index  = static_cast<std::size_t>(it - powers.begin());
            period = powers.size() - index;
            break;
          }
          powers.push_back(next);
        }
        std::size_t fix_left = 0, fix_right = 0;
        for (Index b = 0; b < n; ++b) {
          fix_left += S.product(a, b) == b;
          fix_right += S.product(b, a) == b;
        }
        out[a] = {S.is_idempotent(a),
                  index,
                  period,
                  r_size[g.r_classes.block_of(a)],
                  l_size[g.l_classes.block_of(a)],
                  h_size[g.h_classes.block_of(a)],
                  j_size[g.j_classes.block_of(a)],
                  below[g.j_classes.block_of(a)],
                  fix_left,
                  fix_right};
      }
      return out;
    }

    // subsemigroup generated by gens, by right multiplication
    std::vector<Index> generated(FiniteSemigroup const&    S,
                                 std::vector<Index> const& gens) {
      std::vector<bool>  seen(S.size(), false);
      std::vector<Index> out;
      for (Index g : gens) {
        if (!seen[g]) {
          seen[g] = true;
          out.push_back(g);
        }
      }
      for (std::size_t pos = 0; pos < out.size(); ++pos) {
        for (Index g : gens) {
          Index y = S.product(out[pos], g);
          if (!seen[y]) {
            seen[y] = true;
            out.push_back(y);
          }
        }
      }
      return out;
    }

    class IsoSearch {
     public:
      IsoSearch(FiniteSemigroup const& S, FiniteSemigroup const& T)
          : _S(S), _T(T), _ps(profiles(S)), _pt(profiles(T)) {}

      std::optional<std::vector<Index>> run() {
        auto a = _ps, b = _pt;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) {
          return std::nullopt;
        }
        choose_generators();
        _images.assign(_gens.size(), 0);
        if (search(0)) {
          return _map;
        }
        return std::nullopt;
      }

     private:
      void choose_generators() {
        std::vector<Index> order(_S.size());
        std::iota(order.begin(), order.end(), Index(0));
        // elements high in the J-order cannot be products of lower ones
        std::stable_sort(order.begin(), order.end(), [this](Index x, Index y) {
          return _ps[x][7] > _ps[y][7];
        });
        std::vector<bool> covered(_S.size(), false);
        for (Index a : order) {
          if (covered[a]) {
            continue;
          }
          _gens.push_back(a);
          for (Index x : generated(_S, _gens)) {
            covered[x] = true;
          }
        }
      }

      // extends the map from the first `count` generator images
      bool extend(std::size_t count) {
        constexpr Index kUnset = static_cast<Index>(-1);
        _map.assign(_S.size(), kUnset);
        std::vector<Index> used(_T.size(), kUnset);
        std::vector<Index> queue;
        auto               assign = [&](Index x, Index y) {
          if (_map[x] != kUnset) {
            return _map[x] == y;
          }
          if (used[y] != kUnset || _ps[x] != _pt[y]) {
            return false;
          }
          _map[x] = y;
          used[y] = x;
          queue.push_back(x);
          return true;
        };
        for (std::size_t k = 0; k < count; ++k) {
          if (!assign(_gens[k], _images[k])) {
            return false;
          }
        }
        for (std::size_t pos = 0; pos < queue.size(); ++pos) {
          Index x = queue[pos];
          for (std::size_t k = 0; k < count; ++k) {
            if (!assign(_S.product(x, _gens[k]),
                        _T.product(_map[x], _images[k]))) {
              return false;
            }
          }
        }
        return true;
      }

      bool search(std::size_t depth) {
        if (depth == _gens.size()) {
          return is_isomorphism(_S, _T, _map);
        }
        for (Index y = 0; y < _T.size(); ++y) {
          if (_pt[y] != _ps[_gens[depth]]) {
            continue;
          }
          _images[depth] = y;
          if (extend(depth + 1) && search(depth + 1)) {
            return true;
          }
        }
        return false;
      }

      FiniteSemigroup const& _S;
      FiniteSemigroup const& _T;
      std::vector<Profile>   _ps;
      std::vector<Profile>   _pt;
      std::vector<Index>     _gens;
      std::vector<Index>     _images;
      std::vector<Index>     _map;
    };
  }  // namespace

  std::optional<std::vector<Index>> brute_isomorphic(FiniteSemigroup const& S,
                                                     FiniteSemigroup const& T) {
    if (S.size() != T.size()) {
      return std::nullopt;
    }
    if (S.size() == 0) {
      return std::vector<Index>{};
    }
    return IsoSearch(S, T).run();
  }

}  // namespace primrep
