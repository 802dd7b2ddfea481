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

// Independent brute-force counterparts used to cross-check the library.

#ifndef PRIMREP_TESTS_ORACLES_HPP_
#define PRIMREP_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "primrep/error.hpp"
#include "primrep/partition.hpp"
#include "primrep/ramified.hpp"
#include "primrep/rees.hpp"
#include "primrep/representation.hpp"

namespace primrep::oracles {

  // Fixpoint of "apply every map to every related pair, then close".
  inline Partition naive_congruence(std::vector<Transformation> const& maps,
                                    std::size_t                        n,
                                    std::vector<PointPair> const&      pairs) {
    auto current = generate_equivalence(pairs, n);
    while (true) {
      std::vector<PointPair> more;
      for (Point a = 0; a < n; ++a) {
        for (Point b = 0; b < n; ++b) {
          if (current.same_block(a, b)) {
            more.emplace_back(a, b);
            for (auto const& s : maps) {
              more.emplace_back(s(a), s(b));
            }
          }
        }
      }
      auto next = generate_equivalence(more, n);
      if (next == current) {
        return current;
      }
      current = next;
    }
  }

  // Every compatible equivalence is trivial, by listing all partitions of
  // the carrier (restricted growth strings).
  inline bool primitive_by_partitions(std::vector<Transformation> const& maps,
                                      std::size_t                        n) {
    if (n <= 2) {
      return true;
    }
    std::vector<Index> a(n, 0), mx(n, 0);
    while (true) {
      auto p = Partition::from_labels(a);
      if (!p.is_diagonal() && !p.is_universal() && p.is_compatible(maps)) {
        return false;
      }
      std::size_t k = n - 1;
      while (k > 0 && a[k] == mx[k - 1] + 1) {
        --k;
      }
      if (k == 0) {
        return true;
      }
      ++a[k];
      mx[k] = std::max(mx[k - 1], a[k]);
      for (std::size_t j = k + 1; j < n; ++j) {
        a[j]  = 0;
        mx[j] = mx[k];
      }
    }
  }

  // All images of y under the elements.
  inline std::set<Point> one_step(Representation const& rep, Point y) {
    std::set<Point> out;
    for (auto const& t : rep.maps()) {
      out.insert(t(y));
    }
    return out;
  }

  // The first `count` elements only, products inferred.
  inline Representation restrict_elements(Representation const& rep,
                                          std::size_t           count) {
    std::vector<Transformation> maps(rep.maps().begin(),
                                     rep.maps().begin() + count);
    return Representation(rep.carrier(), std::move(maps));
  }

  inline bool transitive_by_reachability(Representation const& rep) {
    for (Point y = 0; y < rep.carrier(); ++y) {
      if (one_step(rep, y).size() != rep.carrier()) {
        return false;
      }
    }
    return true;
  }

  // Y = S(y) ∪ {y} for some y.
  inline std::optional<Point> cyclic_generator(Representation const& rep) {
    for (Point y = 0; y < rep.carrier(); ++y) {
      auto s = one_step(rep, y);
      s.insert(y);
      if (s.size() == rep.carrier()) {
        return y;
      }
    }
    return std::nullopt;
  }

  inline bool generates_from(Representation const& rep, Point y) {
    auto s = one_step(rep, y);
    s.insert(y);
    return s.size() == rep.carrier();
  }

  inline Transformation random_transformation(std::mt19937_64& rng,
                                              std::size_t      n) {
    std::uniform_int_distribution<Point> d(0, static_cast<Point>(n - 1));
    std::vector<Point>                   im(n);
    for (auto& x : im) {
      x = d(rng);
    }
    return Transformation(std::move(im));
  }

  // Full matrix product over G^0: (XY)(a, b) = sum_k X(a, k) Y(k, b), with
  // at most one non-zero summand allowed.
  using Full = std::vector<std::vector<std::optional<Index>>>;

  inline Full full_product(GroupAction const& G, Full const& X, Full const& Y) {
    Full out(X.size(), std::vector<std::optional<Index>>(Y.front().size()));
    for (std::size_t a = 0; a < X.size(); ++a) {
      for (std::size_t b = 0; b < Y.front().size(); ++b) {
        int hits = 0;
        for (std::size_t k = 0; k < Y.size(); ++k) {
          if (X[a][k] && Y[k][b]) {
            out[a][b] = G.product(*X[a][k], *Y[k][b]);
            ++hits;
          }
        }
        if (hits > 1) {
          throw Error("full_product: non-monomial sum");
        }
      }
    }
    return out;
  }

  inline Full to_full(PermutationalMatrix const& M) {
    Full out(M.size(), std::vector<std::optional<Index>>(M.size()));
    for (std::size_t k = 0; k < M.size(); ++k) {
      out[k][M.col[k]] = M.value[k];
    }
    return out;
  }

  inline Full to_full(SandwichMatrix const& Q) {
    Full out(Q.rows, std::vector<std::optional<Index>>(Q.cols));
    for (std::size_t l = 0; l < Q.rows; ++l) {
      for (std::size_t i = 0; i < Q.cols; ++i) {
        out[l][i] = Q.at(l, i);
      }
    }
    return out;
  }

  // Every m x n matrix over G^0 (regular ones only when asked).
  inline std::vector<SandwichMatrix> all_sandwich(GroupAction const& G,
                                                  std::size_t        m,
                                                  std::size_t        n,
                                                  bool regular_only) {
    std::vector<SandwichMatrix> out;
    std::size_t const           base = G.order() + 1;
    std::size_t                 total = 1;
    for (std::size_t k = 0; k < m * n; ++k) {
      total *= base;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<std::optional<Index>> e;
      std::size_t                       c = code;
      for (std::size_t k = 0; k < m * n; ++k, c /= base) {
        std::size_t d = c % base;
        e.push_back(d == 0 ? std::nullopt
                           : std::optional<Index>(static_cast<Index>(d - 1)));
      }
      SandwichMatrix Q(G, m, n, e);
      if (!regular_only || Q.is_regular()) {
        out.push_back(std::move(Q));
      }
    }
    return out;
  }

  // Every m x n c-ramified matrix over A (regular ones only when asked).
  inline std::vector<RamifiedMatrix> all_c_ramified(GroupAction const& A,
                                                    std::size_t        m,
                                                    std::size_t        n,
                                                    bool regular_only) {
    std::vector<RamifiedMatrix> out;
    std::size_t const           base = A.order() + A.degree();
    std::size_t                 total = 1;
    for (std::size_t k = 0; k < m * n; ++k) {
      total *= base;
    }
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<RamifiedEntry> e;
      std::size_t                c = code;
      for (std::size_t k = 0; k < m * n; ++k, c /= base) {
        std::size_t d = c % base;
        e.push_back(d < A.order()
                        ? RamifiedEntry::group(static_cast<Index>(d))
                        : RamifiedEntry::constant(
                              static_cast<Point>(d - A.order())));
      }
      RamifiedMatrix P(A, m, n, std::move(e));
      if (!regular_only || P.is_regular()) {
        out.push_back(std::move(P));
      }
    }
    return out;
  }

  inline RamifiedMatrix random_c_ramified(std::mt19937_64&   rng,
                                          GroupAction const& A,
                                          std::size_t        m,
                                          std::size_t        n) {
    std::uniform_int_distribution<std::size_t> d(0,
                                                 A.order() + A.degree() - 1);
    while (true) {
      std::vector<RamifiedEntry> e;
      for (std::size_t k = 0; k < m * n; ++k) {
        std::size_t v = d(rng);
        e.push_back(v < A.order()
                        ? RamifiedEntry::group(static_cast<Index>(v))
                        : RamifiedEntry::constant(
                              static_cast<Point>(v - A.order())));
      }
      RamifiedMatrix P(A, m, n, std::move(e));
      if (P.is_regular()) {
        return P;
      }
    }
  }

  // The triple binding is injective.
  inline bool triples_injective(Representation const& rep,
                                std::size_t           triples) {
    std::set<Transformation> seen;
    for (Index k = 0; k < triples; ++k) {
      if (!seen.insert(rep.map(k)).second) {
        return false;
      }
    }
    return true;
  }

}  // namespace primrep::oracles

#endif  // PRIMREP_TESTS_ORACLES_HPP_
