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

#include "primrep/rees.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "detail/gauge.hpp"
#include "primrep/error.hpp"

namespace primrep {

  SandwichMatrix::SandwichMatrix(GroupAction                       g,
                                 std::size_t                       m,
                                 std::size_t                       n,
                                 std::vector<std::optional<Index>> e)
      : group(std::move(g)), rows(m), cols(n), entries(std::move(e)) {
    if (entries.size() != m * n) {
      throw Error("sandwich matrix: expected " + std::to_string(m * n)
                  + " entries, found " + std::to_string(entries.size()));
    }
    for (auto const& x : entries) {
      if (x && *x >= group.order()) {
        throw Error("sandwich matrix: group element " + std::to_string(*x)
                    + " out of range");
      }
    }
  }

  bool SandwichMatrix::is_regular() const {
    for (std::size_t l = 0; l < rows; ++l) {
      bool found = false;
      for (std::size_t i = 0; i < cols && !found; ++i) {
        found = at(l, i).has_value();
      }
      if (!found) {
        return false;
      }
    }
    for (std::size_t i = 0; i < cols; ++i) {
      bool found = false;
      for (std::size_t l = 0; l < rows && !found; ++l) {
        found = at(l, i).has_value();
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  std::size_t SandwichMatrix::num_zeros() const {
    return std::count(entries.begin(), entries.end(), std::nullopt);
  }

  ReesElement rees_product(SandwichMatrix const& Q,
                           ReesElement const&    a,
                           ReesElement const&    b) {
    if (!a || !b) {
      return std::nullopt;
    }
    for (auto const* t : {&*a, &*b}) {
      if (t->r >= Q.cols || t->lambda >= Q.rows || t->g >= Q.group.order()) {
        throw Error("rees_product: triple index out of range");
      }
    }
    auto q = Q.at(a->lambda, b->r);
    if (!q) {
      return std::nullopt;
    }
    auto const& G = Q.group;
    return ReesTriple{a->r, G.product(G.product(a->g, *q), b->g), b->lambda};
  }

  std::size_t rees_size(SandwichMatrix const& Q) {
    return Q.cols * Q.group.order() * Q.rows + 1;
  }

  Index rees_index(SandwichMatrix const& Q, ReesElement const& a) {
    if (!a) {
      return static_cast<Index>(rees_size(Q) - 1);
    }
    return static_cast<Index>((a->r * Q.group.order() + a->g) * Q.rows
                              + a->lambda);
  }

  ReesElement rees_element(SandwichMatrix const& Q, Index k) {
    if (k + 1 >= rees_size(Q)) {
      if (k + 1 == rees_size(Q)) {
        return std::nullopt;
      }
      throw Error("rees_element: index out of range");
    }
    ReesTriple t;
    t.lambda = k % Q.rows;
    k /= Q.rows;
    t.g = k % Q.group.order();
    t.r = k / Q.group.order();
    return t;
  }

  FiniteSemigroup build_rees(SandwichMatrix const& Q, bool require_regular) {
    bool regular = Q.is_regular();
    if (require_regular && !regular) {
      throw PreconditionError("build_rees: sandwich matrix is not regular");
    }
    std::size_t const               N = rees_size(Q);
    std::vector<std::vector<Index>> table(N, std::vector<Index>(N));
    for (Index a = 0; a < N; ++a) {
      auto x = rees_element(Q, a);
      for (Index b = 0; b < N; ++b) {
        table[a][b] = rees_index(Q, rees_product(Q, x, rees_element(Q, b)));
      }
    }
    auto S = FiniteSemigroup::from_table(table);
    if (regular && !is_completely_0_simple(S)) {
      throw Error("build_rees: result is not completely 0-simple");
    }
    return S;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rees generating sets
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Numbers the classes of p met by the non-zero elements, in order of
    // first occurrence.
    std::vector<int> class_numbers(FiniteSemigroup const& S,
                                   Partition const&       p,
                                   std::vector<Index>&    firsts) {
      std::vector<int>     out(S.size(), -1);
      std::map<Index, int> number;
      for (Index x = 0; x < S.size(); ++x) {
        if (x == *S.zero()) {
          continue;
        }
        auto [it, fresh] = number.try_emplace(p.block_of(x),
                                              static_cast<int>(number.size()));
        if (fresh) {
          firsts.push_back(x);
        }
        out[x] = it->second;
      }
      return out;
    }

    std::vector<Index> pick_reps(FiniteSemigroup const&  S,
                                 Index                   e,
                                 Partition const&        same,
                                 std::vector<int> const& number,
                                 std::size_t             count) {
      std::vector<Index> reps(count, static_cast<Index>(-1));
      for (Index x = 0; x < S.size(); ++x) {
        if (number[x] < 0 || !same.same_block(x, e)) {
          continue;
        }
        auto& slot = reps[number[x]];
        if (slot == static_cast<Index>(-1) || x == e) {
          slot = (slot == e) ? e : x;
        }
      }
      return reps;
    }

    // Renumbers classes by the order of the supplied representatives.
    void adopt(std::vector<Index> const& reps,
               std::vector<int>&         number,
               Partition const&          same,
               Index                     e,
               char const*               what) {
      std::size_t const count
          = static_cast<std::size_t>(*std::max_element(number.begin(),
                                                       number.end()))
            + 1;
      if (reps.size() != count) {
        throw PreconditionError(std::string("rees_generating_set: expected ")
                                + std::to_string(count) + " " + what);
      }
      std::vector<int> renumber(count, -1);
      for (std::size_t k = 0; k < reps.size(); ++k) {
        Index x = reps[k];
        if (x >= number.size() || number[x] < 0 || !same.same_block(x, e)
            || renumber[number[x]] != -1) {
          throw PreconditionError(std::string("rees_generating_set: bad ")
                                  + what + " representative "
                                  + std::to_string(x));
        }
        renumber[number[x]] = static_cast<int>(k);
      }
      for (auto& v : number) {
        if (v >= 0) {
          v = renumber[v];
        }
      }
    }
  }  // namespace

  ReesGeneratingSet
  rees_generating_set(FiniteSemigroup const&                   S,
                      Index                                    e,
                      std::optional<std::vector<Index>> const& f,
                      std::optional<std::vector<Index>> const& g) {
    if (!is_completely_0_simple(S)) {
      throw PreconditionError(
          "rees_generating_set: semigroup is not completely 0-simple");
    }
    if (e >= S.size() || e == *S.zero() || !S.is_idempotent(e)) {
      throw PreconditionError("rees_generating_set: "
                              + std::to_string(e)
                              + " is not a non-zero idempotent");
    }
    auto               gr = green(S);
    ReesGeneratingSet  out;
    std::vector<Index> rfirst, lfirst;
    out.e         = e;
    out.column_of = class_numbers(S, gr.r_classes, rfirst);
    out.row_of    = class_numbers(S, gr.l_classes, lfirst);
    if (f) {
      adopt(*f, out.column_of, gr.l_classes, e, "R-class");
      out.f = *f;
    } else {
      out.f = pick_reps(S, e, gr.l_classes, out.column_of, rfirst.size());
    }
    if (g) {
      adopt(*g, out.row_of, gr.r_classes, e, "L-class");
      out.g = *g;
    } else {
      out.g = pick_reps(S, e, gr.r_classes, out.row_of, lfirst.size());
    }
    for (Index x = 0; x < S.size(); ++x) {
      if (x != *S.zero() && gr.h_classes.same_block(x, e)) {
        out.h.push_back(x);
      }
    }
    return out;
  }

  namespace {
    struct Anchor {
      Index lambda;
      Index s;
      Index q;
    };

    Anchor find_anchor(SandwichMatrix const& Q) {
      for (Index l = 0; l < Q.rows; ++l) {
        for (Index i = 0; i < Q.cols; ++i) {
          if (auto q = Q.at(l, i)) {
            return {l, i, *q};
          }
        }
      }
      throw PreconditionError("sandwich matrix has no non-zero entry");
    }
  }  // namespace

  ReesGeneratingSet anchored_generating_set(SandwichMatrix const&  Q,
                                            FiniteSemigroup const& S) {
    auto const& G  = Q.group;
    auto        a  = find_anchor(Q);
    Index       qi = G.inverse(a.q);
    Index       e  = rees_index(Q, ReesTriple{a.s, qi, a.lambda});
    std::vector<Index> f, g;
    for (Index r = 0; r < Q.cols; ++r) {
      f.push_back(rees_index(Q, ReesTriple{r, qi, a.lambda}));
    }
    for (Index l = 0; l < Q.rows; ++l) {
      g.push_back(rees_index(Q, ReesTriple{a.s, G.identity(), l}));
    }
    return rees_generating_set(S, e, f, g);
  }

  std::vector<Index> anchored_group_map(SandwichMatrix const&    Q,
                                        ReesGeneratingSet const& rgs) {
    auto const&        G  = Q.group;
    auto               a  = find_anchor(Q);
    Index              qi = G.inverse(a.q);
    std::vector<Index> out;
    for (Index x = 0; x < G.order(); ++x) {
      Index k = rees_index(Q, ReesTriple{a.s, G.product(x, qi), a.lambda});
      auto  it = std::lower_bound(rgs.h.begin(), rgs.h.end(), k);
      if (it == rgs.h.end() || *it != k) {
        throw Error("anchored_group_map: element outside H");
      }
      out.push_back(static_cast<Index>(it - rgs.h.begin()));
    }
    return out;
  }

  ReesTriple factorize(FiniteSemigroup const&   S,
                       ReesGeneratingSet const& rgs,
                       Index                    j) {
    if (j >= S.size() || rgs.column_of[j] < 0) {
      throw PreconditionError("factorize: " + std::to_string(j)
                              + " is not in the non-zero J-class");
    }
    ReesTriple  out{static_cast<Index>(rgs.column_of[j]), 0,
                   static_cast<Index>(rgs.row_of[j])};
    std::size_t hits = 0;
    for (Index k = 0; k < rgs.h.size(); ++k) {
      if (S.product(S.product(rgs.f[out.r], rgs.h[k]), rgs.g[out.lambda])
          == j) {
        out.g = k;
        ++hits;
      }
    }
    if (hits != 1) {
      throw Error("factorize: " + std::to_string(hits)
                  + " factorizations of " + std::to_string(j));
    }
    return out;
  }

  ReesExtraction extract_rees(FiniteSemigroup const&                  S,
                              std::optional<ReesGeneratingSet> const& rgs) {
    ReesExtraction out;
    if (rgs) {
      out.rgs = *rgs;
    } else {
      if (!S.zero()) {
        throw PreconditionError("extract_rees: semigroup has no zero");
      }
      std::optional<Index> e;
      for (Index x : S.idempotents()) {
        if (x != *S.zero()) {
          e = x;
          break;
        }
      }
      if (!e) {
        throw PreconditionError("extract_rees: no non-zero idempotent");
      }
      out.rgs = rees_generating_set(S, *e);
    }
    auto const&           R = out.rgs;
    std::map<Index, Index> pos;
    for (Index k = 0; k < R.h.size(); ++k) {
      pos[R.h[k]] = k;
    }
    std::vector<std::vector<Index>> table(R.h.size(),
                                          std::vector<Index>(R.h.size()));
    for (Index a = 0; a < R.h.size(); ++a) {
      for (Index b = 0; b < R.h.size(); ++b) {
        table[a][b] = pos.at(S.product(R.h[a], R.h[b]));
      }
    }
    out.group = GroupAction::from_table(table);

    std::vector<std::optional<Index>> entries;
    for (Index l = 0; l < R.g.size(); ++l) {
      for (Index r = 0; r < R.f.size(); ++r) {
        Index p = S.product(R.g[l], R.f[r]);
        if (p == *S.zero()) {
          entries.emplace_back(std::nullopt);
        } else {
          auto it = pos.find(p);
          if (it == pos.end()) {
            throw Error("extract_rees: g f product outside H");
          }
          entries.emplace_back(it->second);
        }
      }
    }
    out.matrix = SandwichMatrix(out.group, R.g.size(), R.f.size(), entries);
    if (!out.matrix.is_regular()) {
      throw Error("extract_rees: extracted matrix is not regular");
    }
    std::vector<Index> phi;
    for (Index x = 0; x < S.size(); ++x) {
      if (x == *S.zero()) {
        out.iso.emplace_back(std::nullopt);
      } else {
        out.iso.emplace_back(factorize(S, R, x));
      }
      phi.push_back(rees_index(out.matrix, out.iso.back()));
    }
    if (!is_isomorphism(S, build_rees(out.matrix), phi)) {
      throw Error("extract_rees: coordinate map is not an isomorphism");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of sandwich matrices
  ////////////////////////////////////////////////////////////////////////

  PermutationalMatrix PermutationalMatrix::identity(std::size_t n, Index one) {
    PermutationalMatrix M;
    M.col.resize(n);
    std::iota(M.col.begin(), M.col.end(), Index(0));
    M.value.assign(n, one);
    return M;
  }

  SandwichMatrix multiply(PermutationalMatrix const& U,
                          SandwichMatrix const&      Q) {
    if (U.size() != Q.rows) {
      throw Error("multiply: dimension mismatch");
    }
    std::vector<std::optional<Index>> e;
    for (std::size_t l = 0; l < Q.rows; ++l) {
      for (std::size_t i = 0; i < Q.cols; ++i) {
        auto q = Q.at(U.col[l], i);
        e.push_back(q ? std::optional<Index>(Q.group.product(U.value[l], *q))
                      : std::nullopt);
      }
    }
    return SandwichMatrix(Q.group, Q.rows, Q.cols, e);
  }

  SandwichMatrix multiply(SandwichMatrix const&      Q,
                          PermutationalMatrix const& V) {
    if (V.size() != Q.cols) {
      throw Error("multiply: dimension mismatch");
    }
    std::vector<Index> row_of(Q.cols);
    for (Index k = 0; k < V.size(); ++k) {
      row_of[V.col[k]] = k;
    }
    std::vector<std::optional<Index>> e;
    for (std::size_t l = 0; l < Q.rows; ++l) {
      for (std::size_t i = 0; i < Q.cols; ++i) {
        Index k = row_of[i];
        auto  q = Q.at(l, k);
        e.push_back(q ? std::optional<Index>(Q.group.product(*q, V.value[k]))
                      : std::nullopt);
      }
    }
    return SandwichMatrix(Q.group, Q.rows, Q.cols, e);
  }

  SandwichMatrix apply_isomorphism(SandwichMatrix const&     Q,
                                   std::vector<Index> const& phi,
                                   GroupAction const&        target) {
    std::vector<std::optional<Index>> e;
    for (auto const& x : Q.entries) {
      e.push_back(x ? std::optional<Index>(phi.at(*x)) : std::nullopt);
    }
    return SandwichMatrix(target, Q.rows, Q.cols, e);
  }

  namespace {
    std::vector<detail::Cell> sandwich_cells(SandwichMatrix const& Q) {
      std::vector<detail::Cell> out(Q.entries.size());
      for (std::size_t k = 0; k < Q.entries.size(); ++k) {
        if (Q.entries[k]) {
          out[k].kind = detail::CellKind::perm;
          out[k].perm = *Q.entries[k];
        }
      }
      return out;
    }

    bool is_monomial(PermutationalMatrix const& M, std::size_t n, std::size_t order) {
      if (M.size() != n || M.value.size() != n) {
        return false;
      }
      std::vector<bool> hit(n, false);
      for (std::size_t k = 0; k < n; ++k) {
        if (M.col[k] >= n || hit[M.col[k]] || M.value[k] >= order) {
          return false;
        }
        hit[M.col[k]] = true;
      }
      return true;
    }
  }  // namespace

  std::optional<SandwichEquivalence>
  sandwich_equivalent(SandwichMatrix const& Q, SandwichMatrix const& Q2) {
    if (Q.rows != Q2.rows || Q.cols != Q2.cols
        || Q.group.order() != Q2.group.order()
        || Q.num_zeros() != Q2.num_zeros()) {
      return std::nullopt;
    }
    auto const& H = Q2.group;
    auto const  T = sandwich_cells(Q2);
    std::optional<SandwichEquivalence> found;
    for_each_group_isomorphism(
        Q.group, H, [&](std::vector<Index> const& phi) {
          auto const S = sandwich_cells(apply_isomorphism(Q, phi, H));
          std::vector<Index> inv(phi.size());
          for (Index x = 0; x < phi.size(); ++x) {
            inv[phi[x]] = x;
          }
          std::vector<Index> sigma(Q.rows), tau(Q.cols);
          std::iota(sigma.begin(), sigma.end(), Index(0));
          do {
            std::iota(tau.begin(), tau.end(), Index(0));
            do {
              auto sol = detail::solve_gauge(
                  H, Q.rows, Q.cols, detail::permute_cells(S, Q.cols, sigma, tau),
                  T);
              if (sol) {
                SandwichEquivalence w;
                w.phi = phi;
                w.U.col = sigma;
                for (Index a : sol->a) {
                  w.U.value.push_back(inv[a]);
                }
                w.V.col.resize(Q.cols);
                w.V.value.resize(Q.cols);
                for (Index i = 0; i < Q.cols; ++i) {
                  w.V.col[tau[i]]   = i;
                  w.V.value[tau[i]] = inv[sol->b[i]];
                }
                found = w;
                return false;
              }
            } while (std::next_permutation(tau.begin(), tau.end()));
          } while (std::next_permutation(sigma.begin(), sigma.end()));
          return true;
        });
    if (found && !is_sandwich_equivalence(Q, Q2, *found)) {
      throw Error("sandwich_equivalent: witness failed verification");
    }
    return found;
  }

  bool is_sandwich_equivalence(SandwichMatrix const&      Q,
                               SandwichMatrix const&      Q2,
                               SandwichEquivalence const& w) {
    if (Q.rows != Q2.rows || Q.cols != Q2.cols
        || !is_monomial(w.U, Q.rows, Q.group.order())
        || !is_monomial(w.V, Q.cols, Q.group.order())
        || w.phi.size() != Q.group.order()) {
      return false;
    }
    auto const& G = Q.group;
    auto const& H = Q2.group;
    if (G.order() != H.order()) {
      return false;
    }
    for (Index a = 0; a < G.order(); ++a) {
      for (Index b = 0; b < G.order(); ++b) {
        if (w.phi[G.product(a, b)] != H.product(w.phi[a], w.phi[b])) {
          return false;
        }
      }
    }
    auto img = apply_isomorphism(multiply(multiply(w.U, Q), w.V), w.phi, H);
    return img.entries == Q2.entries;
  }

}  // namespace primrep
