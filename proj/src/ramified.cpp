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

#include "primrep/ramified.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>

#include "detail/gauge.hpp"
#include "primrep/error.hpp"

namespace primrep {

  RamifiedEntry normalize_entry(GroupAction const&    A,
                                Transformation const& t) {
    if (t.degree() != A.degree()) {
      throw Error("ramified entry " + t.to_string() + " has wrong degree");
    }
    if (t.is_permutation()) {
      auto g = A.index_of(t);
      if (!g) {
        throw Error("ramified entry " + t.to_string()
                    + " is a permutation outside the group");
      }
      return RamifiedEntry::group(*g);
    }
    if (t.is_constant()) {
      return RamifiedEntry::constant(t(0));
    }
    return {RamifiedEntry::Kind::map, 0, 0, t};
  }

  RamifiedMatrix::RamifiedMatrix(GroupAction                action,
                                 std::size_t                rows,
                                 std::size_t                cols,
                                 std::vector<RamifiedEntry> entries)
      : _action(std::move(action)),
        _rows(rows),
        _cols(cols),
        _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw Error("ramified matrix: expected " + std::to_string(rows * cols)
                  + " entries, found " + std::to_string(_entries.size()));
    }
    for (auto& e : _entries) {
      switch (e.kind) {
        case RamifiedEntry::Kind::perm:
          if (e.perm >= _action.order()) {
            throw Error("ramified matrix: group element out of range");
          }
          break;
        case RamifiedEntry::Kind::constant:
          if (e.point >= degree()) {
            throw Error("ramified matrix: constant out of range");
          }
          break;
        default:
          e = normalize_entry(_action, e.map);
      }
    }
  }

  Transformation RamifiedMatrix::entry_map(std::size_t lambda,
                                           std::size_t i) const {
    auto const& e = at(lambda, i);
    switch (e.kind) {
      case RamifiedEntry::Kind::perm:
        return _action.element(e.perm);
      case RamifiedEntry::Kind::constant:
        return Transformation::constant(degree(), e.point);
      default:
        return e.map;
    }
  }

  Point RamifiedMatrix::apply(std::size_t lambda,
                              std::size_t i,
                              Point       x) const {
    auto const& e = at(lambda, i);
    switch (e.kind) {
      case RamifiedEntry::Kind::perm:
        return _action.element(e.perm)(x);
      case RamifiedEntry::Kind::constant:
        return e.point;
      default:
        return e.map(x);
    }
  }

  bool RamifiedMatrix::is_c_ramified() const {
    return std::none_of(_entries.begin(), _entries.end(), [](auto const& e) {
      return e.kind == RamifiedEntry::Kind::map;
    });
  }

  bool RamifiedMatrix::is_regular() const {
    std::vector<bool> row(_rows, false), col(_cols, false);
    for (std::size_t l = 0; l < _rows; ++l) {
      for (std::size_t i = 0; i < _cols; ++i) {
        if (at(l, i).kind == RamifiedEntry::Kind::perm) {
          row[l] = col[i] = true;
        }
      }
    }
    return std::all_of(row.begin(), row.end(), [](bool b) { return b; })
           && std::all_of(col.begin(), col.end(), [](bool b) { return b; });
  }

  std::string RamifiedMatrix::to_string() const {
    std::string out = "[";
    for (std::size_t l = 0; l < _rows; ++l) {
      out += l == 0 ? "[" : ", [";
      for (std::size_t i = 0; i < _cols; ++i) {
        auto const& e = at(l, i);
        if (i != 0) {
          out += ", ";
        }
        switch (e.kind) {
          case RamifiedEntry::Kind::perm:
            out += "g" + std::to_string(e.perm);
            break;
          case RamifiedEntry::Kind::constant:
            out += "c" + std::to_string(e.point);
            break;
          default:
            out += e.map.to_string();
        }
      }
      out += "]";
    }
    return out + "]";
  }

  ////////////////////////////////////////////////////////////////////////
  // Triples and vectors
  ////////////////////////////////////////////////////////////////////////

  std::size_t num_triples(RamifiedMatrix const& P) {
    return P.cols() * P.action().order() * P.rows();
  }

  Index triple_index(RamifiedMatrix const& P, MonomialTriple t) {
    return static_cast<Index>((t.r * P.action().order() + t.g) * P.rows()
                              + t.lambda);
  }

  MonomialTriple triple_at(RamifiedMatrix const& P, Index k) {
    MonomialTriple t;
    t.lambda = k % P.rows();
    k /= P.rows();
    t.g = k % P.action().order();
    t.r = k / P.action().order();
    return t;
  }

  VectorElement act_triple(RamifiedMatrix const& P,
                           MonomialTriple        M,
                           VectorElement         v) {
    return {M.r, P.action().element(M.g)(P.apply(M.lambda, v.i, v.x))};
  }

  Partition theta(RamifiedMatrix const& P) {
    std::vector<std::vector<Point>> label(P.num_vectors());
    for (Index k = 0; k < P.num_vectors(); ++k) {
      auto v = vector_element(P, k);
      for (std::size_t l = 0; l < P.rows(); ++l) {
        label[k].push_back(P.apply(l, v.i, v.x));
      }
    }
    return Partition::from_labels(label);
  }

  TripleProduct compose_triples(RamifiedMatrix const& P,
                                MonomialTriple        M,
                                MonomialTriple        N) {
    auto const& G = P.action();
    auto const& e = P.at(M.lambda, N.r);
    switch (e.kind) {
      case RamifiedEntry::Kind::perm:
        return MonomialTriple{M.r, G.product(G.product(M.g, e.perm), N.g),
                              N.lambda};
      case RamifiedEntry::Kind::constant:
        return ConstantOutcome{M.r, G.element(M.g)(e.point)};
      default:
        return GeneralOutcome{
            M.r, compose(compose(G.element(M.g), e.map), G.element(N.g)),
            N.lambda};
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // The action on V / α
  ////////////////////////////////////////////////////////////////////////

  namespace {
    void require_below_theta(RamifiedMatrix const& P,
                             Partition const&      alpha,
                             char const*           who) {
      if (alpha.degree() != P.num_vectors()) {
        throw PreconditionError(std::string(who)
                                + ": partition has the wrong degree");
      }
      if (!alpha.refines(theta(P))) {
        throw PreconditionError(std::string(who)
                                + ": partition does not refine theta");
      }
    }

    std::string triple_name(MonomialTriple t) {
      return "[" + std::to_string(t.r) + "," + std::to_string(t.g) + ","
             + std::to_string(t.lambda) + "]";
    }

    // Image of a triple on the classes of α.
    Transformation triple_map(RamifiedMatrix const& P,
                              Partition const&      alpha,
                              MonomialTriple        t) {
      std::vector<Point> im(alpha.num_blocks(), static_cast<Point>(-1));
      for (Index k = 0; k < P.num_vectors(); ++k) {
        Point c = alpha.block_of(k);
        Point w = alpha.block_of(
            vector_index(P, act_triple(P, t, vector_element(P, k))));
        if (im[c] == static_cast<Point>(-1)) {
          im[c] = w;
        } else if (im[c] != w) {
          throw Error("triple action is not defined on the quotient");
        }
      }
      return Transformation(std::move(im));
    }
  }  // namespace

  RamifiedAction ramified_action(RamifiedMatrix const& P,
                                 Partition const&      alpha) {
    if (!P.is_regular()) {
      throw PreconditionError("ramified action: matrix is not regular");
    }
    require_below_theta(P, alpha, "ramified action");
    std::size_t const           Y = alpha.num_blocks();
    std::size_t const           T = num_triples(P);
    std::vector<Transformation> maps;
    std::vector<std::string>    names;
    for (Index k = 0; k < T; ++k) {
      auto t = triple_at(P, k);
      maps.push_back(triple_map(P, alpha, t));
      names.push_back(triple_name(t));
    }
    for (Point c = 0; c < Y; ++c) {
      maps.push_back(Transformation::constant(Y, c));
      names.push_back("c" + std::to_string(c));
    }
    std::unordered_map<Transformation, Index, TransformationHash> first;
    for (Index k = 0; k < maps.size(); ++k) {
      first.try_emplace(maps[k], k);
    }
    if (!P.is_c_ramified()) {
      for (std::size_t pos = 0; pos < maps.size(); ++pos) {
        for (std::size_t q = 0; q <= pos; ++q) {
          for (auto const& t : {compose(maps[pos], maps[q]),
                                compose(maps[q], maps[pos])}) {
            if (first.try_emplace(t, static_cast<Index>(maps.size())).second) {
              maps.push_back(t);
              names.push_back("x" + std::to_string(maps.size() - T - Y - 1));
              if (maps.size() > kDefaultClosureCap) {
                throw CapExceeded("ramified action: closure too large");
              }
            }
          }
        }
      }
    }
    std::size_t const                 n = maps.size();
    std::vector<std::optional<Index>> products(n * n);
    auto constant_of = [&](Index r, Point x) {
      return static_cast<Index>(T
                                + alpha.block_of(vector_index(P, {r, x})));
    };
    for (Index u = 0; u < n; ++u) {
      for (Index v = 0; v < n; ++v) {
        std::optional<Index> w;
        if (u < T && v < T) {
          auto pr = compose_triples(P, triple_at(P, u), triple_at(P, v));
          if (auto const* m = std::get_if<MonomialTriple>(&pr)) {
            w = triple_index(P, *m);
          } else if (auto const* c = std::get_if<ConstantOutcome>(&pr)) {
            w = constant_of(c->r, c->x);
          }
        } else if (u >= T && u < T + Y) {
          w = u;
        } else if (v >= T && v < T + Y) {
          w = static_cast<Index>(T + maps[u](v - T));
        }
        if (!w) {
          w = first.at(compose(maps[u], maps[v]));
        }
        products[u * n + v] = w;
      }
    }
    RamifiedAction out;
    out.alpha     = alpha;
    out.triples   = T;
    out.constants = Y;
    out.extra     = n - T - Y;
    out.rep = Representation(Y, std::move(maps), std::move(names),
                             std::move(products));
    return out;
  }

  Representation build_action(RamifiedMatrix const& P, bool quotient) {
    return ramified_action(P,
                           quotient ? theta(P)
                                    : Partition::diagonal(P.num_vectors()))
        .rep;
  }

  Representation j_action(RamifiedMatrix const& P, Partition const& alpha) {
    if (!P.is_regular()) {
      throw PreconditionError("J action: matrix is not regular");
    }
    require_below_theta(P, alpha, "J action");
    std::size_t const           T = num_triples(P);
    std::vector<Transformation> maps;
    std::vector<std::string>    names;
    for (Index k = 0; k < T; ++k) {
      maps.push_back(triple_map(P, alpha, triple_at(P, k)));
      names.push_back(triple_name(triple_at(P, k)));
    }
    std::vector<std::optional<Index>> products(T * T);
    for (Index u = 0; u < T; ++u) {
      for (Index v = 0; v < T; ++v) {
        auto pr = compose_triples(P, triple_at(P, u), triple_at(P, v));
        if (auto const* m = std::get_if<MonomialTriple>(&pr)) {
          products[u * T + v] = triple_index(P, *m);
        }
      }
    }
    return Representation(alpha.num_blocks(), std::move(maps),
                          std::move(names), std::move(products));
  }

  GraphResult graph(RamifiedMatrix const& P) {
    auto         th = theta(P);
    GraphResult  out;
    DisjointSets ds(P.cols());
    for (Index r = 0; r < P.cols(); ++r) {
      for (Index s = r + 1; s < P.cols(); ++s) {
        bool edge = false;
        for (Point x = 0; x < P.degree() && !edge; ++x) {
          for (Point y = 0; y < P.degree() && !edge; ++y) {
            edge = th.same_block(vector_index(P, {r, x}),
                                 vector_index(P, {s, y}));
          }
        }
        if (edge) {
          out.edges.emplace_back(r, s);
          ds.unite(r, s);
        }
      }
    }
    out.connected = P.cols() == 0 || ds.to_partition().num_blocks() == 1;
    return out;
  }

  Reductivity reductivity(RamifiedMatrix const& P) {
    auto const& G = P.action();
    Reductivity out;
    for (Index a = 0; a < P.rows() && out.right; ++a) {
      for (Index b = a + 1; b < P.rows() && out.right; ++b) {
        for (Index g = 0; g < G.order(); ++g) {
          bool prop = true;
          for (Index i = 0; i < P.cols() && prop; ++i) {
            prop = compose(G.element(g), P.entry_map(a, i))
                   == P.entry_map(b, i);
          }
          if (prop) {
            out.right = false;
            break;
          }
        }
      }
    }
    for (Index r = 0; r < P.cols() && out.left; ++r) {
      for (Index s = r + 1; s < P.cols() && out.left; ++s) {
        for (Index h = 0; h < G.order(); ++h) {
          bool prop = true;
          for (Index l = 0; l < P.rows() && prop; ++l) {
            prop = compose(P.entry_map(l, r), G.element(h))
                   == P.entry_map(l, s);
          }
          if (prop) {
            out.left = false;
            break;
          }
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Equivalence of ramified matrices
  ////////////////////////////////////////////////////////////////////////

  namespace {
    RamifiedEntry left_times(GroupAction const&   G,
                             Index                g,
                             RamifiedEntry const& e) {
      switch (e.kind) {
        case RamifiedEntry::Kind::perm:
          return RamifiedEntry::group(G.product(g, e.perm));
        case RamifiedEntry::Kind::constant:
          return RamifiedEntry::constant(G.element(g)(e.point));
        default:
          return normalize_entry(G, compose(G.element(g), e.map));
      }
    }

    RamifiedEntry right_times(GroupAction const&   G,
                              RamifiedEntry const& e,
                              Index                g) {
      switch (e.kind) {
        case RamifiedEntry::Kind::perm:
          return RamifiedEntry::group(G.product(e.perm, g));
        case RamifiedEntry::Kind::constant:
          return e;
        default:
          return normalize_entry(G, compose(e.map, G.element(g)));
      }
    }

    std::vector<detail::Cell> ramified_cells(RamifiedMatrix const& P) {
      std::vector<detail::Cell> out;
      for (auto const& e : P.entries()) {
        detail::Cell c;
        switch (e.kind) {
          case RamifiedEntry::Kind::perm:
            c.kind = detail::CellKind::perm;
            c.perm = e.perm;
            break;
          case RamifiedEntry::Kind::constant:
            c.kind  = detail::CellKind::constant;
            c.point = e.point;
            break;
          default:
            c.kind = detail::CellKind::map;
            c.map  = e.map;
        }
        out.push_back(std::move(c));
      }
      return out;
    }

    bool monomial(PermutationalMatrix const& M, std::size_t n,
                  std::size_t order) {
      if (M.col.size() != n || M.value.size() != n) {
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

  RamifiedMatrix multiply(PermutationalMatrix const& A,
                          RamifiedMatrix const&      P) {
    if (A.size() != P.rows()) {
      throw Error("multiply: dimension mismatch");
    }
    std::vector<RamifiedEntry> e;
    for (std::size_t l = 0; l < P.rows(); ++l) {
      for (std::size_t i = 0; i < P.cols(); ++i) {
        e.push_back(left_times(P.action(), A.value[l], P.at(A.col[l], i)));
      }
    }
    return RamifiedMatrix(P.action(), P.rows(), P.cols(), std::move(e));
  }

  RamifiedMatrix multiply(RamifiedMatrix const&      P,
                          PermutationalMatrix const& B) {
    if (B.size() != P.cols()) {
      throw Error("multiply: dimension mismatch");
    }
    std::vector<Index> row_of(P.cols());
    for (Index k = 0; k < B.size(); ++k) {
      row_of[B.col[k]] = k;
    }
    std::vector<RamifiedEntry> e;
    for (std::size_t l = 0; l < P.rows(); ++l) {
      for (std::size_t i = 0; i < P.cols(); ++i) {
        Index k = row_of[i];
        e.push_back(right_times(P.action(), P.at(l, k), B.value[k]));
      }
    }
    return RamifiedMatrix(P.action(), P.rows(), P.cols(), std::move(e));
  }

  RamifiedMatrix apply_equivalence(RamifiedMatrix const&    P,
                                   ActionEquivalence const& beta,
                                   GroupAction const&       target) {
    std::size_t const  n = P.degree();
    std::vector<Point> inv(n);
    for (Point x = 0; x < n; ++x) {
      inv[beta.points[x]] = x;
    }
    std::vector<RamifiedEntry> e;
    for (auto const& x : P.entries()) {
      switch (x.kind) {
        case RamifiedEntry::Kind::perm:
          e.push_back(RamifiedEntry::group(beta.group.at(x.perm)));
          break;
        case RamifiedEntry::Kind::constant:
          e.push_back(RamifiedEntry::constant(beta.points.at(x.point)));
          break;
        default: {
          std::vector<Point> im(n);
          for (Point y = 0; y < n; ++y) {
            im[y] = beta.points[x.map(inv[y])];
          }
          e.push_back(normalize_entry(target, Transformation(std::move(im))));
        }
      }
    }
    return RamifiedMatrix(target, P.rows(), P.cols(), std::move(e));
  }

  std::optional<MatrixEquivalence>
  matrices_equivalent(RamifiedMatrix const& P, RamifiedMatrix const& P2) {
    if (P.rows() != P2.rows() || P.cols() != P2.cols()
        || P.degree() != P2.degree()
        || P.action().order() != P2.action().order()) {
      return std::nullopt;
    }
    auto const& H = P2.action();
    auto const  T = ramified_cells(P2);
    std::size_t const m = P.rows(), n = P.cols();
    std::optional<MatrixEquivalence> found;
    for_each_action_equivalence(
        P.action(), H, [&](ActionEquivalence const& beta) {
          auto const S = ramified_cells(apply_equivalence(P, beta, H));
          std::vector<Index> inv(beta.group.size());
          for (Index x = 0; x < beta.group.size(); ++x) {
            inv[beta.group[x]] = x;
          }
          std::vector<Index> sigma(m), tau(n);
          std::iota(sigma.begin(), sigma.end(), Index(0));
          do {
            std::iota(tau.begin(), tau.end(), Index(0));
            do {
              auto sol = detail::solve_gauge(
                  H, m, n, detail::permute_cells(S, n, sigma, tau), T);
              if (sol) {
                MatrixEquivalence w;
                w.beta  = beta;
                w.A.col = sigma;
                for (Index a : sol->a) {
                  w.A.value.push_back(inv[a]);
                }
                w.B.col.resize(n);
                w.B.value.resize(n);
                for (Index i = 0; i < n; ++i) {
                  w.B.col[tau[i]]   = i;
                  w.B.value[tau[i]] = inv[sol->b[i]];
                }
                found = w;
                return false;
              }
            } while (std::next_permutation(tau.begin(), tau.end()));
          } while (std::next_permutation(sigma.begin(), sigma.end()));
          return true;
        });
    if (found && !is_matrix_equivalence(P, P2, *found)) {
      throw Error("matrices_equivalent: witness failed verification");
    }
    return found;
  }

  bool is_matrix_equivalence(RamifiedMatrix const&    P,
                             RamifiedMatrix const&    P2,
                             MatrixEquivalence const& w) {
    if (P.rows() != P2.rows() || P.cols() != P2.cols()
        || !monomial(w.A, P.rows(), P.action().order())
        || !monomial(w.B, P.cols(), P.action().order())
        || !is_action_equivalence(P.action(), P2.action(), w.beta)) {
      return false;
    }
    auto img = apply_equivalence(multiply(multiply(w.A, P), w.B), w.beta,
                                 P2.action());
    return img.entries() == P2.entries();
  }

  bool is_ramification(RamifiedMatrix const&     P,
                       SandwichMatrix const&     Q,
                       std::vector<Index> const& gamma) {
    if (P.rows() != Q.rows || P.cols() != Q.cols) {
      throw Error("is_ramification: dimension mismatch");
    }
    if (gamma.size() != Q.group.order()) {
      throw Error("is_ramification: embedding has the wrong size");
    }
    for (std::size_t l = 0; l < P.rows(); ++l) {
      for (std::size_t i = 0; i < P.cols(); ++i) {
        auto const& e = P.at(l, i);
        auto        q = Q.at(l, i);
        if (q) {
          if (e.kind != RamifiedEntry::Kind::perm || e.perm != gamma[*q]) {
            return false;
          }
        } else if (e.kind == RamifiedEntry::Kind::perm) {
          return false;
        }
      }
    }
    return true;
  }

  SandwichMatrix permutation_skeleton(RamifiedMatrix const& P) {
    std::vector<std::optional<Index>> e;
    for (auto const& x : P.entries()) {
      e.push_back(x.kind == RamifiedEntry::Kind::perm
                      ? std::optional<Index>(x.perm)
                      : std::nullopt);
    }
    return SandwichMatrix(P.action(), P.rows(), P.cols(), std::move(e));
  }

  ////////////////////////////////////////////////////////////////////////
  // Faithfulness, transitivity, cyclicity
  ////////////////////////////////////////////////////////////////////////

  FaithfulnessReport faithful_ramified(RamifiedMatrix const& P,
                                       Partition const&      alpha) {
    require_below_theta(P, alpha, "faithful_ramified");
    FaithfulnessReport out;
    auto               red = reductivity(P);
    out.right_reductive    = red.right;
    out.left_reductive     = red.left;
    std::set<std::vector<Point>> images;
    for (Index k = 0; k < num_triples(P); ++k) {
      auto f = triple_map(P, alpha, triple_at(P, k));
      if (f.is_idempotent()) {
        images.insert(f.image_set());
      }
    }
    out.neighborhoods.assign(images.begin(), images.end());
    out.alpha_is_theta = alpha == theta(P);
    out.reduced        = out.alpha_is_theta;
    out.faithful       = out.group_faithful && out.right_reductive
                   && out.neighborhoods.size() == P.cols();
    out.faithful_reduced
        = out.alpha_is_theta && out.left_reductive && out.right_reductive;
    if (!out.right_reductive) {
      out.failure = "proportional rows";
    } else if (out.neighborhoods.size() != P.cols()) {
      out.failure = std::to_string(out.neighborhoods.size())
                    + " neighborhoods for " + std::to_string(P.cols())
                    + " columns";
    }
    return out;
  }

  std::vector<Point> column_constants(RamifiedMatrix const& P, Index s) {
    std::set<Point> out;
    for (std::size_t l = 0; l < P.rows(); ++l) {
      if (P.at(l, s).kind == RamifiedEntry::Kind::constant) {
        out.insert(P.at(l, s).point);
      }
    }
    return {out.begin(), out.end()};
  }

  namespace {
    void require_c_regular(RamifiedMatrix const& P,
                           Partition const&      alpha,
                           char const*           who) {
      if (!P.is_c_ramified()) {
        throw PreconditionError(std::string(who)
                                + ": matrix is not c-ramified");
      }
      if (!P.is_regular()) {
        throw PreconditionError(std::string(who) + ": matrix is not regular");
      }
      require_below_theta(P, alpha, who);
    }

    // Number of classes {r_y / α : r ∈ I, y ∈ ys}.
    std::size_t saturation(RamifiedMatrix const&     P,
                           Partition const&          alpha,
                           std::vector<Point> const& ys) {
      std::set<Index> hit;
      for (Index r = 0; r < P.cols(); ++r) {
        for (Point y : ys) {
          hit.insert(alpha.block_of(vector_index(P, {r, y})));
        }
      }
      return hit.size();
    }

    std::vector<Point> column_orbit(RamifiedMatrix const& P,
                                    Index                 s,
                                    Point                 x) {
      auto seeds = column_constants(P, s);
      seeds.push_back(x);
      return transitivity_class(P.action(), seeds);
    }

    void check_initial(RamifiedMatrix const&             P,
                       std::vector<VectorElement> const& initial) {
      if (initial.size() != P.rows()) {
        throw PreconditionError("initial state needs one vector per row");
      }
      for (auto const& v : initial) {
        if (v.i >= P.cols() || v.x >= P.degree()) {
          throw PreconditionError("initial state vector out of range");
        }
      }
    }
  }  // namespace

  bool transitivity_check(RamifiedMatrix const& P, Partition const& alpha) {
    require_c_regular(P, alpha, "transitivity_check");
    for (Point x = 0; x < P.degree(); ++x) {
      for (Index s = 0; s < P.cols(); ++s) {
        if (saturation(P, alpha, column_orbit(P, s, x))
            != alpha.num_blocks()) {
          return false;
        }
      }
    }
    return true;
  }

  CyclicityVerdict
  cyclicity_check(RamifiedMatrix const&                     P,
                  Partition const&                          alpha,
                  std::optional<std::vector<VectorElement>> initial) {
    require_c_regular(P, alpha, "cyclicity_check");
    CyclicityVerdict out;
    if (!initial) {
      for (Index s = 0; s < P.cols() && !out.generator; ++s) {
        for (Point x = 0; x < P.degree(); ++x) {
          if (saturation(P, alpha, column_orbit(P, s, x))
              == alpha.num_blocks()) {
            out.kind      = CyclicityVerdict::Kind::from_vector;
            out.generator = VectorElement{s, x};
            break;
          }
        }
      }
      return out;
    }
    check_initial(P, *initial);
    std::vector<Point> exact, coarse;
    for (Index l = 0; l < P.rows(); ++l) {
      auto const& v = (*initial)[l];
      exact.push_back(P.apply(l, v.i, v.x));
      auto orbit = column_orbit(P, v.i, v.x);
      coarse.insert(coarse.end(), orbit.begin(), orbit.end());
    }
    exact = transitivity_class(P.action(), exact);
    std::sort(coarse.begin(), coarse.end());
    coarse.erase(std::unique(coarse.begin(), coarse.end()), coarse.end());
    out.orbit_union_verdict
        = saturation(P, alpha, coarse) == alpha.num_blocks();
    if (saturation(P, alpha, exact) == alpha.num_blocks()) {
      out.kind = CyclicityVerdict::Kind::from_initial;
    }
    return out;
  }

  Representation
  initial_state_representation(RamifiedMatrix const&             P,
                               Partition const&                  alpha,
                               std::vector<VectorElement> const& initial) {
    require_below_theta(P, alpha, "initial_state_representation");
    check_initial(P, initial);
    std::size_t const           Y = alpha.num_blocks();
    std::size_t const           T = num_triples(P);
    std::vector<Transformation> maps;
    std::vector<std::string>    names;
    for (Index k = 0; k < T; ++k) {
      auto t  = triple_at(P, k);
      auto f  = triple_map(P, alpha, t);
      auto im = std::vector<Point>(f.images().begin(), f.images().end());
      Point y = P.action().element(t.g)(
          P.apply(t.lambda, initial[t.lambda].i, initial[t.lambda].x));
      im.push_back(alpha.block_of(vector_index(P, {t.r, y})));
      maps.emplace_back(std::move(im));
      names.push_back(triple_name(t));
    }
    std::vector<std::optional<Index>> products(T * T);
    for (Index u = 0; u < T; ++u) {
      for (Index v = 0; v < T; ++v) {
        auto pr = compose_triples(P, triple_at(P, u), triple_at(P, v));
        if (auto const* m = std::get_if<MonomialTriple>(&pr)) {
          products[u * T + v] = triple_index(P, *m);
        }
      }
    }
    return Representation(Y + 1, std::move(maps), std::move(names),
                          std::move(products));
  }

  ////////////////////////////////////////////////////////////////////////
  // c-ramifications
  ////////////////////////////////////////////////////////////////////////

  CRamificationStream::CRamificationStream(
      SandwichMatrix                           Q,
      GroupAction                              A,
      std::optional<std::vector<Index>> const& gamma)
      : _Q(std::move(Q)), _A(std::move(A)) {
    if (!_Q.is_regular()) {
      throw PreconditionError("c-ramifications: matrix is not regular");
    }
    if (gamma) {
      if (gamma->size() != _Q.group.order()) {
        throw PreconditionError("c-ramifications: embedding has wrong size");
      }
      _gamma = *gamma;
    } else {
      for_each_group_embedding(_Q.group, _A,
                               [this](std::vector<Index> const& g) {
                                 _gamma = g;
                                 return false;
                               });
      if (_gamma.empty()) {
        throw PreconditionError(
            "c-ramifications: the group does not embed in the action");
      }
    }
    for (std::size_t k = 0; k < _Q.entries.size(); ++k) {
      if (!_Q.entries[k]) {
        _zeros.push_back(k);
      }
    }
    _digits.assign(_zeros.size(), 0);
    for (std::size_t k = 0; k < _zeros.size(); ++k) {
      if (_total > std::numeric_limits<std::size_t>::max() / _A.degree()) {
        _total = std::numeric_limits<std::size_t>::max();
        break;
      }
      _total *= _A.degree();
    }
    _done = _A.degree() == 0 && !_zeros.empty();
  }

  std::optional<RamifiedMatrix> CRamificationStream::next() {
    if (_done) {
      return std::nullopt;
    }
    std::vector<RamifiedEntry> e;
    std::size_t                z = 0;
    for (std::size_t k = 0; k < _Q.entries.size(); ++k) {
      if (_Q.entries[k]) {
        e.push_back(RamifiedEntry::group(_gamma[*_Q.entries[k]]));
      } else {
        e.push_back(RamifiedEntry::constant(_digits[z++]));
      }
    }
    RamifiedMatrix out(_A, _Q.rows, _Q.cols, std::move(e));
    // advance, last zero fastest
    std::size_t k = _digits.size();
    for (; k > 0; --k) {
      if (++_digits[k - 1] < _A.degree()) {
        break;
      }
      _digits[k - 1] = 0;
    }
    _done = k == 0;
    return out;
  }

  std::vector<RamifiedMatrix>
  enumerate_c_ramifications(SandwichMatrix const&                    Q,
                            GroupAction const&                       A,
                            std::optional<std::vector<Index>> const& gamma) {
    CRamificationStream         s(Q, A, gamma);
    std::vector<RamifiedMatrix> out;
    while (auto P = s.next()) {
      out.push_back(std::move(*P));
    }
    return out;
  }

}  // namespace primrep
