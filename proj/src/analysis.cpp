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

#include "primrep/analysis.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "primrep/error.hpp"

namespace primrep {

  namespace {
    std::vector<Point> range_of(Representation const& rep) {
      std::set<Point> seen;
      for (auto const& t : rep.maps()) {
        for (Point y : t.images()) {
          seen.insert(y);
        }
      }
      return {seen.begin(), seen.end()};
    }

    FiniteSemigroup checked_zero_extension(Representation const& rep,
                                           char const*           what) {
      if (rep.size() == 0) {
        throw PreconditionError(std::string(what) + ": no elements");
      }
      auto S = zero_extension(rep);
      if (!S.is_associative() || !is_completely_0_simple(S)) {
        throw PreconditionError(std::string(what)
                                + ": the elements do not form a single "
                                  "regular J-class");
      }
      return S;
    }

    Index first_idempotent(FiniteSemigroup const& S) {
      for (Index a = 0; a + 1 < S.size(); ++a) {
        if (S.is_idempotent(a)) {
          return a;
        }
      }
      throw PreconditionError("no non-zero idempotent");
    }

    // The H-class of e restricted to e(Y).
    std::vector<Transformation> group_part(Representation const&  rep,
                                           FiniteSemigroup const& S,
                                           GreenData const&       g,
                                           Index                  e,
                                           std::vector<Point> const& X) {
      std::vector<Transformation> out;
      for (Index u = 0; u + 1 < S.size(); ++u) {
        if (g.h_classes.same_block(u, e)) {
          out.push_back(rep.map(u).restrict_to(X));
        }
      }
      return out;
    }

    bool pairwise_distinct(std::vector<Transformation> v) {
      std::sort(v.begin(), v.end());
      return std::adjacent_find(v.begin(), v.end()) == v.end();
    }
  }  // namespace

  FiniteSemigroup zero_extension(Representation const& rep) {
    std::size_t const               k = rep.size();
    std::vector<std::vector<Index>> table(k + 1,
                                          std::vector<Index>(k + 1, k));
    for (Index u = 0; u < k; ++u) {
      for (Index v = 0; v < k; ++v) {
        if (auto w = rep.product(u, v)) {
          table[u][v] = *w;
        }
      }
    }
    return FiniteSemigroup::from_table(table);
  }

  RRepClassification classify_r_rep(Representation const& rep) {
    auto S = checked_zero_extension(rep, "classify");
    auto g = green(S);

    RRepClassification out;
    out.is_r_rep = validate_representation(rep).valid;
    out.is_c_rep = out.is_r_rep;
    for (Index u = 0; u < rep.size() && out.is_c_rep; ++u) {
      for (Index v = 0; v < rep.size() && out.is_c_rep; ++v) {
        if (!rep.product(u, v)) {
          out.is_c_rep = compose(rep.map(u), rep.map(v)).is_constant();
        }
      }
    }
    out.range_covered   = range_of(rep).size() == rep.carrier();
    out.reduced         = max_deflation(rep).is_diagonal();
    out.faithful_direct = rep.is_faithful();
    // the zero is a class of its own
    out.r_classes = g.r_classes.num_blocks() - 1;
    out.l_classes = g.l_classes.num_blocks() - 1;

    std::set<std::vector<Point>> images;
    for (Index u = 0; u < rep.size(); ++u) {
      if (S.is_idempotent(u)) {
        images.insert(rep.map(u).image_set());
      }
    }
    out.neighborhoods.assign(images.begin(), images.end());
    for (auto const& t : rep.maps()) {
      auto k = kernel_partition(t);
      if (std::find(out.kernels.begin(), out.kernels.end(), k)
          == out.kernels.end()) {
        out.kernels.push_back(std::move(k));
      }
    }

    Index e        = first_idempotent(S);
    out.m_faithful = pairwise_distinct(
        group_part(rep, S, g, e, rep.map(e).image_set()));
    out.faithful = out.m_faithful
                   && out.neighborhoods.size() == out.r_classes
                   && out.kernels.size() == out.l_classes;
    return out;
  }

  RamifyResult ramify(Representation const& rep, std::optional<Index> base) {
    auto S   = checked_zero_extension(rep, "ramify");
    auto cls = classify_r_rep(rep);
    if (!cls.is_r_rep) {
      throw PreconditionError("ramify: not an R-representation");
    }
    if (!cls.range_covered) {
      throw PreconditionError("ramify: not range-covered");
    }
    Index e = base ? *base : first_idempotent(S);
    if (e >= rep.size() || !S.is_idempotent(e)) {
      throw PreconditionError("ramify: base is not an idempotent");
    }
    auto       gd = green(S);
    auto const X  = rep.map(e).image_set();
    auto       H  = group_part(rep, S, gd, e, X);
    if (!pairwise_distinct(H)) {
      throw PreconditionError("ramify: not m-faithful");
    }

    RamifyResult out;
    out.rgs    = rees_generating_set(S, e);
    out.action = GroupAction::from_generators(X.size(), H);
    std::vector<Index> hidx;
    for (Index h : out.rgs.h) {
      hidx.push_back(*out.action.index_of(rep.map(h).restrict_to(X)));
    }

    std::size_t const          m = out.rgs.g.size();
    std::size_t const          n = out.rgs.f.size();
    std::vector<RamifiedEntry> entries;
    for (Index l = 0; l < m; ++l) {
      for (Index i = 0; i < n; ++i) {
        auto t = compose(rep.map(out.rgs.g[l]), rep.map(out.rgs.f[i]));
        entries.push_back(normalize_entry(out.action, t.restrict_to(X)));
      }
    }
    out.matrix = RamifiedMatrix(out.action, m, n, std::move(entries));

    std::vector<Point> labels;
    for (Index r = 0; r < n; ++r) {
      for (Point x : X) {
        labels.push_back(rep.map(out.rgs.f[r])(x));
      }
    }
    out.alpha = Partition::from_labels(labels);
    out.kappa.points.assign(rep.carrier(), 0);
    std::vector<bool> hit(rep.carrier(), false);
    for (Index k = 0; k < labels.size(); ++k) {
      out.kappa.points[labels[k]] = out.alpha.block_of(k);
      hit[labels[k]]              = true;
    }
    if (std::find(hit.begin(), hit.end(), false) != hit.end()) {
      throw Error("ramify: some point is not of the form f_r(x)");
    }
    for (Index j = 0; j < rep.size(); ++j) {
      auto t = factorize(S, out.rgs, j);
      out.kappa.elements.push_back(
          triple_index(out.matrix, {t.r, hidx[t.g], t.lambda}));
    }
    out.target = j_action(out.matrix, out.alpha);
    if (!is_representation_equivalence(rep, out.target, out.kappa)) {
      throw Error("ramify: the constructed map is not an equivalence");
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Primitivity
  ////////////////////////////////////////////////////////////////////////

  namespace {
    PrimitivityCertificate not_primitive(std::string               reason,
                                         std::optional<Partition> witness,
                                         Representation const&     T) {
      PrimitivityCertificate out;
      out.reason = std::move(reason);
      if (witness) {
        out.witness = std::move(witness);
      } else {
        out.witness          = is_primitive_bruteforce(T).witness;
        out.witness_searched = true;
      }
      return out;
    }
  }  // namespace

  PrimitivityCertificate structural_primitivity(Representation const& rep) {
    if (!rep.is_faithful()) {
      throw PreconditionError("primitivity: representation is not faithful");
    }
    if (!validate_representation(rep).valid) {
      throw PreconditionError("primitivity: not a partial homomorphism");
    }
    std::size_t const Y = rep.carrier();
    if (Y <= 2) {
      PrimitivityCertificate out;
      out.primitive = true;
      return out;
    }

    std::vector<Transformation> gens(rep.maps().begin(), rep.maps().end());
    for (Point c = 0; c < Y; ++c) {
      gens.push_back(Transformation::constant(Y, c));
    }
    auto T    = close(gens);
    auto Trep = as_representation(T);

    auto delta = max_deflation(Trep);
    if (!delta.is_diagonal()) {
      if (delta.is_universal()) {
        std::vector<PointPair> p{{0, 1}};
        delta = generate_equivalence(p, Y);
      }
      return not_primitive("not reduced", delta, Trep);
    }

    auto ms = minimal_structure(Trep);
    std::vector<PointPair> pairs;
    for (auto const& U : ms.minimal_sets) {
      for (Point y : U) {
        pairs.emplace_back(U.front(), y);
      }
    }
    auto rho = congruence_generated(Trep, pairs);
    if (!rho.is_universal()) {
      return not_primitive("minimal sets do not connect the carrier", rho,
                           Trep);
    }

    // the minimal functions must be exactly one J-class, covering the
    // constants and nothing else
    auto const& J  = ms.minimal_functions;
    auto        gd = green(T);
    Index       jc = gd.j_classes.block_of(J.front());
    auto        members = jclass_elements(gd, jc);
    if (members != J) {
      return not_primitive("minimal functions are not a J-class",
                           std::nullopt, Trep);
    }
    auto  c0 = *T.index_of(Transformation::constant(Y, 0));
    Index kc = gd.j_classes.block_of(c0);
    for (Index c = 0; c < gd.num_j_classes(); ++c) {
      if (c == kc || c == jc || !gd.j_leq(kc, c)) {
        continue;
      }
      if (!gd.j_leq(jc, c)) {
        return not_primitive("minimal functions are not the unique cover",
                             std::nullopt, Trep);
      }
    }

    std::unordered_map<Transformation, Index, TransformationHash> pos;
    std::vector<Transformation>                                   jmaps;
    for (Index u : J) {
      pos.emplace(T.carrier(u), static_cast<Index>(jmaps.size()));
      jmaps.push_back(T.carrier(u));
    }
    std::vector<std::optional<Index>> products(J.size() * J.size());
    for (Index u = 0; u < J.size(); ++u) {
      for (Index v = 0; v < J.size(); ++v) {
        auto it = pos.find(compose(jmaps[u], jmaps[v]));
        if (it != pos.end()) {
          products[u * J.size() + v] = it->second;
        }
      }
    }
    Representation Jrep(Y, jmaps, {}, std::move(products));

    RRepClassification cls;
    try {
      cls = classify_r_rep(Jrep);
    } catch (PreconditionError const&) {
      return not_primitive("minimal functions are not completely 0-simple",
                           std::nullopt, Trep);
    }
    if (!cls.is_c_rep) {
      return not_primitive("minimal functions are not a c-representation",
                           std::nullopt, Trep);
    }
    if (!cls.range_covered) {
      return not_primitive("minimal functions are not range-covered",
                           std::nullopt, Trep);
    }
    if (!cls.reduced) {
      return not_primitive("minimal functions are not reduced",
                           max_deflation(Jrep), Trep);
    }

    auto R   = ramify(Jrep);
    auto out = PrimitivityCertificate{};
    auto red = reductivity(R.matrix);
    if (R.alpha != theta(R.matrix)) {
      out = not_primitive("identification is not θ", std::nullopt, Trep);
    } else if (!is_primitive_group(R.action).primitive) {
      out = not_primitive("group action is not primitive", std::nullopt,
                          Trep);
    } else if (!R.matrix.is_c_ramified() || !R.matrix.is_regular()) {
      out = not_primitive("matrix is not regular and c-ramified",
                          std::nullopt, Trep);
    } else if (!red.left || !red.right) {
      out = not_primitive("matrix is not reductive", std::nullopt, Trep);
    } else if (!graph(R.matrix).connected) {
      out = not_primitive("graph is not connected", std::nullopt, Trep);
    } else {
      out.primitive = true;
    }
    out.minimal_functions = std::move(Jrep);
    out.structure         = std::move(R);
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Kernel construction
  ////////////////////////////////////////////////////////////////////////

  Point ker_tuple_index(std::size_t carrier, std::vector<Point> const& a) {
    std::size_t k = 0;
    for (Point x : a) {
      k = k * carrier + x;
    }
    return static_cast<Point>(k);
  }

  Representation ker_construction(Representation const& rep,
                                  std::size_t           cap) {
    auto S = checked_zero_extension(rep, "ker construction");
    if (!validate_representation(rep).valid) {
      throw PreconditionError("ker construction: not an R-representation");
    }
    auto              gd = green(S);
    std::size_t const m  = gd.l_classes.num_blocks() - 1;
    std::size_t const Y  = rep.carrier();
    std::size_t       N  = 1;
    for (std::size_t k = 0; k < m; ++k) {
      if (N > cap / std::max<std::size_t>(Y, 1)) {
        throw CapExceeded("ker construction: carrier exceeds the cap");
      }
      N *= Y;
    }
    if (N > cap) {
      throw CapExceeded("ker construction: carrier exceeds the cap");
    }
    std::size_t stride = 1;
    std::vector<std::size_t> strides(m);
    for (std::size_t k = m; k-- > 0;) {
      strides[k] = stride;
      stride *= Y;
    }
    std::size_t diag = 0;
    for (auto s : strides) {
      diag += s;
    }
    std::vector<Transformation> maps;
    std::vector<std::string>    names;
    for (Index u = 0; u < rep.size(); ++u) {
      std::size_t const  l = gd.l_classes.block_of(u);
      std::vector<Point> im(N);
      for (std::size_t t = 0; t < N; ++t) {
        Point a = static_cast<Point>((t / strides[l]) % Y);
        im[t]   = static_cast<Point>(rep.map(u)(a) * diag);
      }
      maps.emplace_back(std::move(im));
      names.push_back(rep.name(u));
    }
    Representation out(N, std::move(maps), std::move(names), rep.products());
    if (!validate_representation(out).valid) {
      throw Error("ker construction: result is not a partial homomorphism");
    }
    return out;
  }

  bool is_action_embedding(Representation const&    A,
                           Representation const&    B,
                           RepresentationMap const& kappa) {
    if (kappa.points.size() != A.carrier()
        || kappa.elements.size() != A.size() || A.size() != B.size()) {
      return false;
    }
    std::set<Point> pts;
    for (Point y : kappa.points) {
      if (y >= B.carrier() || !pts.insert(y).second) {
        return false;
      }
    }
    std::set<Index> els;
    for (Index s : kappa.elements) {
      if (s >= B.size() || !els.insert(s).second) {
        return false;
      }
    }
    for (Index s = 0; s < A.size(); ++s) {
      auto const& f = A.map(s);
      auto const& g = B.map(kappa.elements[s]);
      for (Point y = 0; y < A.carrier(); ++y) {
        if (kappa.points[f(y)] != g(kappa.points[y])) {
          return false;
        }
      }
    }
    return true;
  }

  DiagonalEmbedding embed_diagonal(Representation const& rep,
                                   std::size_t           cap) {
    auto cls = classify_r_rep(rep);
    if (!cls.is_r_rep || !cls.faithful_direct || !cls.reduced) {
      throw PreconditionError(
          "embed: need a faithful reduced R-representation");
    }
    auto const                  JY = range_of(rep);
    std::vector<Transformation> restricted;
    for (auto const& t : rep.maps()) {
      restricted.push_back(t.restrict_to(JY));
    }
    Representation inner(JY.size(), std::move(restricted), {},
                         rep.products());

    DiagonalEmbedding out;
    out.ramified = ramify(inner);
    out.target   = ker_construction(out.ramified.target, cap);
    auto const&       P = out.ramified.matrix;
    std::size_t const m = P.rows();
    std::size_t const V = out.ramified.target.carrier();

    // one idempotent per row of P
    std::vector<Index> idem(m, static_cast<Index>(-1));
    auto               S = zero_extension(rep);
    for (Index u = 0; u < rep.size(); ++u) {
      auto l = triple_at(P, out.ramified.kappa.elements[u]).lambda;
      if (idem[l] == static_cast<Index>(-1) && S.is_idempotent(u)) {
        idem[l] = u;
      }
    }
    std::vector<Point> beta(rep.carrier(), static_cast<Point>(-1));
    for (Index k = 0; k < JY.size(); ++k) {
      beta[JY[k]] = out.ramified.kappa.points[k];
    }
    for (Point y = 0; y < rep.carrier(); ++y) {
      std::vector<Point> a(m);
      for (std::size_t l = 0; l < m; ++l) {
        a[l] = beta[beta[y] != static_cast<Point>(-1) ? y
                                                      : rep.map(idem[l])(y)];
      }
      out.kappa.points.push_back(ker_tuple_index(V, a));
    }
    out.kappa.elements = out.ramified.kappa.elements;
    out.verified       = is_action_embedding(rep, out.target, out.kappa);
    return out;
  }

}  // namespace primrep
