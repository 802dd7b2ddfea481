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

#include "primrep/representation.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>

#include "primrep/error.hpp"

namespace primrep {

  Representation::Representation(
      std::size_t                                      carrier,
      std::vector<Transformation>                      maps,
      std::vector<std::string>                         names,
      std::optional<std::vector<std::optional<Index>>> products)
      : _carrier(carrier), _maps(std::move(maps)), _names(std::move(names)) {
    for (auto const& t : _maps) {
      if (t.degree() != carrier) {
        throw Error("representation: map " + t.to_string()
                    + " is not on " + std::to_string(carrier) + " points");
      }
    }
    if (_names.empty()) {
      for (std::size_t k = 0; k < _maps.size(); ++k) {
        _names.push_back("s" + std::to_string(k));
      }
    } else if (_names.size() != _maps.size()) {
      throw Error("representation: name count does not match element count");
    }
    std::size_t const n = _maps.size();
    if (products) {
      if (products->size() != n * n) {
        throw Error("representation: product table has wrong size");
      }
      for (auto const& w : *products) {
        if (w && *w >= n) {
          throw Error("representation: product " + std::to_string(*w)
                      + " out of range");
        }
      }
      _products = std::move(*products);
    } else {
      std::unordered_map<Transformation, Index, TransformationHash> first;
      for (Index k = 0; k < n; ++k) {
        first.try_emplace(_maps[k], k);
      }
      _products.resize(n * n);
      for (Index u = 0; u < n; ++u) {
        for (Index v = 0; v < n; ++v) {
          auto it = first.find(compose(_maps[u], _maps[v]));
          if (it != first.end()) {
            _products[u * n + v] = it->second;
          }
        }
      }
    }
  }

  std::optional<Index> Representation::find(Transformation const& t) const {
    auto it = std::find(_maps.begin(), _maps.end(), t);
    if (it == _maps.end()) {
      return std::nullopt;
    }
    return static_cast<Index>(it - _maps.begin());
  }

  bool Representation::is_faithful() const {
    std::set<Transformation> seen(_maps.begin(), _maps.end());
    return seen.size() == _maps.size();
  }

  ValidationReport validate_representation(Representation const& rep) {
    ValidationReport report;
    report.faithful = rep.is_faithful();
    for (Index u = 0; u < rep.size() && report.valid; ++u) {
      for (Index v = 0; v < rep.size(); ++v) {
        auto w = rep.product(u, v);
        if (w && rep.map(*w) != compose(rep.map(u), rep.map(v))) {
          report.valid    = false;
          report.bad_cell = {u, v};
          report.message  = "product " + rep.name(u) + " * " + rep.name(v)
                           + " = " + rep.name(*w)
                           + " disagrees with composition";
          break;
        }
      }
    }
    return report;
  }

  Representation expand_constants(Representation const& rep) {
    std::size_t const           Y = rep.carrier();
    std::vector<Transformation> maps(rep.maps().begin(), rep.maps().end());
    std::vector<std::string>    names;
    for (Index u = 0; u < rep.size(); ++u) {
      names.push_back(rep.name(u));
    }
    std::vector<Index> constant(Y);
    for (Point c = 0; c < Y; ++c) {
      auto t = Transformation::constant(Y, c);
      if (auto k = rep.find(t)) {
        constant[c] = *k;
      } else {
        constant[c] = static_cast<Index>(maps.size());
        maps.push_back(t);
        names.push_back("c" + std::to_string(c));
      }
    }
    std::size_t const                 n = maps.size();
    std::vector<std::optional<Index>> products(n * n);
    for (Index u = 0; u < rep.size(); ++u) {
      for (Index v = 0; v < rep.size(); ++v) {
        products[u * n + v] = rep.product(u, v);
      }
    }
    for (Index u = 0; u < n; ++u) {
      for (Index v = 0; v < n; ++v) {
        auto& w = products[u * n + v];
        if (w) {
          continue;
        }
        if (maps[u].is_constant()) {
          w = u;
        } else if (maps[v].is_constant()) {
          w = constant[maps[u](maps[v](0))];
        }
      }
    }
    return Representation(Y, std::move(maps), std::move(names),
                          std::move(products));
  }

  Partition max_deflation(Representation const& rep) {
    std::vector<std::vector<Point>> label(rep.carrier());
    for (Point y = 0; y < rep.carrier(); ++y) {
      for (auto const& t : rep.maps()) {
        label[y].push_back(t(y));
      }
    }
    return Partition::from_labels(label);
  }

  Partition congruence_generated(Representation const&      rep,
                                 std::span<PointPair const> pairs) {
    auto c = compatible_closure(rep.maps(), rep.carrier(), pairs);
    if (!c.is_compatible(rep.maps())) {
      throw Error("congruence_generated: closure is not compatible");
    }
    return c;
  }

  PrimitivityResult is_primitive_bruteforce(Representation const& rep) {
    if (rep.carrier() <= 2) {
      return {true, std::nullopt};
    }
    for (Point a = 0; a < rep.carrier(); ++a) {
      for (Point b = a + 1; b < rep.carrier(); ++b) {
        PointPair pair{a, b};
        auto      c = congruence_generated(
            rep, std::span<PointPair const>(&pair, 1));
        if (!c.is_universal()) {
          return {false, c};
        }
      }
    }
    return {true, std::nullopt};
  }

  MinimalStructure minimal_structure(Representation const& rep) {
    std::set<std::vector<Point>> images;
    for (auto const& t : rep.maps()) {
      auto im = t.image_set();
      if (im.size() > 1) {
        images.insert(std::move(im));
      }
    }
    MinimalStructure out;
    for (auto const& U : images) {
      bool minimal = true;
      for (auto const& W : images) {
        if (W.size() < U.size()
            && std::includes(U.begin(), U.end(), W.begin(), W.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        out.minimal_sets.push_back(U);
      }
    }
    std::set<std::vector<Point>> minimal(out.minimal_sets.begin(),
                                         out.minimal_sets.end());
    for (Index u = 0; u < rep.size(); ++u) {
      if (minimal.count(rep.map(u).image_set()) != 0) {
        out.minimal_functions.push_back(u);
      }
    }
    std::vector<PointPair> pairs;
    for (auto const& U : out.minimal_sets) {
      for (Point y : U) {
        pairs.emplace_back(U.front(), y);
      }
    }
    out.rho = generate_equivalence(pairs, rep.carrier());
    return out;
  }

  FiniteSemigroup transformation_semigroup(Representation const& rep) {
    if (rep.size() == 0) {
      throw PreconditionError("representation has no elements");
    }
    return close(rep.maps());
  }

  Representation as_representation(FiniteSemigroup const& S) {
    if (!S.has_carrier()) {
      throw PreconditionError("semigroup is not a transformation semigroup");
    }
    std::vector<Transformation> maps(S.carriers().begin(), S.carriers().end());
    std::vector<std::optional<Index>> products(S.size() * S.size());
    for (Index a = 0; a < S.size(); ++a) {
      for (Index b = 0; b < S.size(); ++b) {
        products[a * S.size() + b] = S.product(a, b);
      }
    }
    return Representation(S.degree(), std::move(maps), {}, std::move(products));
  }

  bool is_representation_equivalence(Representation const&    A,
                                     Representation const&    B,
                                     RepresentationMap const& kappa) {
    if (A.carrier() != B.carrier() || A.size() != B.size()
        || kappa.points.size() != A.carrier()
        || kappa.elements.size() != A.size()) {
      return false;
    }
    std::vector<bool> hit_p(B.carrier(), false), hit_e(B.size(), false);
    for (Point p : kappa.points) {
      if (p >= B.carrier() || hit_p[p]) {
        return false;
      }
      hit_p[p] = true;
    }
    for (Index e : kappa.elements) {
      if (e >= B.size() || hit_e[e]) {
        return false;
      }
      hit_e[e] = true;
    }
    for (Index s = 0; s < A.size(); ++s) {
      auto const& t = B.map(kappa.elements[s]);
      for (Point y = 0; y < A.carrier(); ++y) {
        if (kappa.points[A.map(s)(y)] != t(kappa.points[y])) {
          return false;
        }
      }
    }
    for (Index u = 0; u < A.size(); ++u) {
      for (Index v = 0; v < A.size(); ++v) {
        auto w  = A.product(u, v);
        auto w2 = B.product(kappa.elements[u], kappa.elements[v]);
        if (w && w2 && kappa.elements[*w] != *w2) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    constexpr Point kUnset = static_cast<Point>(-1);

    struct Profile {
      std::size_t              rank;
      std::vector<std::size_t> kernel;
      bool                     idempotent;
      std::size_t              fixed;

      friend bool operator==(Profile const&, Profile const&) = default;
    };

    Profile profile(Transformation const& t) {
      Profile                    p{t.rank(), {}, t.is_idempotent(), 0};
      std::map<Point, std::size_t> sizes;
      for (Point y = 0; y < t.degree(); ++y) {
        ++sizes[t(y)];
        p.fixed += t(y) == y;
      }
      for (auto const& [_, s] : sizes) {
        p.kernel.push_back(s);
      }
      std::sort(p.kernel.begin(), p.kernel.end());
      return p;
    }

    class PointSearch {
     public:
      PointSearch(std::vector<Transformation> const& a,
                  std::vector<Transformation> const& b,
                  std::size_t                        n)
          : _a(a), _b(b), _n(n), _pi(n, kUnset), _used(n, false) {
        for (auto const& t : b) {
          _lookup.emplace(t, 0);
        }
      }

      std::optional<std::vector<Point>> run() {
        std::vector<std::vector<Index>> cand(_a.size());
        for (std::size_t s = 0; s < _a.size(); ++s) {
          auto ps = profile(_a[s]);
          for (Index t = 0; t < _b.size(); ++t) {
            if (profile(_b[t]) == ps) {
              cand[s].push_back(t);
            }
          }
          if (cand[s].empty()) {
            return std::nullopt;
          }
        }
        if (search(0, cand)) {
          return _pi;
        }
        return std::nullopt;
      }

     private:
      bool consistent(Transformation const& s,
                      Transformation const& t,
                      Point                 p) const {
        if (_pi[s(p)] != kUnset && t(_pi[p]) != _pi[s(p)]) {
          return false;
        }
        for (Point q = 0; q < p; ++q) {
          if (s(q) == p && t(_pi[q]) != _pi[p]) {
            return false;
          }
        }
        return true;
      }

      bool search(Point p, std::vector<std::vector<Index>> const& cand) {
        if (p == _n) {
          return leaf();
        }
        for (Point q = 0; q < _n; ++q) {
          if (_used[q]) {
            continue;
          }
          _pi[p]    = q;
          _used[q]  = true;
          auto next = cand;
          bool ok   = true;
          for (std::size_t s = 0; s < next.size() && ok; ++s) {
            auto& c = next[s];
            c.erase(std::remove_if(c.begin(), c.end(),
                                   [&](Index t) {
                                     return !consistent(_a[s], _b[t], p);
                                   }),
                    c.end());
            ok = !c.empty();
          }
          if (ok && search(p + 1, next)) {
            return true;
          }
          _pi[p]   = kUnset;
          _used[q] = false;
        }
        return false;
      }

      bool leaf() const {
        std::vector<Point> inv(_n);
        for (Point x = 0; x < _n; ++x) {
          inv[_pi[x]] = x;
        }
        for (auto const& s : _a) {
          std::vector<Point> im(_n);
          for (Point y = 0; y < _n; ++y) {
            im[y] = _pi[s(inv[y])];
          }
          if (_lookup.count(Transformation(std::move(im))) == 0) {
            return false;
          }
        }
        return true;
      }

      std::vector<Transformation> const& _a;
      std::vector<Transformation> const& _b;
      std::size_t                        _n;
      std::vector<Point>                 _pi;
      std::vector<bool>                  _used;
      std::unordered_map<Transformation, int, TransformationHash> _lookup;
    };
  }  // namespace

  std::optional<RepresentationMap>
  representation_equivalence(Representation const& A,
                             Representation const& B) {
    if (A.carrier() > 10 || B.carrier() > 10) {
      throw PreconditionError(
          "representation_equivalence: carrier above 10 points");
    }
    if (A.carrier() != B.carrier() || A.size() != B.size()) {
      return std::nullopt;
    }
    std::map<Transformation, std::size_t> ca, cb;
    for (auto const& t : A.maps()) {
      ++ca[t];
    }
    for (auto const& t : B.maps()) {
      ++cb[t];
    }
    if (ca.size() != cb.size()) {
      return std::nullopt;
    }
    std::vector<Transformation> da, db;
    for (auto const& [t, _] : ca) {
      da.push_back(t);
    }
    for (auto const& [t, _] : cb) {
      db.push_back(t);
    }
    std::size_t const n = A.carrier();
    // multiplicities must agree under conjugation, so search on the
    // distinct maps and then check the counts
    auto pi = PointSearch(da, db, n).run();
    if (!pi) {
      return std::nullopt;
    }
    std::vector<Point> inv(n);
    for (Point x = 0; x < n; ++x) {
      inv[(*pi)[x]] = x;
    }
    RepresentationMap                       out;
    out.points = *pi;
    std::map<Transformation, std::vector<Index>> pool;
    for (Index k = B.size(); k-- > 0;) {
      pool[B.map(k)].push_back(k);
    }
    for (Index s = 0; s < A.size(); ++s) {
      std::vector<Point> im(n);
      for (Point y = 0; y < n; ++y) {
        im[y] = (*pi)[A.map(s)(inv[y])];
      }
      auto& bucket = pool[Transformation(std::move(im))];
      if (bucket.empty()) {
        return std::nullopt;
      }
      out.elements.push_back(bucket.back());
      bucket.pop_back();
    }
    if (!is_representation_equivalence(A, B, out)) {
      return std::nullopt;
    }
    return out;
  }

  FiniteSemigroup translational_hull(Representation const& rep) {
    std::size_t const n = rep.carrier();
    if (n > 6) {
      throw PreconditionError("translational_hull: carrier above 6 points");
    }
    std::set<Transformation>    S(rep.maps().begin(), rep.maps().end());
    std::vector<Transformation> elems(S.begin(), S.end());
    // prefixes[k] holds the first k images of every element of S
    std::vector<std::set<std::vector<Point>>> prefixes(n + 1);
    for (auto const& s : elems) {
      for (std::size_t k = 0; k <= n; ++k) {
        prefixes[k].emplace(s.images().begin(), s.images().begin() + k);
      }
    }
    std::vector<Transformation> hull;
    std::vector<Point>          f(n);
    std::function<void(std::size_t)> search = [&](std::size_t k) {
      if (k == n) {
        Transformation t(f);
        for (auto const& s : elems) {
          if (S.count(compose(t, s)) == 0) {
            return;
          }
        }
        hull.push_back(std::move(t));
        return;
      }
      for (Point v = 0; v < n; ++v) {
        f[k]    = v;
        bool ok = true;
        for (auto const& s : elems) {
          std::vector<Point> pre(k + 1);
          for (std::size_t p = 0; p <= k; ++p) {
            pre[p] = s(f[p]);
          }
          if (prefixes[k + 1].count(pre) == 0) {
            ok = false;
            break;
          }
        }
        if (ok) {
          search(k + 1);
        }
      }
    };
    if (n > 0) {
      search(0);
    }
    if (hull.empty()) {
      throw Error("translational_hull: hull is empty");
    }
    return FiniteSemigroup::from_transformations(std::move(hull));
  }

}  // namespace primrep
