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

#include "primrep/io.hpp"

#include <fstream>

#include "primrep/error.hpp"

namespace primrep::io {

  namespace {
    json const& field(json const& j, char const* key) {
      if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
      }
      return j.at(key);
    }

    std::size_t count(json const& j, char const* key) {
      auto const& v = field(j, key);
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v >= 0)) {
        throw ParseError(std::string("\"") + key
                         + "\" must be a non-negative integer");
      }
      return v.get<std::size_t>();
    }

    std::vector<Point> points(json const& j, std::size_t degree) {
      if (!j.is_array()) {
        throw ParseError("expected an array of points");
      }
      std::vector<Point> out;
      for (auto const& x : j) {
        if (!x.is_number_integer() || x < 0 || x.get<std::size_t>() >= degree) {
          throw ParseError("point out of range in " + j.dump());
        }
        out.push_back(x.get<Point>());
      }
      if (out.size() != degree) {
        throw ParseError("map " + j.dump() + " is not on "
                         + std::to_string(degree) + " points");
      }
      return out;
    }

    std::vector<std::vector<Index>> table(json const& j) {
      if (!j.is_array()) {
        throw ParseError("\"table\" must be an array of rows");
      }
      std::vector<std::vector<Index>> out;
      for (auto const& row : j) {
        if (!row.is_array() || row.size() != j.size()) {
          throw ParseError("\"table\" must be square");
        }
        std::vector<Index> r;
        for (auto const& x : row) {
          if (!x.is_number_integer() || x < 0 || x.get<std::size_t>() >= j.size()) {
            throw ParseError("table entry out of range");
          }
          r.push_back(x.get<Index>());
        }
        out.push_back(std::move(r));
      }
      return out;
    }

    std::vector<json> grid(json const& j, std::size_t m, std::size_t n) {
      auto const& e = field(j, "entries");
      if (!e.is_array() || e.size() != m) {
        throw ParseError("\"entries\" must have one row per matrix row");
      }
      std::vector<json> out;
      for (auto const& row : e) {
        if (!row.is_array() || row.size() != n) {
          throw ParseError("\"entries\" row has the wrong length");
        }
        for (auto const& x : row) {
          out.push_back(x);
        }
      }
      return out;
    }

    // Library precondition failures on malformed data become parse errors.
    template <typename F>
    auto guarded(F&& f) {
      try {
        return f();
      } catch (ParseError const&) {
        throw;
      } catch (Error const& e) {
        throw ParseError(e.what());
      }
    }
  }  // namespace

  json read_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw ParseError("cannot open " + path);
    }
    try {
      return json::parse(in);
    } catch (json::parse_error const& e) {
      throw ParseError(path + ": " + e.what());
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Semigroups and actions
  ////////////////////////////////////////////////////////////////////////

  FiniteSemigroup parse_semigroup(json const& j) {
    return guarded([&] {
      if (j.is_object() && j.contains("table")) {
        auto t = table(j.at("table"));
        if (j.contains("elements") && count(j, "elements") != t.size()) {
          throw ParseError("\"elements\" does not match the table size");
        }
        auto S = FiniteSemigroup::from_table(t);
        if (!S.is_associative()) {
          throw ParseError("table is not associative");
        }
        return S;
      }
      std::size_t const           n = count(j, "degree");
      std::vector<Transformation> gens;
      for (auto const& g : field(j, "generators")) {
        gens.emplace_back(points(g, n));
      }
      if (gens.empty()) {
        throw ParseError("no generators");
      }
      return close(gens);
    });
  }

  json to_json(FiniteSemigroup const& S) {
    json out;
    if (S.has_carrier()) {
      out["degree"] = S.degree();
      json gens     = json::array();
      for (Index g : S.generators()) {
        auto im = S.carrier(g).images();
        gens.push_back(std::vector<Point>(im.begin(), im.end()));
      }
      out["generators"] = gens;
      return out;
    }
    out["elements"] = S.size();
    json t          = json::array();
    for (Index a = 0; a < S.size(); ++a) {
      json row = json::array();
      for (Index b = 0; b < S.size(); ++b) {
        row.push_back(S.product(a, b));
      }
      t.push_back(row);
    }
    out["table"] = t;
    return out;
  }

  GroupAction parse_action(json const& j) {
    return guarded([&] {
      if (j.is_object() && j.contains("table")) {
        return GroupAction::from_table(table(j.at("table")));
      }
      std::size_t const           n = count(j, "degree");
      std::vector<Transformation> gens;
      for (auto const& g : field(j, "group_generators")) {
        gens.emplace_back(points(g, n));
      }
      return GroupAction::from_generators(n, gens);
    });
  }

  json to_json(GroupAction const& A) {
    json gens = json::array();
    for (Index g : A.generators()) {
      auto im = A.element(g).images();
      gens.push_back(std::vector<Point>(im.begin(), im.end()));
    }
    return {{"degree", A.degree()}, {"group_generators", gens}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Matrices
  ////////////////////////////////////////////////////////////////////////

  SandwichMatrix parse_sandwich(json const& j) {
    return guarded([&] {
      auto              G = parse_action(field(j, "group"));
      std::size_t const m = count(j, "rows");
      std::size_t const n = count(j, "cols");
      std::vector<std::optional<Index>> entries;
      for (auto const& x : grid(j, m, n)) {
        if (x.is_null() || (x.is_number_integer() && x == 0)) {
          entries.emplace_back();
          continue;
        }
        if (!x.is_string() || x.get<std::string>().size() < 2
            || x.get<std::string>()[0] != 'g') {
          throw ParseError("sandwich entry " + x.dump()
                           + " is neither \"g<k>\" nor 0");
        }
        std::size_t k;
        try {
          k = std::stoul(x.get<std::string>().substr(1));
        } catch (std::exception const&) {
          throw ParseError("bad group element " + x.dump());
        }
        if (k >= G.order()) {
          throw ParseError("group element " + x.dump() + " out of range");
        }
        entries.emplace_back(static_cast<Index>(k));
      }
      return SandwichMatrix(G, m, n, std::move(entries));
    });
  }

  json to_json(SandwichMatrix const& Q) {
    json rows = json::array();
    for (std::size_t l = 0; l < Q.rows; ++l) {
      json row = json::array();
      for (std::size_t i = 0; i < Q.cols; ++i) {
        auto q = Q.at(l, i);
        row.push_back(q ? json("g" + std::to_string(*q)) : json(0));
      }
      rows.push_back(row);
    }
    return {{"group", to_json(Q.group)},
            {"rows", Q.rows},
            {"cols", Q.cols},
            {"entries", rows}};
  }

  RamifiedMatrix parse_ramified(json const& j) {
    return guarded([&] {
      auto              A = parse_action(field(j, "action"));
      std::size_t const m = count(j, "rows");
      std::size_t const n = count(j, "cols");
      std::vector<RamifiedEntry> entries;
      for (auto const& x : grid(j, m, n)) {
        if (x.is_object() && x.contains("const")) {
          auto const& c = x.at("const");
          if (!c.is_number_integer() || c < 0
              || c.get<std::size_t>() >= A.degree()) {
            throw ParseError("constant out of range in " + x.dump());
          }
          entries.push_back(RamifiedEntry::constant(c.get<Point>()));
        } else if (x.is_object() && x.contains("perm")) {
          Transformation t(points(x.at("perm"), A.degree()));
          auto           g = A.index_of(t);
          if (!g) {
            throw ParseError("permutation " + x.dump()
                             + " is not in the group");
          }
          entries.push_back(RamifiedEntry::group(*g));
        } else if (x.is_object() && x.contains("map")) {
          Transformation t(points(x.at("map"), A.degree()));
          entries.push_back(normalize_entry(A, t));
        } else {
          throw ParseError("matrix entry " + x.dump()
                           + " needs \"perm\", \"const\" or \"map\"");
        }
      }
      return RamifiedMatrix(A, m, n, std::move(entries));
    });
  }

  json to_json(RamifiedMatrix const& P) {
    json rows = json::array();
    for (std::size_t l = 0; l < P.rows(); ++l) {
      json row = json::array();
      for (std::size_t i = 0; i < P.cols(); ++i) {
        auto const& e = P.at(l, i);
        switch (e.kind) {
          case RamifiedEntry::Kind::perm: {
            auto im = P.action().element(e.perm).images();
            row.push_back({{"perm", std::vector<Point>(im.begin(), im.end())}});
            break;
          }
          case RamifiedEntry::Kind::constant:
            row.push_back({{"const", e.point}});
            break;
          default: {
            auto im = e.map.images();
            row.push_back({{"map", std::vector<Point>(im.begin(), im.end())}});
          }
        }
      }
      rows.push_back(row);
    }
    return {{"action", to_json(P.action())},
            {"rows", P.rows()},
            {"cols", P.cols()},
            {"entries", rows}};
  }

  ////////////////////////////////////////////////////////////////////////
  // Representations
  ////////////////////////////////////////////////////////////////////////

  Representation parse_representation(json const& j) {
    return guarded([&] {
      std::size_t const           n = count(j, "carrier");
      std::vector<Transformation> maps;
      std::vector<std::string>    names;
      for (auto const& e : field(j, "elements")) {
        maps.emplace_back(points(field(e, "map"), n));
        names.push_back(e.contains("name") ? e.at("name").get<std::string>()
                                           : "s" + std::to_string(
                                                 maps.size() - 1));
      }
      if (!j.contains("products")) {
        return Representation(n, std::move(maps), std::move(names));
      }
      std::size_t const                 k = maps.size();
      std::vector<std::optional<Index>> products(k * k);
      for (auto const& c : j.at("products")) {
        if (!c.is_array() || c.size() != 3 || !c[0].is_number_integer()
            || !c[1].is_number_integer() || c[0] < 0 || c[1] < 0
            || c[0].get<std::size_t>() >= k || c[1].get<std::size_t>() >= k) {
          throw ParseError("bad product cell " + c.dump());
        }
        if (c[2].is_null()) {
          continue;
        }
        if (!c[2].is_number_integer() || c[2] < 0
            || c[2].get<std::size_t>() >= k) {
          throw ParseError("bad product cell " + c.dump());
        }
        products[c[0].get<std::size_t>() * k + c[1].get<std::size_t>()]
            = c[2].get<Index>();
      }
      return Representation(n, std::move(maps), std::move(names),
                            std::move(products));
    });
  }

  json to_json(Representation const& rep) {
    json elements = json::array();
    for (Index u = 0; u < rep.size(); ++u) {
      auto im = rep.map(u).images();
      elements.push_back(
          {{"name", rep.name(u)},
           {"map", std::vector<Point>(im.begin(), im.end())}});
    }
    json products = json::array();
    for (Index u = 0; u < rep.size(); ++u) {
      for (Index v = 0; v < rep.size(); ++v) {
        auto w = rep.product(u, v);
        products.push_back({u, v, w ? json(*w) : json(nullptr)});
      }
    }
    return {{"carrier", rep.carrier()},
            {"elements", elements},
            {"products", products}};
  }

  json to_json(Partition const& p) {
    return p.blocks();
  }

  json to_json(PermutationalMatrix const& M) {
    return {{"col", M.col}, {"value", M.value}};
  }

}  // namespace primrep::io
