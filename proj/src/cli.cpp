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

#include "primrep/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "primrep/analysis.hpp"
#include "primrep/error.hpp"
#include "primrep/io.hpp"

namespace primrep::cli {

  namespace {
    using io::json;

    struct Options {
      bool          oracle = false;
      bool          quiet  = false;
      bool          json   = false;
      std::size_t   cap    = kDefaultClosureCap;
      std::uint64_t seed   = 0;
    };

    struct Report {
      std::ostringstream  text;
      json                data = json::object();
      std::optional<bool> decision;
    };

    char const* yes_no(bool b) {
      return b ? "yes" : "no";
    }

    void add_oracle(Report& r, bool verdict, bool oracle) {
      r.text << "; oracle: " << (verdict == oracle ? "agree" : "disagree");
      r.data["oracle"]       = oracle;
      r.data["oracle_agree"] = verdict == oracle;
    }

    std::string vector_name(RamifiedMatrix const& P, Index k) {
      auto v = vector_element(P, k);
      return std::to_string(v.i) + "_" + std::to_string(v.x);
    }

    std::string block_text(std::vector<std::vector<Point>> const& blocks,
                           std::function<std::string(Point)> const& name) {
      std::string s;
      for (auto const& b : blocks) {
        s += s.empty() ? "{" : " {";
        for (std::size_t k = 0; k < b.size(); ++k) {
          s += (k ? "," : "") + name(b[k]);
        }
        s += "}";
      }
      return s;
    }

    std::string point_name(Point p) {
      return std::to_string(p);
    }

    // A representation file, or a ramified matrix standing for (V_θ; L).
    Representation load_rep(std::string const& path) {
      auto j = io::read_file(path);
      if (j.is_object() && j.contains("action")) {
        return build_action(io::parse_ramified(j), true);
      }
      return io::parse_representation(j);
    }

    RamifiedMatrix load_matrix(std::string const& path) {
      return io::parse_ramified(io::read_file(path));
    }

    ////////////////////////////////////////////////////////////////////
    // Commands
    ////////////////////////////////////////////////////////////////////

    void cmd_green(Report& r, std::string const& path) {
      auto S = io::parse_semigroup(io::read_file(path));
      auto g = green(S);
      std::set<Index> regular;
      for (auto const& c : regular_jclasses(S, g)) {
        regular.insert(c.j_class);
      }
      r.text << g.num_j_classes() << " J-classes, " << S.size()
             << " elements\n";
      json classes = json::array();
      for (Index c = 0; c < g.num_j_classes(); ++c) {
        auto elems = jclass_elements(g, c);
        // rows: R-classes, columns: L-classes, cells: H-classes
        std::vector<Index> rs, ls;
        for (Index a : elems) {
          Index rb = g.r_classes.block_of(a), lb = g.l_classes.block_of(a);
          if (std::find(rs.begin(), rs.end(), rb) == rs.end()) {
            rs.push_back(rb);
          }
          if (std::find(ls.begin(), ls.end(), lb) == ls.end()) {
            ls.push_back(lb);
          }
        }
        r.text << "J" << c << ": " << elems.size() << " elements, "
               << rs.size() << " x " << ls.size() << ", "
               << (regular.count(c) ? "regular" : "non-regular") << "\n";
        json egg = json::array();
        for (Index rb : rs) {
          json row = json::array();
          r.text << " ";
          for (Index lb : ls) {
            std::vector<Index> cell;
            for (Index a : elems) {
              if (g.r_classes.block_of(a) == rb
                  && g.l_classes.block_of(a) == lb) {
                cell.push_back(a);
              }
            }
            std::string s;
            for (auto a : cell) {
              s += (s.empty() ? "" : ",") + std::to_string(a);
            }
            r.text << " {" << s << "}";
            row.push_back(cell);
          }
          r.text << "\n";
          egg.push_back(row);
        }
        classes.push_back({{"elements", elems},
                           {"regular", regular.count(c) == 1},
                           {"eggbox", egg}});
      }
      r.data["j_classes"] = g.num_j_classes();
      r.data["size"]      = S.size();
      r.data["classes"]   = classes;
    }

    void cmd_rees_extract(Report& r, std::string const& path,
                          std::optional<Index> jclass) {
      auto S = io::parse_semigroup(io::read_file(path));
      FiniteSemigroup F;
      if (jclass) {
        auto g = green(S);
        if (*jclass >= g.num_j_classes()) {
          throw PreconditionError("no J-class " + std::to_string(*jclass));
        }
        F = principal_factor(S, g, *jclass);
      } else if (is_completely_0_simple(S)) {
        F = S;
      } else {
        throw PreconditionError(
            "semigroup is not completely 0-simple; pick a J-class with "
            "--jclass");
      }
      auto x = extract_rees(F);
      r.text << "group of order " << x.group.order() << ", "
             << x.matrix.rows << " x " << x.matrix.cols
             << " sandwich matrix\n";
      for (std::size_t l = 0; l < x.matrix.rows; ++l) {
        r.text << " ";
        for (std::size_t i = 0; i < x.matrix.cols; ++i) {
          auto q = x.matrix.at(l, i);
          r.text << " " << (q ? "g" + std::to_string(*q) : std::string("0"));
        }
        r.text << "\n";
      }
      r.data["matrix"]   = io::to_json(x.matrix);
      json iso = json::array();
      for (auto const& t : x.iso) {
        iso.push_back(t ? json{t->r, t->g, t->lambda} : json(nullptr));
      }
      r.data["iso"] = iso;
    }

    void cmd_sandwich_equiv(Report& r, Options const& o,
                            std::string const& a, std::string const& b) {
      auto Q  = io::parse_sandwich(io::read_file(a));
      auto Q2 = io::parse_sandwich(io::read_file(b));
      auto w  = sandwich_equivalent(Q, Q2);
      r.decision = w.has_value();
      r.text << "sandwich equivalent: " << yes_no(w.has_value());
      r.data["equivalent"] = w.has_value();
      if (w) {
        r.data["witness"] = {{"U", io::to_json(w->U)},
                             {"V", io::to_json(w->V)},
                             {"phi", w->phi}};
      }
      if (o.oracle) {
        add_oracle(r, w.has_value(),
                   brute_isomorphic(build_rees(Q), build_rees(Q2))
                       .has_value());
      }
      r.text << "\n";
    }

    void cmd_theta(Report& r, std::string const& path) {
      auto P  = load_matrix(path);
      auto th = theta(P);
      r.text << th.num_blocks() << " classes"
             << (th.is_diagonal() ? ", trivial" : "") << "\n  "
             << block_text(th.blocks(), [&](Point k) {
                  return vector_name(P, k);
                })
             << "\n";
      r.data["classes"] = th.num_blocks();
      r.data["trivial"] = th.is_diagonal();
      r.data["blocks"]  = io::to_json(th);
    }

    void cmd_graph(Report& r, std::string const& path) {
      auto P = load_matrix(path);
      auto g = graph(P);
      r.decision = g.connected;
      r.text << P.cols() << " vertices, " << g.edges.size() << " edges";
      for (auto [a, b] : g.edges) {
        r.text << " (" << a << "," << b << ")";
      }
      r.text << "\nconnected: " << yes_no(g.connected) << "\n";
      r.data["edges"]     = g.edges;
      r.data["connected"] = g.connected;
    }

    void cmd_reductive(Report& r, std::string const& path) {
      auto P = load_matrix(path);
      auto d = reductivity(P);
      r.decision = d.left && d.right;
      r.text << "left reductive: " << yes_no(d.left)
             << ", right reductive: " << yes_no(d.right) << "\n";
      r.data["left"]  = d.left;
      r.data["right"] = d.right;
    }

    void cmd_build(Report& r, std::string const& path,
                   std::string const& kind) {
      auto P = load_matrix(path);
      if (kind != "L" && kind != "U") {
        throw PreconditionError("--kind must be L or U");
      }
      auto alpha = kind == "L" ? theta(P) : Partition::diagonal(P.num_vectors());
      auto act   = ramified_action(P, alpha);
      r.text << kind << ": carrier " << act.rep.carrier() << ", "
             << act.triples << " triples, " << act.constants
             << " constants";
      if (act.extra != 0) {
        r.text << ", " << act.extra << " other products";
      }
      r.text << "\n";
      r.data["representation"] = io::to_json(act.rep);
      r.data["triples"]        = act.triples;
      r.data["constants"]      = act.constants;
      r.data["extra"]          = act.extra;
    }

    void cmd_primitive(Report& r, Options const& o, std::string const& path) {
      auto rep  = load_rep(path);
      auto cert = structural_primitivity(rep);
      r.decision = cert.primitive;
      r.text << "primitive: " << yes_no(cert.primitive);
      r.data["primitive"] = cert.primitive;
      if (o.oracle) {
        add_oracle(r, cert.primitive, is_primitive_bruteforce(rep).primitive);
      }
      r.text << "\n";
      if (!cert.primitive) {
        r.text << "reason: " << cert.reason << "\n";
        r.data["reason"] = cert.reason;
      }
      if (cert.witness) {
        r.text << "witness: " << block_text(cert.witness->blocks(), point_name)
               << "\n";
        r.data["witness"] = io::to_json(*cert.witness);
      }
    }

    void cmd_invariant(Report& r, std::string const& path) {
      auto rep  = load_rep(path);
      auto cert = structural_primitivity(rep);
      r.decision = cert.primitive;
      r.text << "primitive: " << yes_no(cert.primitive) << "\n";
      r.data["primitive"] = cert.primitive;
      if (!cert.reason.empty()) {
        r.text << "reason: " << cert.reason << "\n";
        r.data["reason"] = cert.reason;
      }
      if (cert.minimal_functions) {
        r.text << "minimal functions: " << cert.minimal_functions->size()
               << "\n";
        r.data["minimal_functions"] = io::to_json(*cert.minimal_functions);
      }
      if (cert.structure) {
        auto const& s = *cert.structure;
        r.text << "group action: degree " << s.action.degree() << ", order "
               << s.action.order() << "\n"
               << "matrix: " << s.matrix.to_string() << "\n"
               << "kappa on points:";
        for (Point p : s.kappa.points) {
          r.text << " " << p;
        }
        r.text << "\n";
        r.data["action"] = io::to_json(s.action);
        r.data["matrix"] = io::to_json(s.matrix);
        r.data["kappa"]  = {{"points", s.kappa.points},
                            {"elements", s.kappa.elements}};
      }
      if (cert.witness) {
        r.text << "witness: " << block_text(cert.witness->blocks(), point_name)
               << "\n";
        r.data["witness"] = io::to_json(*cert.witness);
      }
    }

    void cmd_equiv(Report& r, Options const& o, std::string const& a,
                   std::string const& b) {
      auto P  = load_matrix(a);
      auto P2 = load_matrix(b);
      auto w  = matrices_equivalent(P, P2);
      r.decision = w.has_value();
      r.text << "matrix equivalent: " << yes_no(w.has_value());
      r.data["equivalent"] = w.has_value();
      if (w) {
        r.data["witness"] = {{"A", io::to_json(w->A)},
                             {"B", io::to_json(w->B)},
                             {"points", w->beta.points},
                             {"group", w->beta.group}};
      }
      if (o.oracle) {
        add_oracle(r, w.has_value(),
                   brute_isomorphic(
                       transformation_semigroup(build_action(P, true)),
                       transformation_semigroup(build_action(P2, true)))
                       .has_value());
      }
      r.text << "\n";
    }

    Representation triple_action(RamifiedMatrix const& P) {
      auto act = ramified_action(P, theta(P));
      std::vector<Transformation> maps(act.rep.maps().begin(),
                                       act.rep.maps().begin() + act.triples);
      return Representation(act.rep.carrier(), std::move(maps));
    }

    void cmd_transitive(Report& r, Options const& o, std::string const& path) {
      auto P = load_matrix(path);
      bool t = transitivity_check(P, theta(P));
      r.decision = t;
      r.text << "transitive: " << yes_no(t);
      r.data["transitive"] = t;
      if (o.oracle) {
        auto J    = triple_action(P);
        bool full = true;
        for (Point y = 0; y < J.carrier(); ++y) {
          std::set<Point> s;
          for (auto const& f : J.maps()) {
            s.insert(f(y));
          }
          full = full && s.size() == J.carrier();
        }
        add_oracle(r, t, full);
      }
      r.text << "\n";
    }

    std::vector<VectorElement> parse_initial(std::string const& spec) {
      std::vector<VectorElement> out;
      std::stringstream          ss(spec);
      std::string                item;
      while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) {
          throw io::ParseError("--initial expects i:x,i:x,...");
        }
        try {
          out.push_back({static_cast<Index>(std::stoul(item.substr(0, colon))),
                         static_cast<Point>(std::stoul(item.substr(colon + 1)))});
        } catch (std::exception const&) {
          throw io::ParseError("--initial expects i:x,i:x,...");
        }
      }
      return out;
    }

    void cmd_cyclic(Report& r, Options const& o, std::string const& path,
                    std::string const& initial) {
      auto P  = load_matrix(path);
      auto th = theta(P);
      std::optional<std::vector<VectorElement>> init;
      if (!initial.empty()) {
        init = parse_initial(initial);
        for (auto const& v : *init) {
          if (v.i >= P.cols() || v.x >= P.degree()) {
            throw io::ParseError("--initial vector out of range");
          }
        }
      }
      auto v      = cyclicity_check(P, th, init);
      bool cyclic = v.kind != CyclicityVerdict::Kind::not_cyclic;
      r.decision  = cyclic;
      r.text << "cyclic: " << yes_no(cyclic);
      r.data["cyclic"] = cyclic;
      if (v.generator) {
        r.text << " from " << v.generator->i << "_" << v.generator->x;
        r.data["generator"] = {v.generator->i, v.generator->x};
      } else if (v.kind == CyclicityVerdict::Kind::from_initial) {
        r.text << " from the initial state";
      }
      if (v.orbit_union_verdict) {
        r.data["orbit_union"] = *v.orbit_union_verdict;
      }
      if (o.oracle) {
        bool reach = false;
        if (init) {
          auto R = initial_state_representation(P, th, *init);
          std::set<Point> s{static_cast<Point>(R.carrier() - 1)};
          for (auto const& f : R.maps()) {
            s.insert(f(static_cast<Point>(R.carrier() - 1)));
          }
          reach = s.size() == R.carrier();
        } else {
          auto J = triple_action(P);
          for (Point y = 0; y < J.carrier() && !reach; ++y) {
            std::set<Point> s{y};
            for (auto const& f : J.maps()) {
              s.insert(f(y));
            }
            reach = s.size() == J.carrier();
          }
        }
        add_oracle(r, cyclic, reach);
      }
      r.text << "\n";
    }

    void cmd_hull(Report& r, std::string const& path) {
      auto rep  = load_rep(path);
      auto hull = translational_hull(rep);
      auto ms   = minimal_structure(as_representation(hull));
      r.text << "hull: " << hull.size() << " elements, "
             << ms.minimal_functions.size() << " minimal functions\n";
      r.data["size"]              = hull.size();
      r.data["minimal_functions"] = ms.minimal_functions.size();
      r.data["semigroup"]         = io::to_json(hull);
    }

    void cmd_search(Report& r, Options const& o, std::string const& qpath,
                    std::string const& apath) {
      auto Q = io::parse_sandwich(io::read_file(qpath));
      auto A = io::parse_action(io::read_file(apath));
      CRamificationStream s(Q, A);
      if (s.total() > o.cap) {
        throw CapExceeded(std::to_string(s.total())
                          + " candidates exceed the cap "
                          + std::to_string(o.cap));
      }
      json        passing = json::array();
      std::size_t seen    = 0;
      while (auto P = s.next()) {
        ++seen;
        auto th = theta(*P);
        if (transitivity_check(*P, th) && faithful_ramified(*P, th).faithful) {
          passing.push_back(io::to_json(*P));
          r.text << "  " << P->to_string() << "\n";
        }
      }
      std::string head = "candidates: " + std::to_string(seen)
                         + ", passing: " + std::to_string(passing.size())
                         + "\n";
      r.text.str(head + r.text.str());
      r.decision           = !passing.empty();
      r.data["candidates"] = seen;
      r.data["passing"]    = passing;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Primitive representations of finite semigroups"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--oracle", o.oracle, "Cross-check against brute force");
    app.add_flag("--quiet", o.quiet, "Print nothing, report through the exit status");
    app.add_flag("--json", o.json, "Machine-readable output");
    app.add_option("--cap", o.cap, "Enumeration bound");
    app.add_option("--seed", o.seed, "Seed, echoed in JSON reports");

    Report                               report;
    std::function<void()>                action;
    std::vector<std::string>             files;
    std::optional<Index>                 jclass;
    std::string                          kind = "L", initial;

    auto sub = [&](char const* name, char const* help, std::size_t nfiles,
                   std::function<void()> f) {
      auto* c = app.add_subcommand(name, help);
      c->add_option("files", files, "Input files")->required()->expected(
          static_cast<int>(nfiles));
      c->fallthrough();
      c->callback([&action, f] { action = f; });
      return c;
    };
    sub("green", "Green's relations and eggbox", 1,
        [&] { cmd_green(report, files[0]); });
    sub("rees-extract", "Sandwich matrix of a completely 0-simple semigroup",
        1, [&] { cmd_rees_extract(report, files[0], jclass); })
        ->add_option("--jclass", jclass, "Use the principal factor of this J-class");
    sub("sandwich-equiv", "Equivalence of two sandwich matrices", 2,
        [&] { cmd_sandwich_equiv(report, o, files[0], files[1]); });
    sub("theta", "The relation theta on monomial vectors", 1,
        [&] { cmd_theta(report, files[0]); });
    sub("graph", "Column graph and its connectivity", 1,
        [&] { cmd_graph(report, files[0]); });
    sub("reductive", "Left and right reductivity", 1,
        [&] { cmd_reductive(report, files[0]); });
    sub("build", "The L or U action of a matrix", 1,
        [&] { cmd_build(report, files[0], kind); })
        ->add_option("--kind", kind, "L (quotient by theta) or U");
    sub("primitive", "Structural primitivity decision", 1,
        [&] { cmd_primitive(report, o, files[0]); });
    sub("invariant", "Structural certificate", 1,
        [&] { cmd_invariant(report, files[0]); });
    sub("equiv", "Equivalence of two c-ramified matrices", 2,
        [&] { cmd_equiv(report, o, files[0], files[1]); });
    sub("transitive", "Transitivity criterion", 1,
        [&] { cmd_transitive(report, o, files[0]); });
    sub("cyclic", "Cyclicity criterion", 1,
        [&] { cmd_cyclic(report, o, files[0], initial); })
        ->add_option("--initial", initial, "Initial state i:x,i:x,... (one per row)");
    sub("hull", "Translational hull", 1, [&] { cmd_hull(report, files[0]); });
    sub("search-transitive",
        "Transitive faithful c-ramifications of a sandwich matrix", 2,
        [&] { cmd_search(report, o, files[0], files[1]); });

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
      app.parse(rev);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kOk;
    } catch (CLI::ParseError const& e) {
      err << e.what() << "\n";
      return kBadInput;
    }

    try {
      action();
    } catch (io::ParseError const& e) {
      if (!o.quiet) {
        err << "parse error: " << e.what() << "\n";
      }
      return kBadInput;
    } catch (Error const& e) {
      if (!o.quiet) {
        err << "error: " << e.what() << "\n";
      }
      return kBadInput;
    }

    if (!o.quiet) {
      if (o.json) {
        report.data["seed"] = o.seed;
        out << report.data.dump(2) << "\n";
      } else {
        out << report.text.str();
      }
    }
    if (o.quiet && report.decision && !*report.decision) {
      return kNo;
    }
    return kOk;
  }

}  // namespace primrep::cli
