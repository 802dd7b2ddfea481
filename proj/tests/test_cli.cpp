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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "fixtures.hpp"
#include "primrep/analysis.hpp"
#include "primrep/cli.hpp"
#include "primrep/io.hpp"

using namespace primrep;
using namespace primrep::fixtures;
namespace fs = std::filesystem;

namespace {
  struct Result {
    int         status;
    std::string out;
    std::string err;
  };

  Result run(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int                s = cli::run(args, out, err);
    return {s, out.str(), err.str()};
  }

  fs::path dir() {
    static fs::path d = [] {
      auto p = fs::temp_directory_path() / "primrep_cli_test";
      fs::create_directories(p);
      return p;
    }();
    return d;
  }

  std::string write(std::string const& name, std::string const& text) {
    auto          p = dir() / name;
    std::ofstream f(p);
    f << text;
    return p.string();
  }

  std::string write(std::string const& name, io::json const& j) {
    return write(name, j.dump());
  }

  bool contains(std::string const& s, std::string const& needle) {
    return s.find(needle) != std::string::npos;
  }

  io::json parse(Result const& r) {
    REQUIRE(r.status == 0);
    return io::json::parse(r.out);
  }

  // (0 1 2 3) on four points, preserving {{0,2},{1,3}}.
  Representation cycle4() {
    return Representation(4, {Transformation({1, 2, 3, 0})});
  }
}  // namespace

TEST_CASE("green reports the J-classes") {
  auto r = run({"green", write("t2.json", io::to_json(T2()))});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "2 J-classes"));
  auto j = parse(run({"--json", "green", write("t2.json", io::to_json(T2()))}));
  CHECK(j["j_classes"] == 2);
}

TEST_CASE("theta and the matrix predicates") {
  auto p5 = write("p5.json", io::to_json(P5()));
  CHECK(run({"theta", p5}).out.rfind("4 classes, trivial", 0) == 0);
  auto p2 = write("p2.json", io::to_json(P2()));
  CHECK(contains(run({"graph", p2}).out, "connected: yes"));
  CHECK(contains(run({"reductive", p2}).out,
                 "left reductive: yes, right reductive: yes"));
  CHECK(contains(run({"transitive", "--oracle", p2}).out,
                 "transitive: yes; oracle: agree"));
  CHECK(contains(run({"cyclic", "--oracle", p5}).out,
                 "cyclic: yes"));
  CHECK(contains(run({"cyclic", "--oracle", p5}).out, "oracle: agree"));
}

TEST_CASE("cyclic with an initial state") {
  auto P = RamifiedMatrix(A1(), 2, 2,
                          {RamifiedEntry::group(0),
                           RamifiedEntry::constant(1),
                           RamifiedEntry::constant(0),
                           RamifiedEntry::group(0)});
  std::string f = write("split.json", io::to_json(P));
  auto r = run({"--oracle", "cyclic", f, "--initial", "0:0,1:0"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "cyclic: no; oracle: agree"));
  CHECK(run({"--quiet", "cyclic", f, "--initial", "0:0,1:0"}).status == 1);
  CHECK(run({"cyclic", f, "--initial", "0:0;1:0"}).status == 2);
  CHECK(run({"cyclic", f, "--initial", "0:0,5:0"}).status == 2);
}

TEST_CASE("primitive with oracle") {
  auto rep = write("lp2.json", io::to_json(build_action(P2(), true)));
  auto r   = run({"primitive", "--oracle", rep});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "primitive: yes; oracle: agree"));
  auto m = write("p2.json", io::to_json(P2()));
  CHECK(contains(run({"--oracle", "primitive", m}).out,
                 "primitive: yes; oracle: agree"));

  auto c4 = write("c4.json", io::to_json(cycle4()));
  auto no = run({"--oracle", "primitive", c4});
  CHECK(no.status == 0);
  CHECK(contains(no.out, "primitive: no; oracle: agree"));
  CHECK(contains(no.out, "witness: "));
  auto q = run({"--quiet", "primitive", c4});
  CHECK(q.status == 1);
  CHECK(q.out.empty());
  CHECK(q.err.empty());
  CHECK(run({"--quiet", "primitive", rep}).status == 0);
}

TEST_CASE("search-transitive") {
  auto a1 = write("a1.json", io::to_json(A1()));
  auto a2 = write("a2.json", io::to_json(A2()));
  auto q1 = write("q1.json", io::to_json(Q1()));
  auto q2 = write("q2.json", io::to_json(Q2()));
  CHECK(contains(run({"search-transitive", q1, a2}).out,
                 "candidates: 1, passing: 1"));
  auto j = parse(run({"--json", "search-transitive", q2, a2}));
  CHECK(j["candidates"] == 4);
  // passing set agrees with running both filters directly
  std::size_t expect = 0;
  for (auto const& P : enumerate_c_ramifications(Q2(), A2())) {
    auto th = theta(P);
    expect += transitivity_check(P, th) && faithful_ramified(P, th).faithful;
  }
  CHECK(j["passing"].size() == expect);

  auto q2z1 = write("q2z1.json",
                    io::to_json(SandwichMatrix(
                        Z1(), 2, 2, {0, std::nullopt, std::nullopt, 0})));
  CHECK(contains(run({"search-transitive", q2z1, a1}).out, "passing: 0"));
  CHECK(run({"--quiet", "search-transitive", q2z1, a1}).status == 1);
  // Z2 does not embed in the trivial group
  CHECK(run({"search-transitive", q2, a1}).status == 2);
  CHECK(run({"--cap", "3", "search-transitive", q2, a2}).status == 2);
}

TEST_CASE("rees-extract and sandwich-equiv") {
  auto t2 = write("t2.json", io::to_json(T2()));
  CHECK(run({"rees-extract", t2}).status == 2);
  auto g  = green(T2());
  Index top = 0;
  for (auto const& c : regular_jclasses(T2(), g)) {
    if (jclass_elements(g, c.j_class).size() > 1) {
      top = c.j_class;
    }
  }
  auto j = parse(run({"--json", "rees-extract", t2, "--jclass",
                      std::to_string(top)}));
  auto q = write("extracted.json", j["matrix"]);
  auto r = run({"--oracle", "sandwich-equiv", q, q});
  CHECK(contains(r.out, "sandwich equivalent: yes; oracle: agree"));
  auto q1 = write("q1.json", io::to_json(Q1()));
  auto q2 = write("q2.json", io::to_json(Q2()));
  CHECK(contains(run({"--oracle", "sandwich-equiv", q1, q2}).out,
                 "sandwich equivalent: no; oracle: agree"));
  CHECK(run({"rees-extract", t2, "--jclass", "99"}).status == 2);
}

TEST_CASE("equiv, build and hull") {
  auto p2 = write("p2.json", io::to_json(P2()));
  auto p5 = write("p5.json", io::to_json(P5()));
  CHECK(contains(run({"--oracle", "equiv", p2, p2}).out,
                 "matrix equivalent: yes; oracle: agree"));
  CHECK(contains(run({"--oracle", "equiv", p2, p5}).out,
                 "matrix equivalent: no; oracle: agree"));
  CHECK(run({"--quiet", "equiv", p2, p5}).status == 1);
  auto l = parse(run({"--json", "build", p2}));
  auto u = parse(run({"--json", "build", p2, "--kind", "U"}));
  CHECK(l["representation"]["carrier"] == theta(P2()).num_blocks());
  CHECK(u["representation"]["carrier"] == P2().num_vectors());
  CHECK(run({"build", p2, "--kind", "X"}).status == 2);
  auto h = parse(run({"--json", "hull", p2}));
  CHECK(h["size"].get<std::size_t>() >= l["representation"]["elements"].size());
}

TEST_CASE("JSON reports round-trip") {
  auto p2 = write("p2.json", io::to_json(P2()));
  auto j  = parse(run({"--json", "--seed", "42", "invariant", p2}));
  CHECK(j["seed"] == 42);
  CHECK(j["primitive"] == true);
  auto m = write("cert.json", j["matrix"]);
  for (auto cmd : {"theta", "graph", "reductive", "transitive", "cyclic",
                   "primitive"}) {
    auto a = parse(run({"--json", cmd, p2}));
    auto b = parse(run({"--json", cmd, m}));
    a.erase("blocks");
    b.erase("blocks");
    CHECK_MESSAGE(a == b, cmd);
  }
  CHECK(contains(run({"equiv", p2, m}).out, "matrix equivalent: yes"));

  auto rep = write("l.json", parse(run({"--json", "build", p2}))["representation"]);
  CHECK(parse(run({"--json", "primitive", rep}))["primitive"] == true);
  auto again = parse(run({"--json", "invariant", rep}));
  CHECK(again["matrix"] == j["matrix"]);
}

TEST_CASE("bad input exits with status 2") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"theta"}).status == 2);
  CHECK(run({"theta", (dir() / "missing.json").string()}).status == 2);
  CHECK(run({"theta", write("bad.json", std::string("{not json"))}).status
        == 2);
  CHECK(run({"theta", write("t2.json", io::to_json(T2()))}).status == 2);
  auto bad = run({"green", write("nonassoc.json",
                                 std::string(R"({"elements":2,"table":[[1,1],[0,0]]})"))});
  CHECK(bad.status == 2);
  CHECK(contains(bad.err, "error"));
  CHECK(run({"--quiet", "theta", (dir() / "missing.json").string()}).err.empty());
  CHECK(run({"--help"}).status == 0);
}
