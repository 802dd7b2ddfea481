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

#ifndef PRIMREP_IO_HPP_
#define PRIMREP_IO_HPP_

#include <string>

#include "json.hpp"

#include "group_action.hpp"
#include "partition.hpp"
#include "ramified.hpp"
#include "rees.hpp"
#include "representation.hpp"
#include "semigroup.hpp"

namespace primrep::io {

  using nlohmann::json;

  //! Raised for input that does not match its schema.
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  json read_file(std::string const& path);

  //! {"degree": n, "generators": [[...]]} or {"elements": k,
  //! "table": [[...]]}.
  FiniteSemigroup parse_semigroup(json const& j);
  json            to_json(FiniteSemigroup const& S);

  //! {"degree": n, "group_generators": [[...]]}, or {"table": [[...]]} for
  //! a group acting on itself.
  GroupAction parse_action(json const& j);
  json        to_json(GroupAction const& A);

  //! {"group": {...}, "rows": m, "cols": n, "entries": [[...]]}; an entry
  //! is "g<k>" for group element k, 0 or null for zero.
  SandwichMatrix parse_sandwich(json const& j);
  json           to_json(SandwichMatrix const& Q);

  //! {"action": {...}, "rows": m, "cols": n, "entries": [[{"perm": [...]} |
  //! {"const": x} | {"map": [...]}]]}.
  RamifiedMatrix parse_ramified(json const& j);
  json           to_json(RamifiedMatrix const& P);

  //! {"carrier": n, "elements": [{"name": ..., "map": [...]}], "products":
  //! [[i, j, k-or-null]]}. Without "products" the table is inferred; with
  //! it, unlisted cells are undefined.
  Representation parse_representation(json const& j);
  json           to_json(Representation const& rep);

  json to_json(Partition const& p);
  json to_json(PermutationalMatrix const& M);

}  // namespace primrep::io

#endif  // PRIMREP_IO_HPP_
