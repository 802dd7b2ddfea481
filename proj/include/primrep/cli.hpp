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

#ifndef PRIMREP_CLI_HPP_
#define PRIMREP_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace primrep::cli {

  //! Exit statuses: 0 success (or a "no" verdict without --quiet), 1 a
  //! "no" verdict under --quiet, 2 bad input or unmet preconditions.
  inline constexpr int kOk       = 0;
  inline constexpr int kNo       = 1;
  inline constexpr int kBadInput = 2;

  //! Runs one command; `args` excludes the program name.
  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err);

}  // namespace primrep::cli

#endif  // PRIMREP_CLI_HPP_
