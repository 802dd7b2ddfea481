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

#ifndef PRIMREP_ERROR_HPP_
#define PRIMREP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace primrep {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! An enumeration or closure exceeded its configured bound.
  class CapExceeded : public Error {
   public:
    using Error::Error;
  };

  //! Input violates a documented precondition of an operation.
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

}  // namespace primrep

#endif  // PRIMREP_ERROR_HPP_
