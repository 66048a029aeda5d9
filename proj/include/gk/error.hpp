// Copyright 2026 The gkernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GK_ERROR_HPP
#define GK_ERROR_HPP

#include <stdexcept>
#include <string>

namespace gk {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct TypeError : Error {
  using Error::Error;
};

// Raised when a unification or matching problem falls outside the
// higher-order pattern fragment. Callers must not treat this as failure.
struct NonPatternError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

struct StratificationError : Error {
  using Error::Error;
};

struct RuleError : Error {
  using Error::Error;
};

struct TacticError : Error {
  using Error::Error;
};

}  // namespace gk

#endif  // GK_ERROR_HPP
