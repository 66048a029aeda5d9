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

#ifndef GK_PRINTER_HPP
#define GK_PRINTER_HPP

#include <string>

#include "gk/calculus.hpp"
#include "gk/term.hpp"

namespace gk {

// Concrete syntax accepted back by the parser. Binders are annotated with
// their types.
std::string print_type(const Type& t);
std::string print_term(const Term& t);
std::string print_sequent(const Sequent& seq,
                          const std::vector<std::string>& labels);

}  // namespace gk

#endif  // GK_PRINTER_HPP
