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

#ifndef GK_TYPE_HPP
#define GK_TYPE_HPP

#include <memory>
#include <string>
#include <vector>

namespace gk {

// Simple types over declared base sorts plus the distinguished sort of
// formulas, "prop". Immutable, structurally shared.
class Type {
 public:
  Type() = default;  // null type, only as a placeholder

  static Type base(std::string name);
  static Type arrow(Type arg, Type result);
  static Type arrow(const std::vector<Type>& args, Type result);
  static Type prop() { return base("prop"); }

  bool is_null() const { return node_ == nullptr; }
  bool is_base() const;
  bool is_arrow() const { return !is_null() && !is_base(); }
  bool is_prop() const { return is_base() && base_name() == "prop"; }

  const std::string& base_name() const;
  Type arg() const;
  Type result() const;

  // Number of leading arrows.
  int arity() const;
  // The base type after all arrows.
  Type target() const;
  // Argument types, outermost first.
  std::vector<Type> args() const;
  // Result after consuming n arguments.
  Type result_after(int n) const;

  bool contains_prop() const;

  bool operator==(const Type& other) const;
  bool operator!=(const Type& other) const { return !(*this == other); }
  bool operator<(const Type& other) const { return str() < other.str(); }

  std::string str() const;

 private:
  struct Node {
    bool is_base;
    std::string name;                  // base only
    std::shared_ptr<const Node> a, b;  // arrow only
  };
  explicit Type(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace gk

#endif  // GK_TYPE_HPP
