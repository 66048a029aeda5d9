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

#include "gk/type.hpp"

#include <cassert>

#include "gk/error.hpp"

namespace gk {

Type Type::base(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_base = true;
  n->name = std::move(name);
  return Type(std::move(n));
}

Type Type::arrow(Type arg, Type result) {
  assert(!arg.is_null() && !result.is_null());
  auto n = std::make_shared<Node>();
  n->is_base = false;
  n->a = arg.node_;
  n->b = result.node_;
  return Type(std::move(n));
}

Type Type::arrow(const std::vector<Type>& args, Type result) {
  Type t = result;
  for (auto it = args.rbegin(); it != args.rend(); ++it) t = arrow(*it, t);
  return t;
}

bool Type::is_base() const { return node_ && node_->is_base; }

const std::string& Type::base_name() const {
  assert(is_base());
  return node_->name;
}

Type Type::arg() const {
  assert(is_arrow());
  return Type(node_->a);
}

Type Type::result() const {
  assert(is_arrow());
  return Type(node_->b);
}

int Type::arity() const {
  int n = 0;
  for (Type t = *this; t.is_arrow(); t = t.result()) ++n;
  return n;
}

Type Type::target() const {
  Type t = *this;
  while (t.is_arrow()) t = t.result();
  return t;
}

std::vector<Type> Type::args() const {
  std::vector<Type> out;
  for (Type t = *this; t.is_arrow(); t = t.result()) out.push_back(t.arg());
  return out;
}

Type Type::result_after(int n) const {
  Type t = *this;
  for (int i = 0; i < n; ++i) {
    if (!t.is_arrow()) throw TypeError("type " + str() + " has arity < " + std::to_string(n));
    t = t.result();
  }
  return t;
}

bool Type::contains_prop() const {
  if (is_null()) return false;
  if (is_base()) return is_prop();
  return arg().contains_prop() || result().contains_prop();
}

bool Type::operator==(const Type& other) const {
  if (node_ == other.node_) return true;
  if (is_null() || other.is_null()) return false;
  if (is_base() != other.is_base()) return false;
  if (is_base()) return base_name() == other.base_name();
  return arg() == other.arg() && result() == other.result();
}

std::string Type::str() const {
  if (is_null()) return "<null>";
  if (is_base()) return base_name();
  std::string lhs = arg().is_arrow() ? "(" + arg().str() + ")" : arg().str();
  return lhs + " -> " + result().str();
}

}  // namespace gk
