// Copyright 2026 The Courant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "courant/indeterminate.hpp"

#include <deque>
#include <mutex>
#include <unordered_map>

#include "courant/errors.hpp"

namespace courant {

namespace {

struct Registry {
  std::mutex mutex;
  std::unordered_map<std::string, std::uint32_t> ids;
  std::deque<std::pair<std::string, IndeterminateKind>> entries;
};

Registry& registry() {
  static Registry instance;
  return instance;
}

}  // namespace

std::uint32_t SymbolTable::intern(const std::string& name, IndeterminateKind kind) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  if (auto it = reg.ids.find(name); it != reg.ids.end()) {
    if (reg.entries[it->second].second != kind) {
      throw Error("symbol '" + name + "' already declared with a different kind");
    }
    return it->second;
  }
  const auto id = static_cast<std::uint32_t>(reg.entries.size());
  reg.entries.emplace_back(name, kind);
  reg.ids.emplace(name, id);
  return id;
}

std::string SymbolTable::name(std::uint32_t id) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  if (id >= reg.entries.size()) throw Error("unknown symbol id");
  return reg.entries[id].first;
}

IndeterminateKind SymbolTable::kind(std::uint32_t id) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  if (id >= reg.entries.size()) throw Error("unknown symbol id");
  return reg.entries[id].second;
}

bool SymbolTable::contains(const std::string& name) {
  auto& reg = registry();
  std::lock_guard lock(reg.mutex);
  return reg.ids.count(name) > 0;
}

Indeterminate Indeterminate::coordinate(std::size_t index) {
  if (index >= kMaxBaseDim) throw Error("coordinate index out of range");
  return {IndeterminateKind::Coordinate, static_cast<std::uint32_t>(index), 0};
}

Indeterminate Indeterminate::parameter(const std::string& name) {
  return {IndeterminateKind::Parameter, SymbolTable::intern(name, IndeterminateKind::Parameter), 0};
}

Indeterminate Indeterminate::function(const std::string& name) {
  return {IndeterminateKind::Jet, SymbolTable::intern(name, IndeterminateKind::Jet), 0};
}

unsigned Indeterminate::total_jet_order() const noexcept {
  unsigned total = 0;
  for (std::size_t k = 0; k < kMaxBaseDim; ++k) total += jet_order(k);
  return total;
}

Indeterminate Indeterminate::differentiated(std::size_t k) const {
  if (kind != IndeterminateKind::Jet) throw Error("only jets carry a multi-index");
  if (k >= kMaxBaseDim) throw Error("coordinate index out of range");
  if (jet_order(k) >= kMaxJetOrderPerCoordinate) throw Error("jet order overflow");
  Indeterminate out = *this;
  out.jet += std::uint64_t{1} << (4 * k);
  return out;
}

std::vector<std::size_t> Indeterminate::multi_index() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < kMaxBaseDim; ++k) {
    for (unsigned c = 0; c < jet_order(k); ++c) out.push_back(k);
  }
  return out;
}

}  // namespace courant
