// Copyright 2026 The qecc Authors
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

#include "qecc/catalog.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace qecc {
namespace detail {
const std::vector<std::pair<std::string_view, std::string_view>>& catalog_assets();
}  // namespace detail

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& [id, text] : detail::catalog_assets()) {
      CatalogEntry e;
      e.id = std::string(id);
      e.text = std::string(text);
      e.file = parse_code_file(text, "catalog/" + e.id + ".code");
      if (!e.file.claimed) throw std::logic_error("catalog entry " + e.id + " lacks a claim");
      out.push_back(std::move(e));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(std::string_view id) {
  const auto& all = catalog();
  auto it = std::find_if(all.begin(), all.end(), [&](const auto& e) { return e.id == id; });
  if (it == all.end()) throw std::invalid_argument("unknown catalog id '" + std::string(id) + "'");
  return *it;
}

const CodeFragment& catalog_fragment(std::string_view id) {
  const auto& e = catalog_entry(id);
  if (e.file.kind == FileKind::kSyndromes) {
    throw std::invalid_argument("catalog entry '" + std::string(id) + "' holds syndromes, not rows");
  }
  return e.file.fragment;
}

StabilizerCode catalog_code(std::string_view id) {
  return StabilizerCode::from_fragment(catalog_fragment(id));
}

}  // namespace qecc
