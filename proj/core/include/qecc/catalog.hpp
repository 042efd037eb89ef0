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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qecc/code_file.hpp"
#include "qecc/stabilizer.hpp"

namespace qecc {

/// A fixture matrix shipped with the library, stored verbatim as printed in
/// its source even where it contains a misprint (see verify_fixture).
struct CatalogEntry {
  std::string id;
  std::string text;  // the asset exactly as checked in
  CodeFile file;

  const Claim& claimed() const { return *file.claimed; }
};

/// Every entry, sorted by id.
const std::vector<CatalogEntry>& catalog();

/// Throws std::invalid_argument for unknown ids.
const CatalogEntry& catalog_entry(std::string_view id);
const CodeFragment& catalog_fragment(std::string_view id);
/// Validates the entry's rows; throws std::invalid_argument if they do not
/// form a stabilizer code.
StabilizerCode catalog_code(std::string_view id);

}  // namespace qecc
