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

// Plain-text code files.
//
//   # format-version: 1
//   # name: code10
//   # kind: code
//   # claimed: [10,6,3]
//   # source: free text
//   XXZZZZXXII
//   ...
//
// Header lines are `# key: value`; other `#` lines and blank lines are
// ignored. Body rows are letter words (IXZY) or binary words ("x|z"), one
// style per file. Files of kind `syndromes` instead hold plain bit rows whose
// columns are the listed syndromes.

#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qecc/bitvec.hpp"
#include "qecc/stabilizer.hpp"
#include "qecc/symplectic.hpp"

namespace qecc {

inline constexpr int kCodeFileFormatVersion = 1;

/// Claimed parameters [n, generator count, d]; d may be absent ("-").
struct Claim {
  std::size_t n = 0;
  std::size_t s = 0;
  std::optional<std::size_t> d;

  static Claim parse(std::string_view text);
  std::string to_string() const;
  friend bool operator==(const Claim&, const Claim&) = default;
};

enum class FileKind { kCode, kFragment, kSyndromes };
std::string_view kind_name(FileKind kind);

struct CodeFile {
  std::string name;
  FileKind kind = FileKind::kCode;
  std::optional<Claim> claimed;
  std::string source;
  /// Header keys this reader does not interpret, kept in file order.
  std::vector<std::pair<std::string, std::string>> extra_headers;

  WordStyle style = WordStyle::kLetters;
  CodeFragment fragment;          // kinds code and fragment
  std::vector<Syndrome> syndromes;  // kind syndromes: one entry per column
};

class CodeFileError : public std::runtime_error {
 public:
  CodeFileError(std::string origin, std::size_t line, const std::string& what);
  const std::string& origin() const { return origin_; }
  /// 1-based line number, or 0 for whole-file errors.
  std::size_t line() const { return line_; }

 private:
  std::string origin_;
  std::size_t line_;
};

CodeFile parse_code_file(std::string_view text, std::string_view origin = "<input>");
/// Throws CodeFileError, including when the file cannot be opened.
CodeFile read_code_file(const std::filesystem::path& path);

/// Canonical text; `style` overrides the row style (ignored for syndromes).
std::string write_code_file(const CodeFile& file, std::optional<WordStyle> style = std::nullopt);

/// Convenience wrapper for freshly built fragments.
CodeFile make_code_file(std::string name, FileKind kind, const CodeFragment& fragment, std::string source = {},
                        std::optional<std::size_t> claimed_d = std::nullopt);

}  // namespace qecc
