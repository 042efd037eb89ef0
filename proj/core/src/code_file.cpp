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

#include "qecc/code_file.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace qecc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::size_t> parse_count(std::string_view s) {
  s = trim(s);
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

bool is_header_key(std::string_view key) {
  if (key.empty()) return false;
  for (char c : key) {
    if (!(std::islower(static_cast<unsigned char>(c)) || std::isdigit(static_cast<unsigned char>(c)) || c == '-')) {
      return false;
    }
  }
  return true;
}

}  // namespace

Claim Claim::parse(std::string_view text) {
  std::string_view t = trim(text);
  if (t.size() < 2 || t.front() != '[' || t.back() != ']') throw std::invalid_argument("claim must look like [n,s,d]");
  t = t.substr(1, t.size() - 2);
  std::vector<std::string_view> parts;
  for (std::size_t pos = 0;;) {
    const std::size_t comma = t.find(',', pos);
    parts.push_back(trim(t.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (parts.size() != 3) throw std::invalid_argument("claim needs three fields");
  Claim c;
  auto n = parse_count(parts[0]);
  auto s = parse_count(parts[1]);
  if (!n || !s) throw std::invalid_argument("claim n and s must be integers");
  c.n = *n;
  c.s = *s;
  if (parts[2] != "-") {
    auto d = parse_count(parts[2]);
    if (!d) throw std::invalid_argument("claim d must be an integer or -");
    c.d = *d;
  }
  return c;
}

std::string Claim::to_string() const {
  return "[" + std::to_string(n) + "," + std::to_string(s) + "," + (d ? std::to_string(*d) : std::string("-")) + "]";
}

std::string_view kind_name(FileKind kind) {
  switch (kind) {
    case FileKind::kCode:
      return "code";
    case FileKind::kFragment:
      return "fragment";
    case FileKind::kSyndromes:
      return "syndromes";
  }
  return "code";
}

CodeFileError::CodeFileError(std::string origin, std::size_t line, const std::string& what)
    : std::runtime_error(origin + (line ? ":" + std::to_string(line) : std::string()) + ": " + what),
      origin_(std::move(origin)),
      line_(line) {}

CodeFile parse_code_file(std::string_view text, std::string_view origin_view) {
  const std::string origin(origin_view);
  CodeFile file;
  std::optional<int> version;
  std::optional<WordStyle> style;
  std::vector<std::pair<std::size_t, std::string>> body;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view t = trim(line);
    if (t.empty()) continue;
    if (t.front() == '#') {
      const std::string_view rest = trim(t.substr(1));
      const std::size_t colon = rest.find(':');
      if (colon == std::string_view::npos) continue;
      const std::string_view key = trim(rest.substr(0, colon));
      const std::string_view value = trim(rest.substr(colon + 1));
      if (!is_header_key(key)) continue;
      if (key == "format-version") {
        auto v = parse_count(value);
        if (!v || *v != static_cast<std::size_t>(kCodeFileFormatVersion)) {
          throw CodeFileError(origin, line_no, "unsupported format-version '" + std::string(value) + "'");
        }
        version = kCodeFileFormatVersion;
      } else if (key == "name") {
        file.name = std::string(value);
      } else if (key == "kind") {
        if (value == "code") {
          file.kind = FileKind::kCode;
        } else if (value == "fragment") {
          file.kind = FileKind::kFragment;
        } else if (value == "syndromes") {
          file.kind = FileKind::kSyndromes;
        } else {
          throw CodeFileError(origin, line_no, "unknown kind '" + std::string(value) + "'");
        }
      } else if (key == "claimed") {
        try {
          file.claimed = Claim::parse(value);
        } catch (const std::invalid_argument& e) {
          throw CodeFileError(origin, line_no, e.what());
        }
      } else if (key == "source") {
        file.source = std::string(value);
      } else {
        file.extra_headers.emplace_back(std::string(key), std::string(value));
      }
      continue;
    }
    body.emplace_back(line_no, std::string(t));
  }

  if (!version) throw CodeFileError(origin, 0, "missing '# format-version: 1' header");
  if (body.empty()) throw CodeFileError(origin, 0, "no generator rows");

  if (file.kind == FileKind::kSyndromes) {
    std::vector<BitVec> rows;
    for (const auto& [ln, row] : body) {
      try {
        rows.push_back(BitVec::from_string(row));
      } catch (const std::invalid_argument& e) {
        throw CodeFileError(origin, ln, e.what());
      }
      if (rows.back().size() != rows.front().size()) throw CodeFileError(origin, ln, "row length differs from line " +
                                                                                          std::to_string(body.front().first));
    }
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols; ++c) {
      Syndrome syn(rows.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].get(c)) syn.set(r);
      }
      file.syndromes.push_back(std::move(syn));
    }
    file.style = WordStyle::kBinary;
    return file;
  }

  std::vector<PauliWord> rows;
  std::size_t n = 0;
  for (const auto& [ln, row] : body) {
    const WordStyle row_style = row.find('|') != std::string::npos ? WordStyle::kBinary : WordStyle::kLetters;
    if (style && *style != row_style) throw CodeFileError(origin, ln, "mixed letter and binary rows");
    style = row_style;
    try {
      rows.push_back(parse_pauli_word(row, rows.empty() ? std::nullopt : std::optional<std::size_t>(n)));
    } catch (const std::invalid_argument& e) {
      throw CodeFileError(origin, ln, e.what());
    }
    n = rows.back().n();
  }
  file.style = *style;
  file.fragment = CodeFragment(n, std::move(rows));
  return file;
}

CodeFile read_code_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CodeFileError(path.string(), 0, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str(), path.string());
}

std::string write_code_file(const CodeFile& file, std::optional<WordStyle> style) {
  std::string out = "# format-version: " + std::to_string(kCodeFileFormatVersion) + "\n";
  if (!file.name.empty()) out += "# name: " + file.name + "\n";
  out += "# kind: " + std::string(kind_name(file.kind)) + "\n";
  if (file.claimed) out += "# claimed: " + file.claimed->to_string() + "\n";
  if (!file.source.empty()) out += "# source: " + file.source + "\n";
  for (const auto& [k, v] : file.extra_headers) out += "# " + k + ": " + v + "\n";
  if (file.kind == FileKind::kSyndromes) {
    const std::size_t bits = file.syndromes.empty() ? 0 : file.syndromes.front().size();
    for (std::size_t r = 0; r < bits; ++r) {
      for (const auto& syn : file.syndromes) out += syn.get(r) ? '1' : '0';
      out += '\n';
    }
    return out;
  }
  const WordStyle s = style.value_or(file.style);
  for (const auto& row : file.fragment.rows) out += format_pauli_word(row, s) + "\n";
  return out;
}

CodeFile make_code_file(std::string name, FileKind kind, const CodeFragment& fragment, std::string source,
                        std::optional<std::size_t> claimed_d) {
  CodeFile f;
  f.name = std::move(name);
  f.kind = kind;
  f.claimed = Claim{fragment.n, fragment.s(), claimed_d};
  f.source = std::move(source);
  f.style = WordStyle::kLetters;
  f.fragment = fragment;
  return f;
}

}  // namespace qecc
