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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "qecc/catalog.hpp"
#include "qecc/code_file.hpp"
#include "qecc/constructions.hpp"
#include "qecc/distance.hpp"
#include "qecc/fixtures.hpp"
#include "qecc/nesting.hpp"
#include "qecc/search.hpp"

namespace qecc::cli {
namespace {

/// Thrown for bad input files and arguments; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string decimal6(const Rational& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", r.to_double());
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CodeFile load(const std::string& path, std::istream& in) {
  try {
    if (path == "-") {
      std::ostringstream buf;
      buf << in.rdbuf();
      return parse_code_file(buf.str(), "<stdin>");
    }
    return read_code_file(path);
  } catch (const CodeFileError& e) {
    throw UsageError(e.what());
  }
}

const CodeFragment& rows_of(const CodeFile& file) {
  if (file.kind == FileKind::kSyndromes) throw UsageError("file holds a syndrome list, not generator rows");
  return file.fragment;
}

std::string params_text(const StabilizerCode& code, const DistanceReport& d) {
  std::string out = "[" + std::to_string(code.n()) + "," + std::to_string(code.k()) + ",";
  switch (d.status) {
    case DistanceReport::Status::kExact:
      out += std::to_string(d.distance);
      break;
    case DistanceReport::Status::kAtLeast:
      out += ">=" + std::to_string(d.distance);
      break;
    case DistanceReport::Status::kNotApplicableK0:
      out += "-";
      break;
  }
  return out + "]";
}

void print_rate(std::ostream& out, const StabilizerCode& code, const DistanceReport& d) {
  const Classification c = classify(code, d);
  if (c.g) {
    out << "g: " << c.g->to_string() << " (" << decimal6(*c.g) << ") at t=" << c.t << "\n";
  } else {
    out << "g: undefined (t=0)\n";
  }
  out << "perfect: " << yes_no(c.perfect) << "\n";
  out << "g-optimal: " << yes_no(c.g_optimal) << "\n";
}

void print_collision(std::ostream& out, const CollisionReport& r) {
  switch (r.status) {
    case CollisionReport::Status::kCertified:
      out << "collision t=" << r.t << ": certified d>=" << 2 * r.t + 1 << " (" << r.words << " words)\n";
      break;
    case CollisionReport::Status::kRefuted:
      out << "collision t=" << r.t << ": refuted by " << format_pauli_word(r.counterexample->first) << " and "
          << format_pauli_word(r.counterexample->second) << "\n";
      break;
    case CollisionReport::Status::kNotApplicableK0:
      out << "collision t=" << r.t << ": not applicable (k=0)\n";
      break;
  }
  if (r.degenerate_pair) {
    out << "degenerate: " << format_pauli_word(r.degenerate_pair->first) << " and "
        << format_pauli_word(r.degenerate_pair->second) << " share a syndrome, product in S\n";
  }
}

/// Tightest lower bound or exact value from the pieces gathered so far.
DistanceReport merge(const DistanceReport& a, const DistanceReport& b) {
  if (a.status == DistanceReport::Status::kExact) return a;
  if (b.status == DistanceReport::Status::kExact) return b;
  if (a.status == DistanceReport::Status::kNotApplicableK0) return b;
  if (b.status == DistanceReport::Status::kNotApplicableK0) return a;
  return a.distance >= b.distance ? a : b;
}

int cmd_verify(const std::string& path, std::optional<std::size_t> weight, std::optional<std::size_t> t,
               std::istream& in, std::ostream& out) {
  const CodeFile file = load(path, in);
  const CodeFragment& rows = rows_of(file);
  if (!file.name.empty()) out << "name: " << file.name << "\n";
  out << "qubits: " << rows.n << "\n";
  out << "generators: " << rows.s() << "\n";

  auto v = validate(rows);
  if (auto* err = std::get_if<ValidationError>(&v)) {
    out << "valid: no (" << err->message() << ")\n";
    out << "result: FAILED\n";
    return kExitFailed;
  }
  const StabilizerCode code = std::get<StabilizerCode>(std::move(v));
  out << "valid: yes\n";
  const bool d3 = check_distance3(code);
  out << "distance-3 syndromes: " << (d3 ? "pass" : "fail") << "\n";

  DistanceReport d = code.k() == 0 ? DistanceReport::not_applicable() : DistanceReport::at_least(1, 0);
  if (code.k() > 0) {
    if (d3) d = DistanceReport::at_least(3, 1);
    d = merge(d, min_distance(code, weight.value_or(3)));
    if (t) {
      const CollisionReport c = distance_at_least_by_collision(code, *t);
      print_collision(out, c);
      if (c.certified()) d = merge(d, DistanceReport::at_least(2 * c.t + 1, c.t));
    }
  }
  out << "distance: " << d.to_string() << "\n";
  out << "parameters: " << params_text(code, d) << "\n";
  print_rate(out, code, d);
  if (code.s() <= 24) {
    out << "unused syndromes: " << unused_syndromes(code).size() << " of " << (std::uint64_t{1} << code.s()) << "\n";
  }

  bool ok = true;
  if (file.claimed) {
    const Claim& c = *file.claimed;
    std::string verdict = "confirmed";
    if (c.n != code.n() || c.s != code.s()) {
      verdict = "contradicted (shape)";
      ok = false;
    } else if (c.d && d.status != DistanceReport::Status::kNotApplicableK0) {
      if (d.status == DistanceReport::Status::kExact && d.distance != *c.d) {
        verdict = "contradicted (distance " + std::to_string(d.distance) + ")";
        ok = false;
      } else if (d.status == DistanceReport::Status::kAtLeast && d.distance < *c.d) {
        verdict = "distance not confirmed beyond " + std::to_string(d.distance);
      }
    }
    out << "claimed: " << c.to_string() << " " << verdict << "\n";
  }
  out << "result: " << (ok ? "valid" : "FAILED") << "\n";
  return ok ? kExitOk : kExitFailed;
}

int cmd_distance(const std::string& path, std::optional<std::size_t> weight, std::optional<std::size_t> t,
                 std::istream& in, std::ostream& out) {
  if (weight.has_value() == t.has_value()) throw UsageError("distance needs exactly one of --max-weight, --collision");
  const CodeFile file = load(path, in);
  StabilizerCode code = [&] {
    try {
      return StabilizerCode::from_fragment(rows_of(file));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  try {
    if (weight) {
      const DistanceReport d = min_distance(code, *weight);
      out << "distance: " << d.to_string() << "\n";
      out << "parameters: " << params_text(code, d) << "\n";
      return kExitOk;
    }
    const CollisionReport c = distance_at_least_by_collision(code, *t);
    print_collision(out, c);
    return c.status == CollisionReport::Status::kRefuted ? kExitFailed : kExitOk;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_construct(const std::vector<std::string>& spec, const std::string& output, bool binary, std::ostream& out) {
  std::string text = spec.front();
  if (spec.size() > 1) {
    text += "(";
    for (std::size_t i = 1; i < spec.size(); ++i) text += (i > 1 ? "," : "") + spec[i];
    text += ")";
  }
  RecipeId id;
  StabilizerCode code = [&] {
    try {
      id = RecipeId::parse(text);
      return construct_named(id);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const RecipeInfo& info = recipe_info(id.recipe);
  const CodeFile file = make_code_file(id.to_string(), FileKind::kCode, code.fragment(), info.summary,
                                       info.claimed_distance);
  const std::string body = write_code_file(file, binary ? WordStyle::kBinary : WordStyle::kLetters);
  if (output.empty() || output == "-") {
    out << body;
  } else {
    std::ofstream f(output, std::ios::binary);
    if (!f) throw UsageError("cannot write " + output);
    f << body;
  }
  return kExitOk;
}

int cmd_info(const std::string& path, std::istream& in, std::ostream& out) {
  const CodeFile file = load(path, in);
  const CodeFragment& rows = rows_of(file);
  if (!file.name.empty()) out << "name: " << file.name << "\n";
  out << "kind: " << kind_name(file.kind) << "\n";
  if (file.claimed) out << "claimed: " << file.claimed->to_string() << "\n";
  out << "qubits: " << rows.n << "\n";
  out << "generators: " << rows.s() << "\n";
  auto v = validate(rows);
  const bool valid = std::holds_alternative<StabilizerCode>(v);
  out << "commuting-independent: " << yes_no(valid) << "\n";
  if (valid) {
    const auto& code = std::get<StabilizerCode>(v);
    out << "encoded: " << code.k() << "\n";
    if (code.k() > 0 && check_distance3(code)) {
      out << "distance-3 syndromes: pass\n";
      print_rate(out, code, DistanceReport::at_least(3, 1));
    } else {
      out << "distance-3 syndromes: fail\n";
    }
  }
  const ConstraintReport c = strong_constraints(rows);
  out << "left rows even: " << yes_no(c.left_even()) << "\n";
  out << "right rows even: " << yes_no(c.right_even()) << "\n";
  out << "X^n in span: " << yes_no(c.has_all_x) << "\n";
  out << "Z^n in span: " << yes_no(c.has_all_z) << "\n";
  out << "Y^n in span: " << yes_no(c.has_all_y) << "\n";
  out << "distinct xyz syndromes: " << yes_no(distinct_xyz(syndromes_of(rows))) << "\n";
  return kExitOk;
}

int cmd_search(std::size_t n, std::size_t s, const SearchConstraints& c, std::optional<std::uint64_t> seed,
               std::size_t limit, std::size_t max_candidates, std::ostream& out) {
  SearchStrategy strategy;
  strategy.emit_limit = limit;
  strategy.max_candidates = max_candidates;
  if (seed) {
    strategy.mode = SearchStrategy::Mode::kRandomized;
    strategy.seed = *seed;
  }
  SearchResult result;
  try {
    result = search_codes(n, s, c, strategy);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << "# search: n=" << n << " s=" << s << "\n";
  out << "# constraints: " << c.to_string() << "\n";
  if (seed) {
    out << "# strategy: randomized rng=" << kSearchRngName << " seed=" << *seed << " max-candidates=" << max_candidates
        << " limit=" << limit << "\n";
  } else {
    out << "# strategy: exhaustive limit=" << limit << "\n";
  }
  out << "# emitted: " << result.fragments.size() << " row-space-duplicates: " << result.row_space_duplicates
      << " exhausted: " << yes_no(result.exhausted) << (result.budget_hit ? " budget: spent" : "") << "\n";
  const bool as_code = c.require_commuting && c.require_independent;
  for (std::size_t i = 0; i < result.fragments.size(); ++i) {
    const auto& f = result.fragments[i];
    const bool verified = verify_found(f, c).passed();
    CodeFile file = make_code_file("search-" + std::to_string(i + 1), as_code ? FileKind::kCode : FileKind::kFragment,
                                   f, "search " + c.to_string(),
                                   as_code && c.full_distance3 ? std::optional<std::size_t>(3) : std::nullopt);
    file.extra_headers.emplace_back("verified", verified ? "yes" : "no");
    out << "\n" << write_code_file(file);
  }
  return result.fragments.empty() ? kExitFailed : kExitOk;
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : catalog()) {
    out << e.id << " " << kind_name(e.file.kind) << " " << e.claimed().to_string() << " " << e.file.source << "\n";
  }
  return kExitOk;
}

int cmd_catalog_show(const std::string& id, std::ostream& out) {
  try {
    out << catalog_entry(id).text;
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kExitOk;
}

int cmd_catalog_verify_all(std::ostream& out) {
  bool ok = true;
  std::size_t errata = 0;
  const auto reports = verify_catalog();
  for (const auto& r : reports) {
    out << r.line() << "\n";
    if (r.status == FixtureReport::Status::kFailed) ok = false;
    if (r.status == FixtureReport::Status::kErratum) ++errata;
  }
  out << "entries: " << reports.size() << " errata: " << errata << " result: " << (ok ? "ok" : "FAILED") << "\n";
  return ok ? kExitOk : kExitFailed;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Stabilizer code construction and verification", "qecc"};
  app.require_subcommand(1);

  std::string file;
  std::optional<std::size_t> weight;
  std::optional<std::size_t> collision;

  auto* verify = app.add_subcommand("verify", "Validate a code file and report its parameters");
  verify->add_option("file", file, "Code file, or - for stdin")->required();
  verify->add_option("--distance", weight, "Exhaustive distance search up to this weight (default 3)");
  verify->add_option("--collision", collision, "Collision certificate for d >= 2t+1");

  std::vector<std::string> recipe;
  std::string output;
  bool binary = false;
  auto* construct = app.add_subcommand("construct", "Build a named code");
  construct->add_option("recipe", recipe, "Recipe id, e.g. code10, power5 2, perfect_recursion 2 4")->required();
  construct->add_option("-o,--output", output, "Output file (default stdout)");
  construct->add_flag("--binary", binary, "Write binary x|z rows");

  auto* distance = app.add_subcommand("distance", "Distance search or certificate");
  distance->add_option("file", file, "Code file, or - for stdin")->required();
  distance->add_option("--max-weight", weight, "Exhaustive search up to this weight");
  distance->add_option("--collision", collision, "Collision certificate for d >= 2t+1");

  std::size_t n = 0;
  std::size_t s = 0;
  SearchConstraints sc;
  std::string partner;
  std::optional<std::uint64_t> seed;
  std::size_t limit = 10;
  std::size_t max_candidates = 1'000'000;
  auto* search = app.add_subcommand("search", "Backtracking search over syndrome assignments");
  search->add_option("--n", n, "Qubits")->required();
  search->add_option("--s", s, "Generator rows")->required();
  search->add_flag("--left-even", sc.left_rows_even_parity, "Every row has an even number of X/Y");
  search->add_flag("--right-even", sc.right_rows_even_parity, "Every row has an even number of Z/Y");
  search->add_flag("--distinct-xyz", sc.distinct_xyz_syndromes, "σx, σz, σy syndromes each distinct");
  search->add_flag("--distance3", sc.full_distance3, "All 3n syndromes distinct and nonzero");
  search->add_flag("--forbid-uniform", sc.forbid_uniform_elements, "X^n, Z^n, Y^n not in the span");
  search->add_flag("--commuting", sc.require_commuting, "Rows commute");
  search->add_flag("--independent", sc.require_independent, "Rows independent");
  search->add_option("--cross-partner", partner, "Block fragment file for cross-commutation checks");
  search->add_option("--seed", seed, "Randomized mode with this seed");
  search->add_option("--limit", limit, "Stop after this many emissions");
  search->add_option("--max-candidates", max_candidates, "Randomized mode: node budget");

  auto* cat = app.add_subcommand("catalog", "Fixture catalog");
  cat->require_subcommand(1);
  auto* cat_list = cat->add_subcommand("list", "List entries");
  std::string cat_id;
  auto* cat_show = cat->add_subcommand("show", "Print an entry");
  cat_show->add_option("id", cat_id)->required();
  auto* cat_verify = cat->add_subcommand("verify-all", "Check every entry");

  auto* info = app.add_subcommand("info", "Parameters and structural flags of a file");
  info->add_option("file", file, "Code file, or - for stdin")->required();

  std::vector<const char*> argv{"qecc"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(file, weight, collision, in, out);
    if (construct->parsed()) return cmd_construct(recipe, output, binary, out);
    if (distance->parsed()) return cmd_distance(file, weight, collision, in, out);
    if (search->parsed()) {
      if (!partner.empty()) sc.cross_partner = rows_of(load(partner, in));
      return cmd_search(n, s, sc, seed, limit, max_candidates, out);
    }
    if (cat_list->parsed()) return cmd_catalog_list(out);
    if (cat_show->parsed()) return cmd_catalog_show(cat_id, out);
    if (cat_verify->parsed()) return cmd_catalog_verify_all(out);
    if (info->parsed()) return cmd_info(file, in, out);
  } catch (const UsageError& e) {
    err << "qecc: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "qecc: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace qecc::cli
