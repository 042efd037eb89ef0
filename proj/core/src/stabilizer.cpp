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

#include "qecc/stabilizer.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace qecc {

CodeFragment::CodeFragment(std::size_t qubits, std::vector<PauliWord> generator_rows)
    : n(qubits), rows(std::move(generator_rows)) {
  for (const auto& r : rows) {
    if (r.n() != n) throw std::invalid_argument("fragment row length differs from n");
  }
}

CodeFragment CodeFragment::parse(std::initializer_list<std::string_view> rows) {
  std::vector<PauliWord> words;
  for (auto r : rows) words.push_back(parse_pauli_word(r));
  if (words.empty()) throw std::invalid_argument("no generator rows");
  const std::size_t n = words.front().n();
  return CodeFragment(n, std::move(words));
}

CodeFragment CodeFragment::parse(const std::vector<std::string>& rows) {
  std::vector<PauliWord> words;
  for (const auto& r : rows) words.push_back(parse_pauli_word(r));
  if (words.empty()) throw std::invalid_argument("no generator rows");
  const std::size_t n = words.front().n();
  return CodeFragment(n, std::move(words));
}

std::string ValidationError::message() const {
  switch (kind) {
    case Kind::kNonCommuting:
      return "NonCommuting(" + std::to_string(first) + ", " + std::to_string(second) + ")";
    case Kind::kDependentRows:
      return "DependentRows(" + std::to_string(rank) + ", " + std::to_string(rows) + ")";
    case Kind::kEmpty:
      return "no generator rows";
  }
  return "invalid";
}

std::variant<StabilizerCode, ValidationError> validate(const CodeFragment& fragment) {
  const auto& rows = fragment.rows;
  if (rows.empty()) return ValidationError{ValidationError::Kind::kEmpty};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (symplectic_product(rows[i], rows[j])) {
        return ValidationError{ValidationError::Kind::kNonCommuting, i + 1, j + 1};
      }
    }
  }
  const std::size_t rank = gf2_rank(rows);
  if (rank != rows.size()) {
    return ValidationError{ValidationError::Kind::kDependentRows, 0, 0, rank, rows.size()};
  }
  return StabilizerCode(fragment);
}

StabilizerCode StabilizerCode::from_fragment(CodeFragment fragment) {
  auto result = validate(fragment);
  if (auto* err = std::get_if<ValidationError>(&result)) throw std::invalid_argument(err->message());
  return std::get<StabilizerCode>(std::move(result));
}

StabilizerCode StabilizerCode::parse(std::initializer_list<std::string_view> rows) {
  return from_fragment(CodeFragment::parse(rows));
}

Syndrome syndrome(const CodeFragment& rows, const PauliWord& error) {
  if (error.n() != rows.n) throw std::invalid_argument("error length differs from code length");
  Syndrome out(rows.s());
  for (std::size_t r = 0; r < rows.s(); ++r) {
    if (symplectic_product(rows.rows[r], error)) out.set(r);
  }
  return out;
}

Syndrome syndrome(const StabilizerCode& code, const PauliWord& error) { return syndrome(code.fragment(), error); }

std::uint64_t syndrome_value(const Syndrome& s) {
  if (s.size() > 64) throw std::invalid_argument("syndrome wider than 64 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) v = (v << 1) | (s.get(i) ? 1u : 0u);
  return v;
}

Syndrome syndrome_from_value(std::uint64_t value, std::size_t bits) {
  if (bits > 64) throw std::invalid_argument("syndrome wider than 64 bits");
  Syndrome s(bits);
  for (std::size_t i = 0; i < bits; ++i) {
    if ((value >> (bits - 1 - i)) & 1u) s.set(i);
  }
  return s;
}

std::string ErrorLabel::to_string() const { return std::string(1, pauli_char(pauli)) + std::to_string(qubit + 1); }

std::vector<SyndromeEntry> single_error_syndrome_table(const CodeFragment& rows) {
  std::vector<SyndromeEntry> table;
  table.reserve(3 * rows.n);
  for (Pauli p : kPaulis) {
    for (std::size_t q = 0; q < rows.n; ++q) {
      table.push_back({{p, q}, syndrome(rows, PauliWord::single(rows.n, q, p))});
    }
  }
  return table;
}

std::vector<SyndromeEntry> single_error_syndrome_table(const StabilizerCode& code) {
  return single_error_syndrome_table(code.fragment());
}

bool check_distance3(const CodeFragment& rows) {
  std::unordered_set<BitVec, BitVecHash> seen;
  for (const auto& e : single_error_syndrome_table(rows)) {
    if (e.syndrome.none() || !seen.insert(e.syndrome).second) return false;
  }
  return true;
}

bool check_distance3(const StabilizerCode& code) { return check_distance3(code.fragment()); }

std::vector<Syndrome> unused_syndromes(const CodeFragment& rows) {
  const std::size_t s = rows.s();
  if (s > 24) throw std::invalid_argument("unused_syndromes refuses more than 24 generators");
  std::vector<bool> used(std::size_t{1} << s, false);
  for (const auto& e : single_error_syndrome_table(rows)) used[syndrome_value(e.syndrome)] = true;
  std::vector<Syndrome> out;
  for (std::uint64_t v = 0; v < used.size(); ++v) {
    if (!used[v]) out.push_back(syndrome_from_value(v, s));
  }
  return out;
}

std::vector<Syndrome> unused_syndromes(const StabilizerCode& code) { return unused_syndromes(code.fragment()); }

Rational using_rate(std::size_t n, std::size_t s, std::size_t t) {
  if (t < 1 || s < 1) throw std::invalid_argument("using_rate needs t >= 1 and s >= 1");
  BigInt used = 0;
  BigInt three = 1;
  for (std::size_t j = 1; j <= t; ++j) {
    three *= 3;
    used += three * binomial(static_cast<unsigned>(n), static_cast<unsigned>(j));
  }
  return Rational(used, pow2(static_cast<unsigned>(s)));
}

std::string DistanceReport::to_string() const {
  switch (status) {
    case Status::kExact:
      return "exact(" + std::to_string(distance) + (witness ? ", " + format_pauli_word(*witness) : "") + ")";
    case Status::kAtLeast:
      return "at_least(" + std::to_string(distance) + ")";
    case Status::kNotApplicableK0:
      return "not_applicable_k0";
  }
  return "?";
}

Classification classify(const StabilizerCode& code, const DistanceReport& distance) {
  Classification c;
  if (distance.status == DistanceReport::Status::kNotApplicableK0 || distance.distance == 0) return c;
  c.t = (distance.distance - 1) / 2;
  if (c.t == 0) return c;
  c.g = using_rate(code.n(), code.s(), c.t);
  c.g_optimal = *c.g > Rational(1, 2) && *c.g <= Rational(1);
  const Rational perfect_rate = Rational(1) - Rational(1, pow2(static_cast<unsigned>(code.s())));
  c.perfect = distance.distance == 3 && check_distance3(code) && *c.g == perfect_rate;
  return c;
}

std::vector<PauliWord> normalizer_basis(const CodeFragment& rows) {
  const std::size_t n = rows.n;
  // <(g.z | g.x), (v.x | v.z)> is the symplectic product of g and v.
  std::vector<BitVec> eqs;
  eqs.reserve(rows.s());
  for (const auto& g : rows.rows) eqs.push_back(g.z.concat(g.x));
  std::vector<PauliWord> out;
  for (const auto& v : gf2_nullspace(eqs, 2 * n)) out.push_back(PauliWord::from_stacked(v));
  return out;
}

LogicalSet logical_operators(const StabilizerCode& code) {
  if (code.k() == 0) throw std::invalid_argument("logical_operators: code encodes no qubits (k = 0)");
  std::vector<PauliWord> pool = normalizer_basis(code.fragment());
  LogicalSet out;
  while (true) {
    std::size_t a = pool.size();
    std::size_t b = pool.size();
    for (std::size_t i = 0; i < pool.size() && a == pool.size(); ++i) {
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        if (symplectic_product(pool[i], pool[j])) {
          a = i;
          b = j;
          break;
        }
      }
    }
    if (a == pool.size()) break;
    PauliWord xbar = pool[a];
    PauliWord zbar = pool[b];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(b));
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(a));
    for (auto& c : pool) {
      const bool with_z = symplectic_product(c, zbar);
      const bool with_x = symplectic_product(c, xbar);
      if (with_z) c += xbar;
      if (with_x) c += zbar;
    }
    out.pairs.emplace_back(std::move(xbar), std::move(zbar));
  }
  if (out.k() != code.k()) throw std::logic_error("symplectic completion produced the wrong number of logical pairs");
  return out;
}

bool is_valid_logical_set(const StabilizerCode& code, const LogicalSet& logicals) {
  if (logicals.k() != code.k()) return false;
  std::vector<PauliWord> all = code.generators();
  for (const auto& [xb, zb] : logicals.pairs) {
    for (const auto& g : code.generators()) {
      if (symplectic_product(xb, g) || symplectic_product(zb, g)) return false;
    }
  }
  for (std::size_t i = 0; i < logicals.k(); ++i) {
    for (std::size_t j = 0; j < logicals.k(); ++j) {
      const auto& [xi, zi] = logicals.pairs[i];
      const auto& [xj, zj] = logicals.pairs[j];
      if (symplectic_product(xi, zj) != (i == j)) return false;
      if (i != j && (symplectic_product(xi, xj) || symplectic_product(zi, zj))) return false;
    }
    all.push_back(logicals.pairs[i].first);
    all.push_back(logicals.pairs[i].second);
  }
  return gf2_rank(all) == all.size();
}

}  // namespace qecc
