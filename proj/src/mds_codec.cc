// Copyright 2026 The Authors.
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

#include "sparsemds/mds_codec.h"

#include <algorithm>
#include <sstream>
#include <string>

#include "sparsemds/combinatorics.h"
#include "sparsemds/errors.h"
#include "text_io.h"

namespace sparsemds {
namespace {

std::vector<std::uint64_t> raw_values(const PrimeField& field, std::span<const FieldElement> v,
                                      const char* who) {
  std::vector<std::uint64_t> raw;
  raw.reserve(v.size());
  for (const FieldElement& e : v) {
    if (e.field() != field) throw FieldMismatchError(std::string(who) + ": field mismatch");
    raw.push_back(e.value());
  }
  return raw;
}

std::vector<FieldElement> to_elements(const PrimeField& field, std::span<const std::uint64_t> raw) {
  std::vector<FieldElement> out;
  out.reserve(raw.size());
  for (std::uint64_t v : raw) out.emplace_back(field, v);
  return out;
}

std::uint64_t inner_product_column(const FieldMatrix& g, std::span<const std::uint64_t> x,
                                   std::size_t column) {
  const PrimeField& f = g.field();
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) acc = f.add(acc, f.mul(x[i], g.raw(i, column)));
  return acc;
}

// Solves for x on the first k of `positions` and checks the remainder.
// Returns nullopt for a singular pivot block or an inconsistent remainder;
// `singular` tells the two apart.
std::optional<std::vector<std::uint64_t>> solve_on_positions(
    const FieldMatrix& g, std::span<const std::size_t> positions,
    std::span<const std::uint64_t> values, bool* singular = nullptr) {
  const std::size_t k = g.rows();
  std::vector<std::uint64_t> a(k * k);
  std::vector<std::uint64_t> rhs(k);
  for (std::size_t eq = 0; eq < k; ++eq) {
    for (std::size_t i = 0; i < k; ++i) a[eq * k + i] = g.raw(i, positions[eq]);
    rhs[eq] = values[eq];
  }
  if (!detail::solve_in_place(g.field(), a, rhs, k)) {
    if (singular) *singular = true;
    return std::nullopt;
  }
  if (singular) *singular = false;
  for (std::size_t p = k; p < positions.size(); ++p) {
    if (inner_product_column(g, rhs, positions[p]) != values[p]) return std::nullopt;
  }
  return rhs;
}

}  // namespace

GeneratorMatrix::GeneratorMatrix(FieldMatrix entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0 || entries_.rows() > entries_.cols()) {
    throw PreconditionError("generator matrix needs 1 <= k <= n");
  }
}

SupportMatrix support_of(const GeneratorMatrix& g) {
  SupportMatrix m(g.k(), g.n());
  for (std::size_t i = 0; i < g.k(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) m.set(i, j, g.entries().raw(i, j) != 0);
  }
  return m;
}

std::uint64_t default_field_size(std::size_t n, std::size_t k, std::uint64_t multiplier) {
  if (k == 0 || k > n) throw PreconditionError("default_field_size: need 1 <= k <= n");
  if (multiplier == 0) throw PreconditionError("default_field_size: multiplier must be positive");
  const unsigned __int128 target =
      static_cast<unsigned __int128>(binomial(n - 1, k - 1)) * multiplier;
  if (target >= UINT64_MAX) throw TooLargeError("default_field_size: field size exceeds 64 bits");
  return smallest_prime_above(static_cast<std::uint64_t>(target));
}

MdsVerdict verify_mds(const GeneratorMatrix& g, Execution exec) {
  const std::size_t k = g.k();
  const std::size_t n = g.n();
  if (binomial(n, k) > kMaxMinorSubsets) {
    throw TooLargeError("C(" + std::to_string(n) + ", " + std::to_string(k) + ") exceeds " +
                        std::to_string(kMaxMinorSubsets) + " minors");
  }
  const FieldMatrix& entries = g.entries();
  const auto singular = detail::first_combination_where(n, k, exec, [&entries, k] {
    return [&entries, k, scratch = std::vector<std::uint64_t>(k * k)](
               std::span<const std::size_t> columns) mutable {
      for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) scratch[r * k + c] = entries.raw(r, columns[c]);
      }
      return detail::determinant_in_place(entries.field(), scratch, k) == 0;
    };
  });
  if (!singular) return {};
  std::vector<std::size_t> columns(k);
  unrank_combination(n, *singular, columns);
  return {false, std::move(columns)};
}

InstantiateResult instantiate(const SupportMatrix& m, const InstantiateOptions& options) {
  const std::size_t k = m.k();
  const std::size_t n = m.n();
  if (!check_p1(m)) throw PreconditionError("instantiate: every row must have weight n - k + 1");
  if (const P3Verdict p3 = check_p3_matching(m); !p3.holds) {
    throw PreconditionError("instantiate: support violates the row-union condition (P3)");
  }
  if (options.max_attempts == 0) throw PreconditionError("instantiate: max_attempts must be positive");

  const std::uint64_t bound = binomial(n - 1, k - 1);
  std::uint64_t q = 0;
  if (options.q) {
    q = *options.q;
    if (q <= bound && !options.allow_small_field) {
      throw FieldTooSmallError("q = " + std::to_string(q) + " does not exceed C(" +
                               std::to_string(n - 1) + ", " + std::to_string(k - 1) +
                               ") = " + std::to_string(bound));
    }
  } else {
    q = default_field_size(n, k, options.q_multiplier);
  }
  const PrimeField field(q);

  for (std::size_t attempt = 1; attempt <= options.max_attempts; ++attempt) {
    Rng rng(derive_seed(options.seed, attempt));
    FieldMatrix entries(field, k, n);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (m.get(i, j)) entries.set(i, j, field.element(1 + rng.uniform_below(q - 1)));
      }
    }
    GeneratorMatrix g(std::move(entries));
    if (verify_mds(g).is_mds) return {std::move(g), options.seed, attempt};
  }

  // Nonzero polynomial of total degree <= k * C(n, k) evaluated on
  // (q - 1)^{#support} points.
  const long double degree = static_cast<long double>(k) * static_cast<long double>(binomial(n, k));
  const long double per_attempt = std::min<long double>(1.0L, degree / static_cast<long double>(q - 1));
  std::ostringstream message;
  message << "no MDS instantiation over GF(" << q << ") in " << options.max_attempts
          << " attempts (seed " << options.seed << "); per-attempt failure probability is at most "
          << static_cast<double>(per_attempt) << ", try a larger q or q multiplier";
  throw AttemptsExhaustedError(message.str());
}

std::vector<FieldElement> encode(const GeneratorMatrix& g, std::span<const FieldElement> message) {
  if (message.size() != g.k()) {
    throw ShapeError("encode: message length " + std::to_string(message.size()) + " != k = " +
                     std::to_string(g.k()));
  }
  const auto x = raw_values(g.field(), message, "encode");
  std::vector<std::uint64_t> codeword(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) codeword[j] = inner_product_column(g.entries(), x, j);
  return to_elements(g.field(), codeword);
}

std::vector<FieldElement> erasure_decode(const GeneratorMatrix& g,
                                         const std::map<std::size_t, FieldElement>& known) {
  if (known.size() < g.k()) {
    throw InsufficientSymbolsError("erasure_decode: " + std::to_string(known.size()) +
                                   " known positions, need at least k = " + std::to_string(g.k()));
  }
  std::vector<std::size_t> positions;
  std::vector<std::uint64_t> values;
  for (const auto& [position, value] : known) {
    if (position >= g.n()) throw ShapeError("erasure_decode: position out of range");
    if (value.field() != g.field()) throw FieldMismatchError("erasure_decode: field mismatch");
    positions.push_back(position);
    values.push_back(value.value());
  }
  bool singular = false;
  const auto x = solve_on_positions(g.entries(), positions, values, &singular);
  if (!x) {
    if (singular) throw SingularMatrixError("erasure_decode: first k known columns are dependent");
    throw InconsistentSymbolsError("erasure_decode: known symbols are not from one codeword");
  }
  return to_elements(g.field(), *x);
}

DecodeResult error_decode(const GeneratorMatrix& g, std::span<const FieldElement> received) {
  const std::size_t n = g.n();
  const std::size_t k = g.k();
  if (received.size() != n) {
    throw ShapeError("error_decode: received length " + std::to_string(received.size()) +
                     " != n = " + std::to_string(n));
  }
  const auto y = raw_values(g.field(), received, "error_decode");
  const std::size_t radius = correction_radius(n, k);

  std::vector<std::size_t> kept;
  std::vector<std::uint64_t> kept_values;
  std::vector<bool> erased(n);
  for (std::size_t size = 0; size <= radius; ++size) {
    std::vector<std::size_t> guess(size);
    for (std::size_t i = 0; i < size; ++i) guess[i] = i;
    do {
      std::fill(erased.begin(), erased.end(), false);
      for (std::size_t p : guess) erased[p] = true;
      kept.clear();
      kept_values.clear();
      for (std::size_t j = 0; j < n; ++j) {
        if (!erased[j]) {
          kept.push_back(j);
          kept_values.push_back(y[j]);
        }
      }
      if (auto x = solve_on_positions(g.entries(), kept, kept_values)) {
        DecodeResult result;
        result.status = DecodeStatus::kUnique;
        for (std::size_t j = 0; j < n; ++j) {
          if (inner_product_column(g.entries(), *x, j) != y[j]) result.error_positions.push_back(j);
        }
        result.message = to_elements(g.field(), *x);
        return result;
      }
    } while (next_combination(guess, n));
  }
  return {};
}

std::size_t minimum_distance_bruteforce(const GeneratorMatrix& g, Execution exec) {
  const std::uint64_t q = g.field().modulus();
  const std::size_t k = g.k();
  const std::size_t n = g.n();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (count > kMaxDistanceMessages / q) {
      throw TooLargeError("q^k exceeds " + std::to_string(kMaxDistanceMessages) + " messages");
    }
    count *= q;
  }
  const FieldMatrix& entries = g.entries();
  auto weight_of = [&](std::uint64_t index, std::vector<std::uint64_t>& x) {
    for (std::size_t i = 0; i < k; ++i) {
      x[i] = index % q;
      index /= q;
    }
    std::size_t weight = 0;
    for (std::size_t j = 0; j < n; ++j) weight += inner_product_column(entries, x, j) != 0;
    return weight;
  };

  std::size_t best = n + 1;
  if (exec == Execution::kSerial) {
    std::vector<std::uint64_t> x(k);
    for (std::uint64_t index = 1; index < count; ++index) best = std::min(best, weight_of(index, x));
    return best;
  }
#pragma omp parallel
  {
    std::vector<std::uint64_t> x(k);
    std::size_t local = n + 1;
#pragma omp for schedule(static)
    for (std::int64_t index = 1; index < static_cast<std::int64_t>(count); ++index) {
      local = std::min(local, weight_of(static_cast<std::uint64_t>(index), x));
    }
#pragma omp critical(sparsemds_min_distance)
    best = std::min(best, local);
  }
  return best;
}

std::vector<FieldElement> parse_field_vector(std::string_view csv, const PrimeField& field) {
  std::vector<FieldElement> out;
  for (std::string_view token : detail::split_fields(csv, ',')) {
    const std::uint64_t value = detail::parse_u64(token);
    if (value >= field.modulus()) {
      throw ParseError("value " + std::to_string(value) + " is not below q = " +
                       std::to_string(field.modulus()));
    }
    out.emplace_back(field, value);
  }
  return out;
}

std::string format_field_vector(std::span<const FieldElement> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += std::to_string(v[i].value());
  }
  return out;
}

GmFile parse_gm(std::string_view text) {
  const auto lines = detail::split_lines(text);
  if (lines.empty()) throw ParseError(".gm: empty input");
  const auto header = detail::split_fields(lines[0], ' ');
  if (header.size() != 4) throw ParseError(".gm: header must be \"k n q seed\"");
  const std::uint64_t k = detail::parse_u64(header[0]);
  const std::uint64_t n = detail::parse_u64(header[1]);
  const std::uint64_t q = detail::parse_u64(header[2]);
  const std::uint64_t seed = detail::parse_u64(header[3]);
  if (k == 0 || k > n) throw ParseError(".gm: header needs 1 <= k <= n");
  if (!is_prime(q)) throw ParseError(".gm: q = " + std::to_string(q) + " is not prime");
  if (lines.size() != k + 1) {
    throw ParseError(".gm: expected " + std::to_string(k) + " rows, found " +
                     std::to_string(lines.size() - 1));
  }
  std::vector<std::uint64_t> values;
  values.reserve(k * n);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = detail::split_fields(lines[i], ' ');
    if (fields.size() != n) {
      throw ParseError(".gm: row " + std::to_string(i) + " has " + std::to_string(fields.size()) +
                       " values, expected " + std::to_string(n));
    }
    for (std::string_view f : fields) values.push_back(detail::parse_u64(f));
  }
  return {GeneratorMatrix(FieldMatrix::from_values(PrimeField(q), k, n, values)), seed};
}

std::string format_gm(const GeneratorMatrix& g, std::uint64_t seed) {
  std::string out = std::to_string(g.k()) + " " + std::to_string(g.n()) + " " +
                    std::to_string(g.field().modulus()) + " " + std::to_string(seed) + "\n";
  for (std::size_t i = 0; i < g.k(); ++i) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(g.entries().raw(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

GmFile read_gm_file(const std::string& path) { return parse_gm(detail::read_text_file(path)); }

void write_gm_file(const std::string& path, const GeneratorMatrix& g, std::uint64_t seed) {
  detail::write_text_file(path, format_gm(g, seed));
}

}  // namespace sparsemds
