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

#ifndef SPARSEMDS_MDS_CODEC_H_
#define SPARSEMDS_MDS_CODEC_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sparsemds/finite_field.h"
#include "sparsemds/random.h"
#include "sparsemds/support_matrix.h"

namespace sparsemds {

inline constexpr std::uint64_t kMaxMinorSubsets = 10'000'000;
inline constexpr std::uint64_t kMaxDistanceMessages = 1'000'000;

// k x n generator matrix over GF(q), 1 <= k <= n.
class GeneratorMatrix {
 public:
  // Throws PreconditionError unless 1 <= rows <= cols.
  explicit GeneratorMatrix(FieldMatrix entries);

  std::size_t k() const { return entries_.rows(); }
  std::size_t n() const { return entries_.cols(); }
  const PrimeField& field() const { return entries_.field(); }
  const FieldMatrix& entries() const { return entries_; }

  friend bool operator==(const GeneratorMatrix&, const GeneratorMatrix&) = default;

 private:
  FieldMatrix entries_;
};

// Bit (i, j) set iff g_ij != 0.
SupportMatrix support_of(const GeneratorMatrix& g);

// Minimum distance of an [n, k] MDS code and its unique-decoding radius.
inline std::size_t mds_distance(std::size_t n, std::size_t k) { return n - k + 1; }
inline std::size_t correction_radius(std::size_t n, std::size_t k) { return (n - k) / 2; }

// Smallest prime above multiplier * C(n - 1, k - 1).
std::uint64_t default_field_size(std::size_t n, std::size_t k, std::uint64_t multiplier = 1);

struct InstantiateOptions {
  std::optional<std::uint64_t> q;    // nullopt: default_field_size(n, k, q_multiplier)
  std::uint64_t q_multiplier = 1;    // only used when q is nullopt
  std::uint64_t seed = 0;
  std::size_t max_attempts = 64;
  bool allow_small_field = false;    // accept an explicit q <= C(n - 1, k - 1)
};

struct InstantiateResult {
  GeneratorMatrix generator;
  std::uint64_t seed = 0;
  std::size_t attempts = 0;  // 1-based index of the accepted attempt
};

// Draws every support entry uniformly from GF(q) \ {0} (zeros elsewhere) and
// keeps the first draw whose k x k minors are all nonzero. Attempt a uses the
// stream derive_seed(seed, a), so the result depends only on the seed.
//
// Throws PreconditionError if m violates P1 or P3, FieldTooSmallError for an
// explicit q <= C(n - 1, k - 1) without allow_small_field, and
// AttemptsExhaustedError when no attempt succeeds.
InstantiateResult instantiate(const SupportMatrix& m, const InstantiateOptions& options = {});

struct MdsVerdict {
  bool is_mds = true;
  std::optional<std::vector<std::size_t>> singular_columns;  // 0-based, lexicographically first
};

// Checks all C(n, k) minors. Throws TooLargeError above kMaxMinorSubsets.
MdsVerdict verify_mds(const GeneratorMatrix& g, Execution exec = Execution::kParallel);

// c_j = <x, column j>.
std::vector<FieldElement> encode(const GeneratorMatrix& g, std::span<const FieldElement> message);

// Message x with <x, column j> = value_j for every known position (0-based).
// Solves on the first k known positions, then checks the rest.
//
// Throws InsufficientSymbolsError for fewer than k positions,
// SingularMatrixError if those k columns are dependent (impossible for an MDS
// generator), and InconsistentSymbolsError if a further known value
// disagrees.
std::vector<FieldElement> erasure_decode(const GeneratorMatrix& g,
                                         const std::map<std::size_t, FieldElement>& known);

enum class DecodeStatus { kUnique, kFailure };

struct DecodeResult {
  DecodeStatus status = DecodeStatus::kFailure;
  std::vector<FieldElement> message;          // empty on failure
  std::vector<std::size_t> error_positions;   // 0-based, ascending
};

// Bounded-distance decoding by exhaustive error-support search: candidate
// error sets E of size 0, 1, ..., t = floor((n - k) / 2) in lexicographic
// order; the first E whose complement is consistent wins. Assumes g is MDS.
DecodeResult error_decode(const GeneratorMatrix& g, std::span<const FieldElement> received);

// Minimum Hamming weight over all nonzero codewords. Throws TooLargeError
// when q^k > kMaxDistanceMessages.
std::size_t minimum_distance_bruteforce(const GeneratorMatrix& g,
                                        Execution exec = Execution::kParallel);

// Comma-separated decimal residues without spaces, e.g. "1,3,0". Parsing
// throws ParseError for malformed tokens or values >= q.
std::vector<FieldElement> parse_field_vector(std::string_view csv, const PrimeField& field);
std::string format_field_vector(std::span<const FieldElement> v);

// `.gm` text format: "k n q seed" on the first line, then k lines of n
// decimal residues separated by single spaces.
struct GmFile {
  GeneratorMatrix generator;
  std::uint64_t seed = 0;
};

GmFile parse_gm(std::string_view text);
std::string format_gm(const GeneratorMatrix& g, std::uint64_t seed);

GmFile read_gm_file(const std::string& path);
void write_gm_file(const std::string& path, const GeneratorMatrix& g, std::uint64_t seed);

}  // namespace sparsemds

#endif  // SPARSEMDS_MDS_CODEC_H_
