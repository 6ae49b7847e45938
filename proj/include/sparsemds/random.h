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

#ifndef SPARSEMDS_RANDOM_H_
#define SPARSEMDS_RANDOM_H_

#include <cstdint>
#include <random>

namespace sparsemds {

// Selects the serial reference path or the OpenMP kernel for operations that
// provide both. Results are identical; only scheduling differs.
enum class Execution { kSerial, kParallel };

// Derives an independent stream seed from (seed, stream) with SplitMix64
// finalizers, so attempt i or trial i gets the same randomness no matter
// which thread runs it.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Deterministic generator. Bounded draws use rejection sampling instead of
// std::uniform_int_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform in [0, bound). bound must be positive.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sparsemds

#endif  // SPARSEMDS_RANDOM_H_
