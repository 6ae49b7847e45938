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

#include "sparsemds/finite_field.h"

#include <vector>

#include "gtest/gtest.h"
#include "oracles.h"
#include "sparsemds/combinatorics.h"
#include "sparsemds/errors.h"
#include "sparsemds/random.h"

namespace sparsemds {
namespace {

FieldMatrix make(std::uint64_t q, std::size_t r, std::size_t c, std::vector<std::uint64_t> v) {
  return FieldMatrix::from_values(PrimeField(q), r, c, v);
}

TEST(PrimeField, RejectsComposite) {
  EXPECT_THROW(PrimeField(1), PreconditionError);
  EXPECT_THROW(PrimeField(9), PreconditionError);
  EXPECT_THROW(PrimeField(0), PreconditionError);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(18446744073709551557ULL));  // largest 64-bit prime
}

TEST(Primality, AgreesWithTrialDivision) {
  for (std::uint64_t v = 0; v < 20000; ++v) {
    ASSERT_EQ(is_prime(v), oracle::trial_division_prime(v)) << v;
  }
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(3215031751ULL));
  EXPECT_FALSE(is_prime(3825123056546413051ULL));
  EXPECT_TRUE(is_prime(1000000007ULL));
}

TEST(SmallestPrimeAbove, Examples) {
  EXPECT_EQ(smallest_prime_above(35), 37u);
  EXPECT_EQ(smallest_prime_above(1), 2u);
  EXPECT_EQ(smallest_prime_above(6), 7u);
  EXPECT_EQ(smallest_prime_above(3), 5u);
  for (std::uint64_t m = 1; m < 2000; ++m) {
    const std::uint64_t p = smallest_prime_above(m);
    ASSERT_TRUE(oracle::trial_division_prime(p));
    for (std::uint64_t v = m + 1; v < p; ++v) ASSERT_FALSE(oracle::trial_division_prime(v));
  }
  EXPECT_THROW(smallest_prime_above(18446744073709551557ULL), TooLargeError);
}

TEST(FieldElement, AddExamples) {
  const PrimeField f7(7);
  EXPECT_EQ(fe_add(f7.element(3), f7.element(5)).value(), 1u);
  for (std::uint64_t x = 0; x < 7; ++x) EXPECT_EQ(fe_add(f7.zero(), f7.element(x)).value(), x);
  const PrimeField f2(2);
  EXPECT_EQ(fe_add(f2.one(), f2.one()).value(), 0u);
}

TEST(FieldElement, MulExamples) {
  const PrimeField f7(7);
  EXPECT_EQ(fe_mul(f7.element(3), f7.element(5)).value(), 1u);
  for (std::uint64_t x = 0; x < 7; ++x) EXPECT_EQ(fe_mul(f7.one(), f7.element(x)).value(), x);
  const PrimeField f5(5);
  EXPECT_EQ(fe_mul(f5.element(2), f5.element(3)).value(), 1u);
}

TEST(FieldElement, InverseExamples) {
  EXPECT_EQ(fe_inv(PrimeField(7).element(3)).value(), 5u);
  EXPECT_EQ(fe_inv(PrimeField(101).one()).value(), 1u);
  EXPECT_EQ(fe_inv(PrimeField(37).element(2)).value(), 19u);
  EXPECT_THROW(fe_inv(PrimeField(7).zero()), DivisionByZeroError);
}

TEST(FieldElement, MismatchedFieldsRejected) {
  const auto a = PrimeField(5).element(1);
  const auto b = PrimeField(7).element(1);
  EXPECT_THROW(a + b, FieldMismatchError);
  EXPECT_THROW(a * b, FieldMismatchError);
  EXPECT_THROW(a - b, FieldMismatchError);
  EXPECT_THROW(a / b, FieldMismatchError);
}

TEST(FieldElement, ValuesAreReduced) {
  EXPECT_EQ(PrimeField(7).element(15).value(), 1u);
  EXPECT_EQ(FieldElement(PrimeField(7), 7).value(), 0u);
}

TEST(FieldElement, AxiomsOnRandomElements) {
  Rng rng(11);
  for (std::uint64_t q : {2ULL, 3ULL, 101ULL, 65537ULL, 4294967311ULL, 18446744073709551557ULL}) {
    const PrimeField f(q);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = f.element(rng.uniform_below(q));
      const auto b = f.element(rng.uniform_below(q));
      const auto c = f.element(rng.uniform_below(q));
      ASSERT_EQ((a + b) + c, a + (b + c));
      ASSERT_EQ((a * b) * c, a * (b * c));
      ASSERT_EQ(a + b, b + a);
      ASSERT_EQ(a * b, b * a);
      ASSERT_EQ(a * (b + c), a * b + a * c);
      ASSERT_EQ(a + f.zero(), a);
      ASSERT_EQ(a * f.one(), a);
      ASSERT_EQ(a + (-a), f.zero());
      ASSERT_EQ(a - b + b, a);
      if (!a.is_zero()) {
        ASSERT_EQ(a * a.inverse(), f.one());
        ASSERT_EQ(b / a * a, b);
      }
    }
  }
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(make(5, 2, 2, {1, 2, 3, 4})).value(), 3u);
  for (std::size_t k = 1; k <= 6; ++k) {
    EXPECT_EQ(determinant(FieldMatrix::identity(PrimeField(13), k)).value(), 1u);
  }
  EXPECT_EQ(determinant(make(5, 2, 2, {1, 1, 1, 1})).value(), 0u);
  EXPECT_THROW(determinant(make(5, 2, 3, {1, 2, 3, 4, 0, 1})), ShapeError);
}

TEST(Determinant, AgreesWithCofactorExpansion) {
  Rng rng(5);
  for (std::uint64_t q : {2ULL, 3ULL, 7ULL, 97ULL}) {
    const PrimeField f(q);
    for (std::size_t order = 1; order <= 4; ++order) {
      for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::uint64_t> values(order * order);
        std::vector<std::vector<std::int64_t>> dense(order, std::vector<std::int64_t>(order));
        for (std::size_t i = 0; i < values.size(); ++i) {
          // Bias toward zeros so singular matrices show up.
          values[i] = rng.uniform_below(3) == 0 ? 0 : rng.uniform_below(q);
          dense[i / order][i % order] = static_cast<std::int64_t>(values[i]);
        }
        const auto det = determinant(FieldMatrix::from_values(f, order, order, values));
        ASSERT_EQ(static_cast<std::int64_t>(det.value()),
                  oracle::cofactor_det(dense, static_cast<std::int64_t>(q)));
      }
    }
  }
}

TEST(SolveLinear, Examples) {
  const PrimeField f5(5);
  auto vec = [](const PrimeField& f, std::vector<std::uint64_t> v) {
    std::vector<FieldElement> out;
    for (auto x : v) out.push_back(f.element(x));
    return out;
  };
  EXPECT_EQ(solve_linear(make(5, 2, 2, {1, 0, 0, 1}), vec(f5, {2, 3})), vec(f5, {2, 3}));
  EXPECT_EQ(solve_linear(make(5, 2, 2, {1, 1, 0, 1}), vec(f5, {3, 2})), vec(f5, {1, 2}));
  const PrimeField f7(7);
  EXPECT_EQ(solve_linear(make(7, 2, 2, {2, 0, 0, 3}), vec(f7, {1, 1})), vec(f7, {4, 5}));
}

TEST(SolveLinear, ErrorsAreDistinct) {
  const PrimeField f5(5);
  const std::vector<FieldElement> b{f5.one(), f5.one()};
  EXPECT_THROW(solve_linear(make(5, 2, 2, {1, 1, 1, 1}), b), SingularMatrixError);
  EXPECT_THROW(solve_linear(make(5, 2, 3, {1, 0, 0, 0, 1, 0}), b), ShapeError);
  EXPECT_THROW(solve_linear(make(5, 2, 2, {1, 0, 0, 1}), std::vector<FieldElement>{f5.one()}),
               ShapeError);
  EXPECT_THROW(solve_linear(make(5, 2, 2, {1, 0, 0, 1}),
                            std::vector<FieldElement>{f5.one(), PrimeField(7).one()}),
               FieldMismatchError);
}

TEST(SolveLinear, RandomSystemsAndDeterminantAgree) {
  Rng rng(17);
  for (std::uint64_t q : {2ULL, 5ULL, 31ULL}) {
    const PrimeField f(q);
    for (std::size_t order = 1; order <= 6; ++order) {
      for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::uint64_t> values(order * order);
        for (auto& v : values) v = rng.uniform_below(q);
        const auto a = FieldMatrix::from_values(f, order, order, values);
        std::vector<FieldElement> b;
        for (std::size_t i = 0; i < order; ++i) b.push_back(f.element(rng.uniform_below(q)));
        const bool nonsingular = !determinant(a).is_zero();
        if (!nonsingular) {
          ASSERT_THROW(solve_linear(a, b), SingularMatrixError);
          continue;
        }
        const auto x = solve_linear(a, b);
        for (std::size_t r = 0; r < order; ++r) {
          FieldElement acc = f.zero();
          for (std::size_t c = 0; c < order; ++c) acc = acc + a.at(r, c) * x[c];
          ASSERT_EQ(acc, b[r]);
        }
      }
    }
  }
}

TEST(FieldMatrix, RejectsOutOfRangeValuesAndMixedFields) {
  EXPECT_THROW(make(5, 1, 2, {1, 5}), ParseError);
  EXPECT_THROW(make(5, 1, 2, {1}), ShapeError);
  FieldMatrix m(PrimeField(5), 1, 1);
  EXPECT_THROW(m.set(0, 0, PrimeField(7).one()), FieldMismatchError);
}

TEST(Combinatorics, BinomialAndRanking) {
  EXPECT_EQ(binomial(7, 4), 35u);
  EXPECT_EQ(binomial(4, 2), 6u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(64, 32), 1832624140942590534ULL);
  EXPECT_THROW(binomial(100, 50), TooLargeError);
  std::vector<std::size_t> comb{0, 1, 2};
  std::uint64_t rank = 0;
  do {
    std::vector<std::size_t> unranked(3);
    unrank_combination(7, rank, unranked);
    ASSERT_EQ(unranked, comb);
    ASSERT_EQ(rank_combination(7, comb), rank);
    ++rank;
  } while (next_combination(comb, 7));
  EXPECT_EQ(rank, binomial(7, 3));
}

}  // namespace
}  // namespace sparsemds
