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

#ifndef SPARSEMDS_FINITE_FIELD_H_
#define SPARSEMDS_FINITE_FIELD_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sparsemds {

// Deterministic Miller-Rabin; the witness set {2, ..., 37} is exact for all
// 64-bit inputs.
bool is_prime(std::uint64_t value);

// Least prime strictly greater than m.
std::uint64_t smallest_prime_above(std::uint64_t m);

class FieldElement;

// GF(q) for a prime q that fits in a machine word. Cheap to copy; two fields
// are the same field iff their moduli are equal.
class PrimeField {
 public:
  // Throws PreconditionError unless `modulus` is prime.
  explicit PrimeField(std::uint64_t modulus);

  std::uint64_t modulus() const { return q_; }

  FieldElement element(std::uint64_t value) const;  // reduced mod q
  FieldElement zero() const;
  FieldElement one() const;

  // Raw residue arithmetic. Arguments must already lie in [0, q).
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return (s >= q_ || s < a) ? s - q_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + (q_ - b); }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : q_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % q_);
  }
  std::uint64_t pow(std::uint64_t base, std::uint64_t exponent) const;
  // Throws DivisionByZeroError for a == 0.
  std::uint64_t inv(std::uint64_t a) const;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t q_;
};

// A residue in [0, q) tagged with its field. Mixing fields throws
// FieldMismatchError.
class FieldElement {
 public:
  FieldElement(const PrimeField& field, std::uint64_t value);

  std::uint64_t value() const { return value_; }
  const PrimeField& field() const { return field_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;

  FieldElement operator-() const { return {field_, field_.neg(value_), Raw{}}; }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Raw {};
  FieldElement(const PrimeField& field, std::uint64_t value, Raw) : field_(field), value_(value) {}

  PrimeField field_;
  std::uint64_t value_;
};

// Named forms of the arithmetic operators.
FieldElement fe_add(const FieldElement& a, const FieldElement& b);
FieldElement fe_mul(const FieldElement& a, const FieldElement& b);
FieldElement fe_inv(const FieldElement& a);

// Dense rows x cols matrix over one prime field, stored row-major as raw
// residues.
class FieldMatrix {
 public:
  FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols);

  // Throws ShapeError on a size mismatch and ParseError on a value >= q.
  static FieldMatrix from_values(const PrimeField& field, std::size_t rows, std::size_t cols,
                                 std::span<const std::uint64_t> values);
  static FieldMatrix identity(const PrimeField& field, std::size_t order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::uint64_t raw(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const std::uint64_t> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  std::span<const std::uint64_t> values() const { return data_; }

  // Matrix made of the listed columns, in order.
  FieldMatrix select_columns(std::span<const std::size_t> columns) const;

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint64_t> data_;
};

// Exact determinant by Gaussian elimination with nonzero pivoting.
// Throws ShapeError if `a` is not square.
FieldElement determinant(const FieldMatrix& a);

// Unique x with a * x = b. Throws ShapeError for dimension problems and
// SingularMatrixError when `a` is singular.
std::vector<FieldElement> solve_linear(const FieldMatrix& a, std::span<const FieldElement> b);

namespace detail {

// In-place elimination on a row-major order x order buffer (destroyed).
std::uint64_t determinant_in_place(const PrimeField& field, std::span<std::uint64_t> square,
                                   std::size_t order);

// Solves square * x = rhs in place; on success rhs holds x. Returns false if
// the matrix is singular. Both buffers are destroyed.
bool solve_in_place(const PrimeField& field, std::span<std::uint64_t> square,
                    std::span<std::uint64_t> rhs, std::size_t order);

}  // namespace detail
}  // namespace sparsemds

#endif  // SPARSEMDS_FINITE_FIELD_H_
