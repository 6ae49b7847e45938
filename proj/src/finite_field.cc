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

#include <algorithm>
#include <string>

#include "sparsemds/errors.h"

namespace sparsemds {
namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exponent > 0) {
    if (exponent & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() != b.field()) {
    throw FieldMismatchError("field mismatch: GF(" + std::to_string(a.field().modulus()) +
                             ") vs GF(" + std::to_string(b.field().modulus()) + ")");
  }
}

}  // namespace

bool is_prime(std::uint64_t value) {
  if (value < 2) return false;
  constexpr std::uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t p : kWitnesses) {
    if (value % p == 0) return value == p;
  }
  std::uint64_t d = value - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, value);
    if (x == 1 || x == value - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, value);
      if (x == value - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t smallest_prime_above(std::uint64_t m) {
  for (std::uint64_t candidate = m + 1; candidate > m; ++candidate) {
    if (is_prime(candidate)) return candidate;
  }
  throw TooLargeError("no 64-bit prime above " + std::to_string(m));
}

PrimeField::PrimeField(std::uint64_t modulus) : q_(modulus) {
  if (!is_prime(modulus)) {
    throw PreconditionError("field modulus " + std::to_string(modulus) + " is not prime");
  }
}

FieldElement PrimeField::element(std::uint64_t value) const { return {*this, value % q_}; }
FieldElement PrimeField::zero() const { return {*this, 0}; }
FieldElement PrimeField::one() const { return {*this, 1}; }

std::uint64_t PrimeField::pow(std::uint64_t base, std::uint64_t exponent) const {
  return powmod(base, exponent, q_);
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (a == 0) throw DivisionByZeroError("inverse of zero in GF(" + std::to_string(q_) + ")");
  return powmod(a, q_ - 2, q_);
}

FieldElement::FieldElement(const PrimeField& field, std::uint64_t value)
    : field_(field), value_(value % field.modulus()) {}

FieldElement FieldElement::inverse() const { return {field_, field_.inv(value_), Raw{}}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.add(a.value_, b.value_), FieldElement::Raw{}};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.sub(a.value_, b.value_), FieldElement::Raw{}};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.field_, a.field_.mul(a.value_, b.value_), FieldElement::Raw{}};
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return a * b.inverse();
}

FieldElement fe_add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement fe_mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement fe_inv(const FieldElement& a) { return a.inverse(); }

FieldMatrix::FieldMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

FieldMatrix FieldMatrix::from_values(const PrimeField& field, std::size_t rows, std::size_t cols,
                                     std::span<const std::uint64_t> values) {
  if (values.size() != rows * cols) {
    throw ShapeError("expected " + std::to_string(rows * cols) + " values, got " +
                     std::to_string(values.size()));
  }
  FieldMatrix m(field, rows, cols);
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] >= field.modulus()) {
      throw ParseError("value " + std::to_string(values[i]) + " is not below q = " +
                       std::to_string(field.modulus()));
    }
    m.data_[i] = values[i];
  }
  return m;
}

FieldMatrix FieldMatrix::identity(const PrimeField& field, std::size_t order) {
  FieldMatrix m(field, order, order);
  for (std::size_t i = 0; i < order; ++i) m.data_[i * order + i] = 1;
  return m;
}

FieldElement FieldMatrix::at(std::size_t r, std::size_t c) const {
  return {field_, data_.at(r * cols_ + c)};
}

void FieldMatrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (value.field() != field_) throw FieldMismatchError("FieldMatrix::set: field mismatch");
  data_.at(r * cols_ + c) = value.value();
}

FieldMatrix FieldMatrix::select_columns(std::span<const std::size_t> columns) const {
  FieldMatrix out(field_, rows_, columns.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      out.data_[r * columns.size() + c] = data_.at(r * cols_ + columns[c]);
    }
  }
  return out;
}

namespace detail {

std::uint64_t determinant_in_place(const PrimeField& field, std::span<std::uint64_t> a,
                                   std::size_t order) {
  std::uint64_t det = 1;
  for (std::size_t col = 0; col < order; ++col) {
    std::size_t pivot = col;
    while (pivot < order && a[pivot * order + col] == 0) ++pivot;
    if (pivot == order) return 0;
    if (pivot != col) {
      std::swap_ranges(a.begin() + pivot * order, a.begin() + (pivot + 1) * order,
                       a.begin() + col * order);
      det = field.neg(det);
    }
    const std::uint64_t p = a[col * order + col];
    det = field.mul(det, p);
    const std::uint64_t p_inv = field.inv(p);
    for (std::size_t r = col + 1; r < order; ++r) {
      const std::uint64_t entry = a[r * order + col];
      if (entry == 0) continue;
      const std::uint64_t factor = field.mul(entry, p_inv);
      for (std::size_t c = col; c < order; ++c) {
        a[r * order + c] = field.sub(a[r * order + c], field.mul(factor, a[col * order + c]));
      }
    }
  }
  return det;
}

bool solve_in_place(const PrimeField& field, std::span<std::uint64_t> a, std::span<std::uint64_t> b,
                    std::size_t order) {
  // Gauss-Jordan.
  for (std::size_t col = 0; col < order; ++col) {
    std::size_t pivot = col;
    while (pivot < order && a[pivot * order + col] == 0) ++pivot;
    if (pivot == order) return false;
    if (pivot != col) {
      std::swap_ranges(a.begin() + pivot * order, a.begin() + (pivot + 1) * order,
                       a.begin() + col * order);
      std::swap(b[pivot], b[col]);
    }
    const std::uint64_t p_inv = field.inv(a[col * order + col]);
    for (std::size_t c = col; c < order; ++c) a[col * order + c] = field.mul(a[col * order + c], p_inv);
    b[col] = field.mul(b[col], p_inv);
    for (std::size_t r = 0; r < order; ++r) {
      if (r == col) continue;
      const std::uint64_t factor = a[r * order + col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < order; ++c) {
        a[r * order + c] = field.sub(a[r * order + c], field.mul(factor, a[col * order + c]));
      }
      b[r] = field.sub(b[r], field.mul(factor, b[col]));
    }
  }
  return true;
}

}  // namespace detail

FieldElement determinant(const FieldMatrix& a) {
  if (a.rows() != a.cols()) {
    throw ShapeError("determinant of non-square " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " matrix");
  }
  std::vector<std::uint64_t> scratch(a.values().begin(), a.values().end());
  return {a.field(), detail::determinant_in_place(a.field(), scratch, a.rows())};
}

std::vector<FieldElement> solve_linear(const FieldMatrix& a, std::span<const FieldElement> b) {
  if (a.rows() != a.cols()) throw ShapeError("solve_linear: matrix is not square");
  if (b.size() != a.rows()) throw ShapeError("solve_linear: right-hand side has wrong length");
  std::vector<std::uint64_t> rhs;
  rhs.reserve(b.size());
  for (const FieldElement& e : b) {
    if (e.field() != a.field()) throw FieldMismatchError("solve_linear: field mismatch");
    rhs.push_back(e.value());
  }
  std::vector<std::uint64_t> scratch(a.values().begin(), a.values().end());
  if (!detail::solve_in_place(a.field(), scratch, rhs, a.rows())) {
    throw SingularMatrixError("solve_linear: matrix is singular");
  }
  std::vector<FieldElement> x;
  x.reserve(rhs.size());
  for (std::uint64_t v : rhs) x.emplace_back(a.field(), v);
  return x;
}

}  // namespace sparsemds
