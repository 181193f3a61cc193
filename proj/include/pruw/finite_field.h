// Copyright 2026 The pruw authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace pruw {

// 2^61 - 1, the default production modulus.
inline constexpr uint64_t kMersenne61 = (uint64_t{1} << 61) - 1;

// A residue in [0, q). The modulus lives in the PrimeField that produced it.
struct FieldElement {
  uint64_t value = 0;

  constexpr FieldElement() = default;
  constexpr explicit FieldElement(uint64_t v) : value(v) {}

  friend constexpr auto operator<=>(const FieldElement&,
                                    const FieldElement&) = default;
};

bool IsPrime(uint64_t n);

// Arithmetic modulo a prime q < 2^63.
class PrimeField {
 public:
  explicit PrimeField(uint64_t modulus = kMersenne61);

  uint64_t modulus() const { return q_; }

  // Reduces an arbitrary unsigned value.
  FieldElement reduce(uint64_t v) const { return FieldElement(v % q_); }
  // Signed embedding: -k maps to q - k.
  FieldElement from_signed(int64_t v) const;
  // Inverse of from_signed for residues; values above q/2 map to negatives.
  int64_t to_signed(FieldElement a) const;

  FieldElement zero() const { return FieldElement(0); }
  FieldElement one() const { return FieldElement(1); }

  FieldElement add(FieldElement a, FieldElement b) const {
    uint64_t s = a.value + b.value;
    return FieldElement(s >= q_ ? s - q_ : s);
  }
  FieldElement sub(FieldElement a, FieldElement b) const {
    return FieldElement(a.value >= b.value ? a.value - b.value
                                           : q_ - (b.value - a.value));
  }
  FieldElement neg(FieldElement a) const {
    return FieldElement(a.value == 0 ? 0 : q_ - a.value);
  }
  FieldElement mul(FieldElement a, FieldElement b) const {
    auto prod = static_cast<unsigned __int128>(a.value) * b.value;
    return FieldElement(static_cast<uint64_t>(prod % q_));
  }
  // Throws DivisionByZeroError for a == 0.
  FieldElement inv(FieldElement a) const;
  // Negative exponents are powers of the inverse; base must be nonzero then.
  FieldElement pow(FieldElement base, int64_t exponent) const;

  // a += b * c
  void mul_add(FieldElement& acc, FieldElement b, FieldElement c) const {
    acc = add(acc, mul(b, c));
  }

  friend bool operator==(const PrimeField& a, const PrimeField& b) {
    return a.q_ == b.q_;
  }

 private:
  uint64_t q_;
};

// The public constants alpha_1..alpha_N, one per database.
class EvaluationPoints {
 public:
  EvaluationPoints() = default;
  // Validates: all distinct, all nonzero, all < q, N < q.
  EvaluationPoints(const PrimeField& field, std::vector<FieldElement> alphas);

  // alpha_n = n for n = 1..N.
  static EvaluationPoints Default(const PrimeField& field, size_t n);

  size_t size() const { return alphas_.size(); }
  // Zero-based.
  FieldElement operator[](size_t i) const { return alphas_[i]; }
  std::span<const FieldElement> values() const { return alphas_; }

 private:
  std::vector<FieldElement> alphas_;
};

// Dense row-major matrix over a prime field.
class FieldMatrix {
 public:
  FieldMatrix() = default;
  FieldMatrix(size_t rows, size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  size_t size() const { return data_.size(); }

  FieldElement& at(size_t r, size_t c) { return data_[r * cols_ + c]; }
  FieldElement at(size_t r, size_t c) const { return data_[r * cols_ + c]; }

  std::span<const FieldElement> data() const { return data_; }
  std::span<FieldElement> data() { return data_; }

  std::vector<FieldElement> column(size_t c) const;

  static FieldMatrix Identity(size_t n);

  friend bool operator==(const FieldMatrix&, const FieldMatrix&) = default;

 private:
  size_t rows_ = 0;
  size_t cols_ = 0;
  std::vector<FieldElement> data_;
};

FieldMatrix Multiply(const PrimeField& field, const FieldMatrix& a,
                     const FieldMatrix& b);
std::vector<FieldElement> Multiply(const PrimeField& field,
                                   const FieldMatrix& a,
                                   std::span<const FieldElement> x);
FieldElement Dot(const PrimeField& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b);

// Solves a x = b by Gauss-Jordan elimination.
//   rows < cols                -> UnderdeterminedError
//   rows > cols                -> DimensionError
//   rank deficient square      -> SingularMatrixError
std::vector<FieldElement> SolveLinearSystem(const PrimeField& field,
                                            FieldMatrix a,
                                            std::vector<FieldElement> b);

// Rank of a (not modified).
size_t Rank(const PrimeField& field, FieldMatrix a);

// Row n is (alpha_n^low, alpha_n^(low+1), ..., alpha_n^high).
FieldMatrix PowerMatrix(const PrimeField& field,
                        std::span<const FieldElement> alphas, int64_t low,
                        int64_t high);

// Finds c_low..c_high with sum_k c_k alpha_n^k = answers[n] for every n.
// Result is ordered from the lowest exponent to the highest.
std::vector<FieldElement> SolvePowerSystem(const PrimeField& field,
                                           std::span<const FieldElement> answers,
                                           std::span<const FieldElement> alphas,
                                           int64_t low, int64_t high);

// Evaluates sum_k coeffs[k - low] alpha^k.
FieldElement EvaluateLaurent(const PrimeField& field,
                             std::span<const FieldElement> coeffs, int64_t low,
                             FieldElement alpha);

}  // namespace pruw
