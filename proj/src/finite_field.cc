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

#include "pruw/finite_field.h"

#include <set>
#include <string>
#include <utility>

#include "pruw/errors.h"

namespace pruw {
namespace {

uint64_t MulMod(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t PowMod(uint64_t base, uint64_t exp, uint64_t m) {
  uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = MulMod(result, base, m);
    base = MulMod(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit n.
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(uint64_t modulus) : q_(modulus) {
  if (modulus >= (uint64_t{1} << 63)) {
    throw ConfigError("field modulus must be below 2^63, got " +
                      std::to_string(modulus));
  }
  if (!IsPrime(modulus)) {
    throw ConfigError("field modulus q=" + std::to_string(modulus) +
                      " is not prime");
  }
}

FieldElement PrimeField::from_signed(int64_t v) const {
  if (v >= 0) return reduce(static_cast<uint64_t>(v));
  // -(v + 1) avoids overflow at INT64_MIN.
  uint64_t mag = static_cast<uint64_t>(-(v + 1)) + 1;
  return neg(reduce(mag));
}

int64_t PrimeField::to_signed(FieldElement a) const {
  if (a.value <= q_ / 2) return static_cast<int64_t>(a.value);
  return -static_cast<int64_t>(q_ - a.value);
}

FieldElement PrimeField::inv(FieldElement a) const {
  if (a.value == 0) throw DivisionByZeroError("inverse of zero in F_q");
  // Extended Euclid on signed 128-bit to stay exact for any q < 2^63.
  __int128 t = 0, new_t = 1;
  __int128 r = q_, new_r = a.value;
  while (new_r != 0) {
    __int128 quotient = r / new_r;
    t = std::exchange(new_t, t - quotient * new_t);
    r = std::exchange(new_r, r - quotient * new_r);
  }
  if (t < 0) t += q_;
  return FieldElement(static_cast<uint64_t>(t));
}

FieldElement PrimeField::pow(FieldElement base, int64_t exponent) const {
  if (exponent < 0) {
    base = inv(base);
    // Negate through unsigned arithmetic so INT64_MIN is handled.
    return FieldElement(
        PowMod(base.value, ~static_cast<uint64_t>(exponent) + 1, q_));
  }
  return FieldElement(PowMod(base.value, static_cast<uint64_t>(exponent), q_));
}

EvaluationPoints::EvaluationPoints(const PrimeField& field,
                                   std::vector<FieldElement> alphas)
    : alphas_(std::move(alphas)) {
  if (alphas_.size() >= field.modulus()) {
    throw ConfigError("need N < q: N=" + std::to_string(alphas_.size()) +
                      ", q=" + std::to_string(field.modulus()));
  }
  std::set<uint64_t> seen;
  for (FieldElement a : alphas_) {
    if (a.value >= field.modulus()) {
      throw ConfigError("evaluation point " + std::to_string(a.value) +
                        " is not reduced mod q");
    }
    if (a.value == 0) throw ConfigError("evaluation points must be nonzero");
    if (!seen.insert(a.value).second) {
      throw ConfigError("evaluation points must be distinct; " +
                        std::to_string(a.value) + " repeats");
    }
  }
}

EvaluationPoints EvaluationPoints::Default(const PrimeField& field, size_t n) {
  std::vector<FieldElement> alphas;
  alphas.reserve(n);
  for (size_t i = 1; i <= n; ++i) alphas.push_back(field.reduce(i));
  return EvaluationPoints(field, std::move(alphas));
}

std::vector<FieldElement> FieldMatrix::column(size_t c) const {
  if (c >= cols_) throw IndexError("column index out of range");
  std::vector<FieldElement> out(rows_);
  for (size_t r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

FieldMatrix FieldMatrix::Identity(size_t n) {
  FieldMatrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement(1);
  return m;
}

FieldMatrix Multiply(const PrimeField& field, const FieldMatrix& a,
                     const FieldMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("matrix product: inner dimensions differ");
  }
  FieldMatrix out(a.rows(), b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t k = 0; k < a.cols(); ++k) {
      FieldElement aik = a.at(i, k);
      if (aik.value == 0) continue;
      for (size_t j = 0; j < b.cols(); ++j) {
        field.mul_add(out.at(i, j), aik, b.at(k, j));
      }
    }
  }
  return out;
}

std::vector<FieldElement> Multiply(const PrimeField& field,
                                   const FieldMatrix& a,
                                   std::span<const FieldElement> x) {
  if (a.cols() != x.size()) {
    throw DimensionError("matrix-vector product: dimensions differ");
  }
  std::vector<FieldElement> out(a.rows());
  for (size_t i = 0; i < a.rows(); ++i) {
    FieldElement acc;
    for (size_t k = 0; k < a.cols(); ++k) field.mul_add(acc, a.at(i, k), x[k]);
    out[i] = acc;
  }
  return out;
}

FieldElement Dot(const PrimeField& field, std::span<const FieldElement> a,
                 std::span<const FieldElement> b) {
  if (a.size() != b.size()) throw DimensionError("dot product: sizes differ");
  FieldElement acc;
  for (size_t i = 0; i < a.size(); ++i) field.mul_add(acc, a[i], b[i]);
  return acc;
}

namespace {

// Reduces [a | b] in place to reduced row echelon form; returns the rank.
size_t Eliminate(const PrimeField& field, FieldMatrix& a,
                 std::vector<FieldElement>* b) {
  size_t rank = 0;
  for (size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    size_t pivot = rank;
    while (pivot < a.rows() && a.at(pivot, col).value == 0) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) {
      for (size_t j = 0; j < a.cols(); ++j) {
        std::swap(a.at(pivot, j), a.at(rank, j));
      }
      if (b) std::swap((*b)[pivot], (*b)[rank]);
    }
    FieldElement scale = field.inv(a.at(rank, col));
    for (size_t j = col; j < a.cols(); ++j) {
      a.at(rank, j) = field.mul(a.at(rank, j), scale);
    }
    if (b) (*b)[rank] = field.mul((*b)[rank], scale);
    for (size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || a.at(i, col).value == 0) continue;
      FieldElement factor = a.at(i, col);
      for (size_t j = col; j < a.cols(); ++j) {
        a.at(i, j) = field.sub(a.at(i, j), field.mul(factor, a.at(rank, j)));
      }
      if (b) (*b)[i] = field.sub((*b)[i], field.mul(factor, (*b)[rank]));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<FieldElement> SolveLinearSystem(const PrimeField& field,
                                            FieldMatrix a,
                                            std::vector<FieldElement> b) {
  if (b.size() != a.rows()) {
    throw DimensionError("right-hand side length does not match row count");
  }
  if (a.rows() < a.cols()) {
    throw UnderdeterminedError(
        "underdetermined system: " + std::to_string(a.rows()) +
        " equations for " + std::to_string(a.cols()) + " unknowns");
  }
  if (a.rows() > a.cols()) {
    throw DimensionError("overdetermined system: " + std::to_string(a.rows()) +
                         " equations for " + std::to_string(a.cols()) +
                         " unknowns");
  }
  if (Eliminate(field, a, &b) < a.cols()) {
    throw SingularMatrixError("system matrix is singular");
  }
  return b;
}

size_t Rank(const PrimeField& field, FieldMatrix a) {
  return Eliminate(field, a, nullptr);
}

FieldMatrix PowerMatrix(const PrimeField& field,
                        std::span<const FieldElement> alphas, int64_t low,
                        int64_t high) {
  if (high < low) throw DimensionError("empty exponent range");
  const auto width = static_cast<size_t>(high - low + 1);
  FieldMatrix m(alphas.size(), width);
  for (size_t n = 0; n < alphas.size(); ++n) {
    FieldElement p = field.pow(alphas[n], low);
    for (size_t k = 0; k < width; ++k) {
      m.at(n, k) = p;
      p = field.mul(p, alphas[n]);
    }
  }
  return m;
}

std::vector<FieldElement> SolvePowerSystem(const PrimeField& field,
                                           std::span<const FieldElement> answers,
                                           std::span<const FieldElement> alphas,
                                           int64_t low, int64_t high) {
  if (answers.size() != alphas.size()) {
    throw DimensionError("one answer per evaluation point is required: " +
                         std::to_string(answers.size()) + " answers, " +
                         std::to_string(alphas.size()) + " points");
  }
  return SolveLinearSystem(field, PowerMatrix(field, alphas, low, high),
                           {answers.begin(), answers.end()});
}

FieldElement EvaluateLaurent(const PrimeField& field,
                             std::span<const FieldElement> coeffs, int64_t low,
                             FieldElement alpha) {
  FieldElement acc;
  FieldElement p = field.pow(alpha, low);
  for (FieldElement c : coeffs) {
    field.mul_add(acc, c, p);
    p = field.mul(p, alpha);
  }
  return acc;
}

}  // namespace pruw
