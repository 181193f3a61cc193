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

#include "pruw/params.h"

#include <cctype>
#include <string>
#include <utility>

#include "pruw/errors.h"

namespace pruw {
namespace {

int64_t ParseInt(const std::string& s, const std::string& whole) {
  if (s.empty()) throw ConfigError("malformed rational '" + whole + "'");
  size_t pos = 0;
  int64_t v = 0;
  try {
    v = std::stoll(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("malformed rational '" + whole + "'");
  }
  if (pos != s.size()) throw ConfigError("malformed rational '" + whole + "'");
  return v;
}

size_t CountOf(Rational rate, size_t total, const char* name) {
  Rational count = rate * Rational(static_cast<int64_t>(total));
  if (count.denominator() != 1) {
    throw ConfigError(std::string(name) + " * P must be an integer; got " +
                      ToString(rate) + " * " + std::to_string(total));
  }
  return static_cast<size_t>(count.numerator());
}

}  // namespace

std::string ToString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational ParseRational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    int64_t num = ParseInt(text.substr(0, slash), text);
    int64_t den = ParseInt(text.substr(slash + 1), text);
    if (den == 0) throw ConfigError("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(ParseInt(text, text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  size_t frac_len = text.size() - dot - 1;
  if (frac_len > 15) throw ConfigError("too many decimals in '" + text + "'");
  int64_t den = 1;
  for (size_t i = 0; i < frac_len; ++i) den *= 10;
  return Rational(ParseInt(digits, text), den);
}

std::string ToString(Scheme scheme) {
  return scheme == Scheme::kCase1 ? "case1" : "case2";
}

Scheme ParseScheme(const std::string& text) {
  if (text == "case1" || text == "1") return Scheme::kCase1;
  if (text == "case2" || text == "2") return Scheme::kCase2;
  throw ConfigError("unknown scheme '" + text + "', expected case1 or case2");
}

size_t Subpacketization(size_t num_databases, Scheme scheme) {
  if (num_databases < 4) {
    throw ConfigError("need at least N=4 databases, got N=" +
                      std::to_string(num_databases));
  }
  const size_t factor = scheme == Scheme::kCase1 ? 3 : 5;
  if ((num_databases - 1) % factor != 0) {
    throw ConfigError(ToString(scheme) + " requires N = " +
                      std::to_string(factor) + "*ell + 1 (N = 1 mod " +
                      std::to_string(factor) + "), got N=" +
                      std::to_string(num_databases));
  }
  return (num_databases - 1) / factor;
}

size_t SystemParams::uplink_count() const {
  return CountOf(uplink_rate, num_subpackets, "r");
}

size_t SystemParams::downlink_count() const {
  return CountOf(downlink_rate, num_subpackets, "r'");
}

int64_t SystemParams::storage_noise_degree() const {
  const auto ell = static_cast<int64_t>(subpacket_size);
  return scheme == Scheme::kCase1 ? ell : 2 * ell;
}

int64_t SystemParams::answer_degree() const {
  const auto ell = static_cast<int64_t>(subpacket_size);
  return scheme == Scheme::kCase1 ? 2 * ell : 4 * ell;
}

SystemParams MakeParams(Scheme scheme, size_t num_databases,
                        size_t num_subpackets, size_t num_segments,
                        Rational uplink_rate, Rational downlink_rate,
                        uint64_t modulus, std::vector<uint64_t> alphas) {
  SystemParams p;
  p.scheme = scheme;
  p.num_databases = num_databases;
  p.num_subpackets = num_subpackets;
  p.num_segments = num_segments;
  p.subpacket_size = Subpacketization(num_databases, scheme);
  if (num_subpackets == 0) throw ConfigError("P must be positive");
  if (num_segments == 0 || num_subpackets % num_segments != 0) {
    throw ConfigError("B must divide P: P=" + std::to_string(num_subpackets) +
                      ", B=" + std::to_string(num_segments));
  }
  for (auto [rate, name] : {std::pair{uplink_rate, "r"},
                            std::pair{downlink_rate, "r'"}}) {
    if (rate < Rational(0) || rate > Rational(1)) {
      throw ConfigError(std::string(name) + " must lie in [0, 1], got " +
                        ToString(rate));
    }
  }
  p.uplink_rate = uplink_rate;
  p.downlink_rate = downlink_rate;
  // Validates P*r and P*r' integrality.
  (void)p.uplink_count();
  (void)p.downlink_count();

  p.field = PrimeField(modulus);
  if (alphas.empty()) {
    p.alphas = EvaluationPoints::Default(p.field, num_databases);
  } else {
    if (alphas.size() != num_databases) {
      throw ConfigError("expected " + std::to_string(num_databases) +
                        " evaluation points, got " +
                        std::to_string(alphas.size()));
    }
    std::vector<FieldElement> pts;
    for (uint64_t a : alphas) pts.emplace_back(a);
    p.alphas = EvaluationPoints(p.field, std::move(pts));
  }
  return p;
}

}  // namespace pruw
