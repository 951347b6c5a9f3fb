// Copyright 2026 The mubkit Authors
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

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace mubkit {

/// Dense matrix over F_p. Entries are kept reduced to [0, p).
using FpMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// Largest characteristic accepted by the field layer.
inline constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 20;

bool is_prime(std::uint64_t n);

/// Throws std::invalid_argument unless p is a prime no larger than kMaxPrime.
void require_prime(std::uint64_t p);

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n);

/// d = p^m decomposition, or nullopt if d is not a prime power (d = 1 included).
std::optional<PrimePower> as_prime_power(std::uint64_t d);

/// Human-readable factorization, e.g. "2·3", "3^2", "13".
std::string factorization_string(std::uint64_t n);

// Raw residue helpers used throughout the finite-field code.
std::int64_t mod_reduce(std::int64_t a, std::int64_t p);
std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

enum class ArithOp { kAdd, kSub, kMul, kDiv };

/// An element of the prime field F_p.
class FieldElement {
 public:
  FieldElement(std::int64_t value, std::uint32_t modulus);

  std::uint32_t value() const { return value_; }
  std::uint32_t modulus() const { return modulus_; }
  bool is_zero() const { return value_ == 0; }

  FieldElement inverse() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  struct Unchecked {};
  FieldElement(Unchecked, std::uint32_t value, std::uint32_t modulus)
      : value_(value), modulus_(modulus) {}

  friend class FpPoly;
  friend FieldElement fp_arith(FieldElement, FieldElement, ArithOp);

  std::uint32_t value_;
  std::uint32_t modulus_;
};

/// Exact mod-p arithmetic. Throws std::invalid_argument on modulus mismatch
/// and std::domain_error on division by zero.
FieldElement fp_arith(FieldElement a, FieldElement b, ArithOp op);

inline FieldElement operator+(FieldElement a, FieldElement b) { return fp_arith(a, b, ArithOp::kAdd); }
inline FieldElement operator-(FieldElement a, FieldElement b) { return fp_arith(a, b, ArithOp::kSub); }
inline FieldElement operator*(FieldElement a, FieldElement b) { return fp_arith(a, b, ArithOp::kMul); }
inline FieldElement operator/(FieldElement a, FieldElement b) { return fp_arith(a, b, ArithOp::kDiv); }

/// Univariate polynomial over F_p, coefficients lowest degree first.
/// The zero polynomial has degree -1 and an empty coefficient list.
class FpPoly {
 public:
  FpPoly(std::uint32_t p, std::vector<std::int64_t> coeffs);

  static FpPoly zero(std::uint32_t p) { return FpPoly(p, {}); }
  static FpPoly monomial(std::uint32_t p, int degree, std::int64_t coeff = 1);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  /// Residue of the x^i coefficient; zero past the degree.
  std::uint32_t coeff(int i) const;
  FieldElement coefficient(int i) const { return FieldElement(coeff(i), p_); }
  const std::vector<std::uint32_t>& coeffs() const { return coeffs_; }

  std::uint32_t evaluate(std::uint32_t x) const;
  FpPoly monic() const;
  std::string to_string() const;

  friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
  friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
  friend bool operator==(const FpPoly&, const FpPoly&) = default;

 private:
  void trim();

  std::uint32_t p_;
  std::vector<std::uint32_t> coeffs_;
};

/// Polynomial long division; returns (quotient, remainder). Divisor must be nonzero.
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd (zero if both inputs are zero).
FpPoly gcd(FpPoly a, FpPoly b);
FpPoly powmod(FpPoly base, std::uint64_t exponent, const FpPoly& modulus);

/// Ben-Or test: f of degree n is irreducible iff gcd(x^{p^i} - x, f) = 1 for 1 <= i <= n/2.
bool is_irreducible(const FpPoly& f);

/// Lexicographically smallest monic irreducible polynomial of the given degree,
/// enumerated with a_0 varying fastest, i.e. ordered by (a_{degree-1}, ..., a_0).
FpPoly find_irreducible(std::uint32_t p, int degree);

/// Element of F_{p^m} = F_p[x]/(f), stored as coordinates over the power basis
/// 1, g, ..., g^{m-1} of a root g of f.
class ExtFieldElement {
 public:
  /// Throws if f is not irreducible or coords has the wrong length.
  ExtFieldElement(FpPoly modulus_poly, std::vector<std::int64_t> coords);

  static ExtFieldElement zero(const FpPoly& f);
  static ExtFieldElement one(const FpPoly& f);
  /// g^k reduced modulo f.
  static ExtFieldElement generator_power(const FpPoly& f, std::uint64_t k);

  const std::vector<std::uint32_t>& coords() const { return coords_; }
  const FpPoly& modulus_poly() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  bool is_zero() const;

  friend ExtFieldElement ext_add(const ExtFieldElement& x, const ExtFieldElement& y);
  friend ExtFieldElement ext_mul(const ExtFieldElement& x, const ExtFieldElement& y);
  friend bool operator==(const ExtFieldElement&, const ExtFieldElement&) = default;

 private:
  ExtFieldElement(FpPoly modulus_poly, std::vector<std::uint32_t> coords, bool /*trusted*/)
      : modulus_(std::move(modulus_poly)), coords_(std::move(coords)) {}
  static ExtFieldElement from_poly(const FpPoly& f, const FpPoly& value);

  FpPoly modulus_;
  std::vector<std::uint32_t> coords_;
};

ExtFieldElement ext_add(const ExtFieldElement& x, const ExtFieldElement& y);
/// Product reduced modulo the shared modulus polynomial. Throws on mismatch.
ExtFieldElement ext_mul(const ExtFieldElement& x, const ExtFieldElement& y);

inline ExtFieldElement operator+(const ExtFieldElement& x, const ExtFieldElement& y) { return ext_add(x, y); }
inline ExtFieldElement operator*(const ExtFieldElement& x, const ExtFieldElement& y) { return ext_mul(x, y); }

/// Structure-constant matrices B_1..B_m of multiplication in F_{p^m} over the
/// power basis: (B_l)_{ij} is the g^{l-1} coordinate of g^{i-1} g^{j-1}.
/// Each B_l is symmetric. Throws if modulus_poly is reducible or mismatched.
std::vector<FpMatrix> wf_structure_matrices(std::uint32_t p, std::uint32_t m, const FpPoly& modulus_poly);

/// Determinant over F_p by Gaussian elimination with modular inverses.
std::int64_t det_mod_p(FpMatrix a, std::uint32_t p);
bool is_symmetric(const FpMatrix& a);

}  // namespace mubkit
