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

#include "mubkit/finite_field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mubkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

void require_prime(std::uint64_t p) {
  if (p > kMaxPrime) {
    throw std::invalid_argument("characteristic " + std::to_string(p) +
                                " exceeds the supported maximum 2^20");
  }
  if (!is_prime(p)) {
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  }
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    std::uint32_t e = 0;
    while (n % q == 0) {
      n /= q;
      ++e;
    }
    if (e > 0) out.emplace_back(q, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::optional<PrimePower> as_prime_power(std::uint64_t d) {
  const auto f = factorize(d);
  if (f.size() != 1 || f[0].first > kMaxPrime) return std::nullopt;
  return PrimePower{static_cast<std::uint32_t>(f[0].first), f[0].second};
}

std::string factorization_string(std::uint64_t n) {
  const auto f = factorize(n);
  if (f.empty()) return std::to_string(n);
  std::ostringstream os;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i > 0) os << "·";
    os << f[i].first;
    if (f[i].second > 1) os << '^' << f[i].second;
  }
  return os.str();
}

std::int64_t mod_reduce(std::int64_t a, std::int64_t p) {
  const std::int64_t r = a % p;
  return r < 0 ? r + p : r;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  a = mod_reduce(a, p);
  if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(p));
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    const std::int64_t q = r0 / r1;
    std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
  }
  return mod_reduce(s0, p);
}

// ---------------------------------------------------------------------------
// FieldElement

FieldElement::FieldElement(std::int64_t value, std::uint32_t modulus) : modulus_(modulus) {
  require_prime(modulus);
  value_ = static_cast<std::uint32_t>(mod_reduce(value, modulus));
}

FieldElement FieldElement::inverse() const {
  return FieldElement(Unchecked{}, static_cast<std::uint32_t>(mod_inverse(value_, modulus_)), modulus_);
}

FieldElement fp_arith(FieldElement a, FieldElement b, ArithOp op) {
  if (a.modulus_ != b.modulus_) {
    throw std::invalid_argument("modulus mismatch: F_" + std::to_string(a.modulus_) + " vs F_" +
                                std::to_string(b.modulus_));
  }
  const std::int64_t p = a.modulus_;
  const std::int64_t x = a.value_, y = b.value_;
  std::int64_t r = 0;
  switch (op) {
    case ArithOp::kAdd: r = (x + y) % p; break;
    case ArithOp::kSub: r = mod_reduce(x - y, p); break;
    case ArithOp::kMul: r = (x * y) % p; break;
    case ArithOp::kDiv: r = (x * mod_inverse(y, p)) % p; break;
  }
  return FieldElement(FieldElement::Unchecked{}, static_cast<std::uint32_t>(r), a.modulus_);
}

// ---------------------------------------------------------------------------
// FpPoly

FpPoly::FpPoly(std::uint32_t p, std::vector<std::int64_t> coeffs) : p_(p) {
  require_prime(p);
  coeffs_.reserve(coeffs.size());
  for (auto c : coeffs) coeffs_.push_back(static_cast<std::uint32_t>(mod_reduce(c, p)));
  trim();
}

FpPoly FpPoly::monomial(std::uint32_t p, int degree, std::int64_t coeff) {
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = coeff;
  return FpPoly(p, std::move(c));
}

void FpPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::uint32_t FpPoly::coeff(int i) const {
  return (i >= 0 && i < static_cast<int>(coeffs_.size())) ? coeffs_[static_cast<std::size_t>(i)] : 0;
}

std::uint32_t FpPoly::evaluate(std::uint32_t x) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = (acc * x + *it) % p_;
  return static_cast<std::uint32_t>(acc);
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::int64_t inv = mod_inverse(coeffs_.back(), p_);
  FpPoly out = *this;
  for (auto& c : out.coeffs_) c = static_cast<std::uint32_t>((c * inv) % p_);
  return out;
}

std::string FpPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const std::uint32_t c = coeff(i);
    if (c == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c != 1 || i == 0) os << c;
    if (i >= 1) os << 'x';
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

static void require_same_field(const FpPoly& a, const FpPoly& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different fields");
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  std::vector<std::int64_t> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = static_cast<std::int64_t>(a.coeff(static_cast<int>(i))) - b.coeff(static_cast<int>(i));
  }
  return FpPoly(a.p_, std::move(c));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly::zero(a.p_);
  const std::uint64_t p = a.p_;
  std::vector<std::uint64_t> acc(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] = (acc[i + j] + std::uint64_t{a.coeffs_[i]} * b.coeffs_[j]) % p;
    }
  }
  return FpPoly(a.p_, std::vector<std::int64_t>(acc.begin(), acc.end()));
}

std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b) {
  require_same_field(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::int64_t p = a.modulus();
  const std::int64_t lead_inv = mod_inverse(b.coeff(b.degree()), p);
  std::vector<std::int64_t> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<std::int64_t> quot(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)), 0);
  for (int k = a.degree(); k >= db; --k) {
    const std::int64_t c = (rem[static_cast<std::size_t>(k)] * lead_inv) % p;
    if (c == 0) continue;
    quot[static_cast<std::size_t>(k - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(k - db + j)];
      r = mod_reduce(r - c * b.coeff(j), p);
    }
  }
  return {FpPoly(a.modulus(), std::move(quot)), FpPoly(a.modulus(), std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).second; }

FpPoly gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

FpPoly powmod(FpPoly base, std::uint64_t exponent, const FpPoly& modulus) {
  FpPoly result(modulus.modulus(), {1});
  result = result % modulus;
  base = base % modulus;
  while (exponent > 0) {
    if (exponent & 1) result = (result * base) % modulus;
    base = (base * base) % modulus;
    exponent >>= 1;
  }
  return result;
}

bool is_irreducible(const FpPoly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const std::uint32_t p = f.modulus();
  const FpPoly x = FpPoly::monomial(p, 1);
  FpPoly h = x % f;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, p, f);
    if (gcd(h - x, f).degree() != 0) return false;
  }
  return true;
}

FpPoly find_irreducible(std::uint32_t p, int degree) {
  require_prime(p);
  if (degree < 1) throw std::invalid_argument("irreducible polynomial degree must be positive");
  // Odometer over (a_0, ..., a_{degree-1}) with a_0 fastest.
  std::vector<std::int64_t> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = 1;
  while (true) {
    FpPoly f(p, c);
    if (is_irreducible(f)) return f;
    int pos = 0;
    while (pos < degree && ++c[static_cast<std::size_t>(pos)] == p) c[static_cast<std::size_t>(pos++)] = 0;
    if (pos == degree) break;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable for prime p
}

// ---------------------------------------------------------------------------
// ExtFieldElement

ExtFieldElement::ExtFieldElement(FpPoly modulus_poly, std::vector<std::int64_t> coords)
    : modulus_(std::move(modulus_poly)) {
  if (!is_irreducible(modulus_)) {
    throw std::invalid_argument("modulus polynomial " + modulus_.to_string() + " is reducible");
  }
  if (coords.size() != static_cast<std::size_t>(modulus_.degree())) {
    throw std::invalid_argument("extension element needs exactly " + std::to_string(modulus_.degree()) +
                                " coordinates");
  }
  coords_.reserve(coords.size());
  for (auto c : coords) coords_.push_back(static_cast<std::uint32_t>(mod_reduce(c, modulus_.modulus())));
}

ExtFieldElement ExtFieldElement::from_poly(const FpPoly& f, const FpPoly& value) {
  const FpPoly r = value % f;
  std::vector<std::uint32_t> coords(static_cast<std::size_t>(f.degree()));
  for (int i = 0; i < f.degree(); ++i) coords[static_cast<std::size_t>(i)] = r.coeff(i);
  return ExtFieldElement(f, std::move(coords), true);
}

ExtFieldElement ExtFieldElement::zero(const FpPoly& f) {
  return ExtFieldElement(f, std::vector<std::int64_t>(static_cast<std::size_t>(std::max(f.degree(), 0)), 0));
}

ExtFieldElement ExtFieldElement::one(const FpPoly& f) { return generator_power(f, 0); }

ExtFieldElement ExtFieldElement::generator_power(const FpPoly& f, std::uint64_t k) {
  if (!is_irreducible(f)) throw std::invalid_argument("modulus polynomial " + f.to_string() + " is reducible");
  return from_poly(f, powmod(FpPoly::monomial(f.modulus(), 1), k, f));
}

bool ExtFieldElement::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](auto c) { return c == 0; });
}

static FpPoly as_poly(const ExtFieldElement& e) {
  return FpPoly(e.modulus_poly().modulus(), std::vector<std::int64_t>(e.coords().begin(), e.coords().end()));
}

ExtFieldElement ext_add(const ExtFieldElement& x, const ExtFieldElement& y) {
  if (!(x.modulus_ == y.modulus_)) throw std::invalid_argument("extension elements use different moduli");
  return ExtFieldElement::from_poly(x.modulus_, as_poly(x) + as_poly(y));
}

ExtFieldElement ext_mul(const ExtFieldElement& x, const ExtFieldElement& y) {
  if (!(x.modulus_ == y.modulus_)) throw std::invalid_argument("extension elements use different moduli");
  return ExtFieldElement::from_poly(x.modulus_, as_poly(x) * as_poly(y));
}

// ---------------------------------------------------------------------------
// Structure matrices and F_p linear algebra

std::vector<FpMatrix> wf_structure_matrices(std::uint32_t p, std::uint32_t m, const FpPoly& modulus_poly) {
  require_prime(p);
  if (modulus_poly.modulus() != p || modulus_poly.degree() != static_cast<int>(m)) {
    throw std::invalid_argument("modulus polynomial must have degree " + std::to_string(m) + " over F_" +
                                std::to_string(p));
  }
  if (!is_irreducible(modulus_poly)) {
    throw std::invalid_argument("modulus polynomial " + modulus_poly.to_string() + " is reducible");
  }
  const int n = static_cast<int>(m);
  std::vector<FpMatrix> out(m, FpMatrix::Zero(n, n));
  const FpPoly g = FpPoly::monomial(p, 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const FpPoly prod = powmod(g, static_cast<std::uint64_t>(i + j), modulus_poly);
      for (int l = 0; l < n; ++l) out[static_cast<std::size_t>(l)](i, j) = prod.coeff(l);
    }
  }
  return out;
}

std::int64_t det_mod_p(FpMatrix a, std::uint32_t p) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const std::int64_t q = p;
  const Eigen::Index n = a.rows();
  a = a.unaryExpr([q](std::int64_t v) { return mod_reduce(v, q); });
  std::int64_t det = 1;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    while (pivot < n && a(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = mod_reduce(-det, q);
    }
    det = (det * a(col, col)) % q;
    const std::int64_t inv = mod_inverse(a(col, col), q);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const std::int64_t f = (a(r, col) * inv) % q;
      if (f == 0) continue;
      for (Eigen::Index c = col; c < n; ++c) a(r, c) = mod_reduce(a(r, c) - f * a(col, c), q);
    }
  }
  return det;
}

bool is_symmetric(const FpMatrix& a) { return a.rows() == a.cols() && a == a.transpose(); }

}  // namespace mubkit
