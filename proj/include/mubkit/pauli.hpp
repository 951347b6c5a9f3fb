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

#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "mubkit/finite_field.hpp"

namespace mubkit {

template <typename Real>
using ComplexMatrixT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using ComplexVectorT = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;

using CMatrix = ComplexMatrixT<double>;
using CVector = ComplexVectorT<double>;

/// Largest Hilbert-space dimension for which dense operator matrices are built.
inline constexpr std::uint64_t kMaxDim = std::uint64_t{1} << 14;

/// p^m, throwing std::invalid_argument when it exceeds kMaxDim.
std::uint64_t checked_dimension(std::uint32_t p, std::uint32_t m);

/// exp(2 pi i k / n). Multiples of a quarter turn are returned exactly.
template <typename Real = double>
std::complex<Real> root_of_unity(std::int64_t k, std::int64_t n) {
  k = mod_reduce(k, n);
  if ((4 * k) % n == 0) {
    switch ((4 * k) / n) {
      case 0: return {1, 0};
      case 1: return {0, 1};
      case 2: return {-1, 0};
      default: return {0, -1};
    }
  }
  return std::polar(Real{1}, 2 * std::numbers::pi_v<Real> * static_cast<Real>(k) / static_cast<Real>(n));
}

/// Exponent vector (alpha | beta) in F_p^{2m} labelling X_p(alpha) Z_p(beta).
struct SymplecticVector {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> alpha;
  std::vector<std::uint32_t> beta;

  /// Validating constructor: equal-length halves, entries reduced into [0, p).
  static SymplecticVector make(std::uint32_t p, std::vector<std::int64_t> alpha, std::vector<std::int64_t> beta);
  static SymplecticVector identity(std::uint32_t p, std::uint32_t m);

  std::uint32_t m() const { return static_cast<std::uint32_t>(alpha.size()); }
  bool is_identity() const;
  /// "k1k2|l1l2" for p <= 10, otherwise space separated digits.
  std::string to_string() const;

  auto operator<=>(const SymplecticVector&) const = default;
};

/// omega^phase_exp X_p(alpha) Z_p(beta). Constructions only use phase_exp = 0.
struct PauliOp {
  SymplecticVector vector;
  std::uint32_t phase_exp = 0;
};

/// alpha . beta' - alpha' . beta  (mod p).
std::uint32_t symplectic_form(const SymplecticVector& u, const SymplecticVector& v);
bool commutes(const SymplecticVector& u, const SymplecticVector& v);

/// Digits of `index` in base p, most significant first (length m).
std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint32_t p, std::uint32_t m);
/// Inverse of digits_of: big-endian index of |a_1 ... a_m>.
std::uint64_t index_of(const std::vector<std::uint32_t>& digits, std::uint32_t p);

/// Matrix of op on (C^p)^{⊗m}: sum_a omega^{a.beta + j} |a + alpha><a|, omega = exp(2 pi i/p).
template <typename Real = double>
ComplexMatrixT<Real> to_matrix(const PauliOp& op, std::uint32_t p, std::uint32_t m) {
  const auto& v = op.vector;
  if (v.p != p || v.m() != m) throw std::invalid_argument("Pauli operator does not match (p, m)");
  const std::uint64_t d = checked_dimension(p, m);
  ComplexMatrixT<Real> out = ComplexMatrixT<Real>::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<std::uint32_t> target(m);
  for (std::uint64_t col = 0; col < d; ++col) {
    const auto a = digits_of(col, p, m);
    std::int64_t phase = op.phase_exp;
    for (std::uint32_t i = 0; i < m; ++i) {
      phase += std::int64_t{a[i]} * v.beta[i];
      target[i] = (a[i] + v.alpha[i]) % p;
    }
    out(static_cast<Eigen::Index>(index_of(target, p)), static_cast<Eigen::Index>(col)) =
        root_of_unity<Real>(phase % p, p);
  }
  return out;
}

template <typename Real = double>
ComplexMatrixT<Real> to_matrix(const SymplecticVector& v) {
  return to_matrix<Real>(PauliOp{v, 0}, v.p, v.m());
}

/// Single-qudit X^k Z^l on C^p.
template <typename Real = double>
ComplexMatrixT<Real> weyl_matrix(std::uint32_t p, std::int64_t k, std::int64_t l) {
  return to_matrix<Real>(SymplecticVector::make(p, {k}, {l}));
}

/// Hilbert-Schmidt inner product Tr(A^† B).
template <typename DerivedA, typename DerivedB>
typename DerivedA::Scalar trace_inner(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("trace_inner: dimension mismatch");
  return a.conjugate().cwiseProduct(b).sum();
}

enum class ClassKind { kZ, kX };

/// Generator matrix of a linear commuting class: (0 | 1) for kZ, (1 | A) for kX.
struct ClassSpec {
  ClassKind kind = ClassKind::kZ;
  FpMatrix a;

  static ClassSpec z_class() { return {ClassKind::kZ, {}}; }
  static ClassSpec x_class(FpMatrix a) { return {ClassKind::kX, std::move(a)}; }
};

/// The p^m vectors of a linear class, ordered by x in F_p^m lexicographically:
/// kZ gives (0 | x), kX gives (x | xA). Throws if A is not symmetric.
std::vector<SymplecticVector> enumerate_class(const ClassSpec& spec, std::uint32_t p, std::uint32_t m);

/// Every vector of F_p^{2m}, i.e. all of P_0(p, m), in lexicographic order.
std::vector<SymplecticVector> all_p0_vectors(std::uint32_t p, std::uint32_t m);

}  // namespace mubkit
