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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "mubkit/pauli.hpp"

namespace mubkit {

/// Orthonormal basis of C^d stored as the columns of a d x d unitary.
template <typename Real>
using BasisT = ComplexMatrixT<Real>;
using Basis = BasisT<double>;

struct SpectralConfig {
  double tol = 1e-10;
  int max_retries = 8;
  std::uint64_t rng_seed = 0x6d75626b6974ULL;
};

class SpectralError : public std::runtime_error {
 public:
  SpectralError(const std::string& what, std::uint64_t seed)
      : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"), message_(what), seed_(seed) {}
  std::uint64_t seed() const { return seed_; }
  /// what() without the seed suffix.
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  std::uint64_t seed_;
};

/// SplitMix64: used both as the coefficient stream and to derive sub-seeds.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
  /// Uniform in [-1, 1), bit-identical on every platform.
  double symmetric_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-52 - 1.0; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  return SplitMix64(seed ^ (stream * 0xd1b54a32d192ed03ULL)).next();
}

/// Largest off-diagonal modulus of B^† U B.
template <typename DerivedU, typename DerivedB>
typename DerivedU::RealScalar off_diagonal_max(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedB>& b) {
  using Real = typename DerivedU::RealScalar;
  if (u.rows() != u.cols() || b.rows() != u.rows()) throw std::invalid_argument("is_diagonal_in: dimension mismatch");
  const ComplexMatrixT<Real> c = b.adjoint() * u * b;
  Real worst = 0;
  for (Eigen::Index j = 0; j < c.cols(); ++j) {
    for (Eigen::Index i = 0; i < c.rows(); ++i) {
      if (i != j) worst = std::max(worst, std::abs(c(i, j)));
    }
  }
  return worst;
}

template <typename DerivedU, typename DerivedB>
bool is_diagonal_in(const Eigen::MatrixBase<DerivedU>& u, const Eigen::MatrixBase<DerivedB>& b, double tol) {
  return off_diagonal_max(u, b) <= tol;
}

/// Joint eigenbasis plus eigenvalue table: eigenvalues(t, k) is the eigenvalue of
/// ops[t] on basis column k.
template <typename Real>
struct JointEigendecomposition {
  BasisT<Real> basis;
  ComplexMatrixT<Real> eigenvalues;
};

namespace detail {

template <typename Real>
Real canonical_angle(std::complex<Real> z, Real eps) {
  Real a = std::arg(z);
  if (a < 0) a += 2 * std::numbers::pi_v<Real>;
  if (a > 2 * std::numbers::pi_v<Real> - eps) a = 0;
  return a;
}

}  // namespace detail

/// Rescales each column so its first component of modulus > threshold is real
/// positive, then orders columns lexicographically by their eigenvalue-angle
/// tuples in [0, 2 pi). Sorting is stable.
template <typename Real>
void canonicalize_eigenbasis(JointEigendecomposition<Real>& jd, Real threshold) {
  auto& b = jd.basis;
  for (Eigen::Index k = 0; k < b.cols(); ++k) {
    for (Eigen::Index i = 0; i < b.rows(); ++i) {
      const Real mag = std::abs(b(i, k));
      if (mag > threshold) {
        b.col(k) *= std::conj(b(i, k)) / mag;
        b(i, k) = std::complex<Real>(b(i, k).real(), 0);
        break;
      }
    }
  }
  const Eigen::Index d = b.cols();
  const Real angle_eps = Real(1e-6);
  std::vector<std::vector<Real>> keys(static_cast<std::size_t>(d));
  for (Eigen::Index k = 0; k < d; ++k) {
    for (Eigen::Index t = 0; t < jd.eigenvalues.rows(); ++t) {
      keys[static_cast<std::size_t>(k)].push_back(detail::canonical_angle(jd.eigenvalues(t, k), angle_eps));
    }
  }
  std::vector<Eigen::Index> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    const auto& kx = keys[static_cast<std::size_t>(x)];
    const auto& ky = keys[static_cast<std::size_t>(y)];
    for (std::size_t t = 0; t < kx.size(); ++t) {
      if (kx[t] < ky[t] - angle_eps) return true;
      if (ky[t] < kx[t] - angle_eps) return false;
    }
    return false;
  });
  BasisT<Real> sorted(b.rows(), d);
  ComplexMatrixT<Real> evals(jd.eigenvalues.rows(), d);
  for (Eigen::Index k = 0; k < d; ++k) {
    sorted.col(k) = b.col(order[static_cast<std::size_t>(k)]);
    evals.col(k) = jd.eigenvalues.col(order[static_cast<std::size_t>(k)]);
  }
  b = std::move(sorted);
  jd.eigenvalues = std::move(evals);
}

/// Diagonal of B^† U B for every op.
template <typename Real>
ComplexMatrixT<Real> eigenvalue_table(std::span<const ComplexMatrixT<Real>> ops, const BasisT<Real>& b) {
  ComplexMatrixT<Real> evals(static_cast<Eigen::Index>(ops.size()), b.cols());
  for (std::size_t t = 0; t < ops.size(); ++t) {
    evals.row(static_cast<Eigen::Index>(t)) = (b.adjoint() * ops[t] * b).diagonal().transpose();
  }
  return evals;
}

/// Common orthonormal eigenbasis of pairwise-commuting unitaries.
///
/// A random Hermitian combination H = sum_t c_t (U_t + U_t^†)/2 + r_t (U_t - U_t^†)/(2i)
/// is diagonalized and every U_t is then checked to be diagonal in the
/// resulting basis; a failed check retries with fresh coefficients. The output
/// is canonicalized (see canonicalize_eigenbasis) so it is a pure function of
/// (ops, cfg).
template <typename Real>
JointEigendecomposition<Real> joint_eigendecomposition(std::span<const ComplexMatrixT<Real>> ops, const SpectralConfig& cfg) {
  if (!(cfg.tol > 0)) throw std::invalid_argument("spectral tolerance must be positive");
  if (ops.empty()) throw std::invalid_argument("joint_eigenbasis needs at least one operator");
  const Eigen::Index d = ops.front().rows();
  const Real tol = static_cast<Real>(cfg.tol);
  for (const auto& u : ops) {
    if (u.rows() != d || u.cols() != d) throw std::invalid_argument("operators must share one square dimension");
    const Real unitary_dev = (u.adjoint() * u - ComplexMatrixT<Real>::Identity(d, d)).cwiseAbs().maxCoeff();
    if (unitary_dev > tol) throw std::invalid_argument("operator is not unitary within tolerance");
  }
  for (std::size_t s = 0; s < ops.size(); ++s) {
    for (std::size_t t = s + 1; t < ops.size(); ++t) {
      if ((ops[s] * ops[t] - ops[t] * ops[s]).cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("operators " + std::to_string(s) + " and " + std::to_string(t) + " do not commute");
      }
    }
  }

  SplitMix64 rng(cfg.rng_seed);
  const std::complex<Real> half_i(0, Real(0.5));
  Real last_dev = 0;
  for (int attempt = 0; attempt <= cfg.max_retries; ++attempt) {
    ComplexMatrixT<Real> h = ComplexMatrixT<Real>::Zero(d, d);
    for (const auto& u : ops) {
      const Real c = static_cast<Real>(rng.symmetric_unit());
      const Real r = static_cast<Real>(rng.symmetric_unit());
      const ComplexMatrixT<Real> ua = u.adjoint();
      h += (c / 2) * (u + ua);
      h -= r * half_i * (u - ua);
    }
    h = (h + h.adjoint().eval()) / Real(2);
    Eigen::SelfAdjointEigenSolver<ComplexMatrixT<Real>> es(h);
    if (es.info() != Eigen::Success) continue;
    const BasisT<Real> b = es.eigenvectors();
    last_dev = 0;
    for (const auto& u : ops) last_dev = std::max(last_dev, off_diagonal_max(u, b));
    if (last_dev <= tol) {
      JointEigendecomposition<Real> jd{b, eigenvalue_table<Real>(ops, b)};
      canonicalize_eigenbasis(jd, std::sqrt(tol));
      return jd;
    }
  }
  throw SpectralError("joint diagonalization failed after " + std::to_string(cfg.max_retries + 1) +
                          " attempts (worst off-diagonal " + std::to_string(static_cast<double>(last_dev)) + ")",
                      cfg.rng_seed);
}

template <typename Real>
BasisT<Real> joint_eigenbasis(std::span<const ComplexMatrixT<Real>> ops, const SpectralConfig& cfg) {
  return joint_eigendecomposition<Real>(ops, cfg).basis;
}

inline Basis joint_eigenbasis(const std::vector<CMatrix>& ops, const SpectralConfig& cfg) {
  return joint_eigenbasis<double>(std::span<const CMatrix>(ops), cfg);
}

/// sum_k lambda_k |psi_k><psi_k| for eigenvalue row t.
template <typename Real>
ComplexMatrixT<Real> reconstruct(const JointEigendecomposition<Real>& jd, Eigen::Index t) {
  return jd.basis * jd.eigenvalues.row(t).transpose().asDiagonal() * jd.basis.adjoint();
}

}  // namespace mubkit
