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

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "mubkit/mub.hpp"

namespace mubkit {

struct CheckRecord {
  std::string name;
  double worst_deviation = 0;
  /// Indices of the worst entry; meaning depends on the check.
  std::vector<std::size_t> location;
  bool passed = true;
  /// Number of items examined (inner products, matrices, ...).
  std::uint64_t checked = 0;
  /// Fraction of the exhaustive work actually performed.
  double coverage = 1.0;
};

struct VerifyReport {
  bool passed = true;
  double tolerance = 0;
  std::vector<CheckRecord> checks;

  void add(CheckRecord record) {
    passed = passed && record.passed;
    checks.push_back(std::move(record));
  }
  const CheckRecord* find(std::string_view name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// max |(B^† B - 1)_{jk}|, location (row, col).
template <typename Derived>
CheckRecord orthonormal_record(const Eigen::MatrixBase<Derived>& b, double tol) {
  using Real = typename Derived::RealScalar;
  CheckRecord r;
  r.name = "orthonormal";
  if (b.rows() != b.cols()) {
    r.passed = false;
    r.worst_deviation = static_cast<double>(std::abs(b.rows() - b.cols()));
    return r;
  }
  const ComplexMatrixT<Real> g = b.adjoint() * b - ComplexMatrixT<Real>::Identity(b.rows(), b.cols());
  Eigen::Index i = 0, j = 0;
  r.worst_deviation = g.rows() ? static_cast<double>(g.cwiseAbs().maxCoeff(&i, &j)) : 0.0;
  r.location = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
  r.checked = static_cast<std::uint64_t>(g.size());
  r.passed = r.worst_deviation <= tol;
  return r;
}

/// max over (i, j) of | |<phi_i|psi_j>| - 1/sqrt(d) |, location (i, j).
template <typename DerivedA, typename DerivedB>
CheckRecord unbiased_record(const Eigen::MatrixBase<DerivedA>& b1, const Eigen::MatrixBase<DerivedB>& b2, double tol) {
  using Real = typename DerivedA::RealScalar;
  CheckRecord r;
  r.name = "unbiased";
  if (b1.rows() != b2.rows() || b1.cols() != b2.cols()) {
    r.passed = false;
    r.worst_deviation = 1;
    return r;
  }
  const Real target = Real(1) / std::sqrt(static_cast<Real>(b1.rows()));
  const auto dev = ((b1.adjoint() * b2).cwiseAbs().array() - target).abs().matrix().eval();
  Eigen::Index i = 0, j = 0;
  r.worst_deviation = dev.size() ? static_cast<double>(dev.maxCoeff(&i, &j)) : 0.0;
  r.location = {static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
  r.checked = static_cast<std::uint64_t>(dev.size());
  r.passed = r.worst_deviation <= tol;
  return r;
}

template <typename Derived>
VerifyReport check_orthonormal(const Eigen::MatrixBase<Derived>& b, double tol) {
  VerifyReport report{true, tol, {}};
  report.add(orthonormal_record(b, tol));
  return report;
}

template <typename DerivedA, typename DerivedB>
VerifyReport check_unbiased_pair(const Eigen::MatrixBase<DerivedA>& b1, const Eigen::MatrixBase<DerivedB>& b2,
                                 double tol) {
  VerifyReport report{true, tol, {}};
  report.add(unbiased_record(b1, b2, tol));
  return report;
}

struct VerifyOptions {
  /// Dimensions above this are spot-checked instead of exhaustively.
  std::uint64_t exhaustive_limit = 64;
  std::uint64_t spot_samples = 20000;
  std::uint64_t seed = 1;
};

/// Structure (|bases| <= d + 1, shapes), orthonormality of every basis, and
/// unbiasedness of every pair. Records: "structure", "orthonormal" (location
/// basis, row, col) and "unbiased" (location basis_a, basis_b, i, j).
VerifyReport check_mub_set(const MubSet& set, double tol, const VerifyOptions& options = {});

/// For each basis j, U_{j,t} = sum_{k=1}^{d} exp(2 pi i t k / d) |psi_k><psi_k|, t = 0..d-1.
/// Throws std::invalid_argument unless the set passes check_mub_set at set.meta.tol.
std::vector<std::vector<CMatrix>> mub_to_classes(const MubSet& set);

/// <U_{j,s}, U_{k,t}> = d delta_jk delta_st over the identity (counted once)
/// plus all non-identity members, deviation measured relative to d. Also
/// checks commutation within classes and 1 + sum(|C_j| - 1) <= d^2.
/// Records: "structure", "identity", "commuting", "pairwise_orthogonal".
VerifyReport check_orthogonal_classes(const std::vector<std::vector<CMatrix>>& classes, double tol);

/// sum_{k=1}^{n} exp(2 pi i m k / n).
std::complex<double> root_of_unity_sum(std::int64_t m, std::int64_t n);

}  // namespace mubkit
