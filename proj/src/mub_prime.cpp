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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mubkit/mub.hpp"

namespace mubkit {

std::string_view method_name(Method method) {
  switch (method) {
    case Method::kPrimeFormula: return "prime";
    case Method::kP2Quadratic: return "p2";
    case Method::kFieldTrace: return "wf";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  if (name == "prime") return Method::kPrimeFormula;
  if (name == "p2") return Method::kP2Quadratic;
  if (name == "wf") return Method::kFieldTrace;
  return std::nullopt;
}

static void require_index(std::uint64_t v, std::uint64_t d, const char* what) {
  if (v >= d) throw std::invalid_argument(std::string(what) + " must lie in [0, d)");
}

CVector prime_eigenvector(std::uint64_t d, std::uint64_t k, std::uint64_t t) {
  require_prime(d);
  require_index(k, d, "k");
  require_index(t, d, "t");
  checked_dimension(static_cast<std::uint32_t>(d), 1);
  const auto n = static_cast<std::int64_t>(d);
  const double norm = 1.0 / std::sqrt(static_cast<double>(d));
  CVector psi(n);
  for (std::int64_t j = 0; j < n; ++j) {
    const std::int64_t s_j = (n * (n - 1) - j * (j - 1)) / 2;
    const std::int64_t e = mod_reduce(static_cast<std::int64_t>(t) * (n - j) - static_cast<std::int64_t>(k) * (s_j % n), n);
    std::complex<double> c = root_of_unity(e, n);
    if (d == 2) c *= root_of_unity(static_cast<std::int64_t>(k) * j, 4);
    psi(j) = norm * c;
  }
  return psi;
}

std::complex<double> prime_eigenvalue(std::uint64_t d, std::uint64_t k, std::uint64_t t) {
  require_prime(d);
  require_index(k, d, "k");
  require_index(t, d, "t");
  std::complex<double> lambda = root_of_unity(static_cast<std::int64_t>(t), static_cast<std::int64_t>(d));
  if (d == 2) lambda *= root_of_unity(-static_cast<std::int64_t>(k), 4);
  return lambda;
}

MubSet prime_mub(std::uint64_t d, double tol) {
  require_prime(d);
  const auto n = static_cast<Eigen::Index>(checked_dimension(static_cast<std::uint32_t>(d), 1));
  MubSet set;
  set.dim = d;
  set.method = Method::kPrimeFormula;
  set.meta.p = static_cast<std::uint32_t>(d);
  set.meta.m = 1;
  set.meta.tol = tol;
  set.bases.reserve(d + 1);
  set.bases.push_back(Basis::Identity(n, n));
  for (std::uint64_t k = 0; k < d; ++k) {
    Basis b(n, n);
    for (std::uint64_t t = 0; t < d; ++t) b.col(static_cast<Eigen::Index>(t)) = prime_eigenvector(d, k, t);
    set.bases.push_back(std::move(b));
  }
  return set;
}

double shift_property_deviation(std::uint64_t d, std::uint64_t k, std::uint64_t l) {
  require_prime(d);
  require_index(l, d, "l");
  const auto n = static_cast<std::int64_t>(d);
  const CMatrix shift = weyl_matrix(static_cast<std::uint32_t>(d), 1, static_cast<std::int64_t>(l));
  double worst = 0;
  for (std::int64_t t = 0; t < n; ++t) {
    const CVector image = shift * prime_eigenvector(d, k, static_cast<std::uint64_t>(t));
    const std::int64_t s = mod_reduce(t + static_cast<std::int64_t>(k) - static_cast<std::int64_t>(l), n);
    const CVector target = prime_eigenvector(d, k, static_cast<std::uint64_t>(s));
    if (d == 2) {
      const std::complex<double> c = target.dot(image);
      worst = std::max({worst, (image - c * target).cwiseAbs().maxCoeff(), std::abs(std::abs(c) - 1.0)});
    } else {
      worst = std::max(worst, (image - root_of_unity(s, n) * target).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

bool shift_property_check(std::uint64_t d, std::uint64_t k, std::uint64_t l, double tol) {
  return shift_property_deviation(d, k, l) <= tol;
}

}  // namespace mubkit
