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

#include <cmath>
#include <stdexcept>
#include <string>

#include "mubkit/mub.hpp"
#include "mubkit/parallel.hpp"

namespace mubkit {

SymmetricFamily symmetric_family_p2(std::uint32_t p, std::optional<FpPoly> modulus_poly) {
  require_prime(p);
  FpPoly f = modulus_poly ? *modulus_poly : find_irreducible(p, 2);
  if (f.modulus() != p || f.degree() != 2 || !is_irreducible(f)) {
    throw std::invalid_argument("p2 construction needs an irreducible quadratic over F_" + std::to_string(p) +
                                ", got " + f.to_string());
  }
  f = f.monic();
  // x^2 + c1 x + c0 = x^2 - t x - s
  const std::int64_t t = mod_reduce(-static_cast<std::int64_t>(f.coeff(1)), p);
  const std::int64_t s = mod_reduce(-static_cast<std::int64_t>(f.coeff(0)), p);
  SymmetricFamily family{p, 2, {}, Method::kP2Quadratic, f};
  family.matrices.reserve(std::size_t{p} * p);
  for (std::int64_t b = 0; b < p; ++b) {
    for (std::int64_t a = 0; a < p; ++a) {
      FpMatrix m(2, 2);
      m << a, b, b, (s * a + t * b) % p;
      family.matrices.push_back(std::move(m));
    }
  }
  return family;
}

FpPoly default_modulus(std::uint32_t p, std::uint32_t m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  return m == 1 ? FpPoly(p, {0, 1}) : find_irreducible(p, static_cast<int>(m));
}

SymmetricFamily symmetric_family_wf(std::uint32_t p, std::uint32_t m, const FpPoly& modulus_poly) {
  const auto generators = wf_structure_matrices(p, m, modulus_poly);
  const std::uint64_t count = checked_dimension(p, m);
  const auto n = static_cast<Eigen::Index>(m);
  SymmetricFamily family{p, m, {}, Method::kFieldTrace, modulus_poly};
  family.matrices.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    const auto coeffs = digits_of(i, p, m);
    FpMatrix sum = FpMatrix::Zero(n, n);
    for (std::uint32_t l = 0; l < m; ++l) sum += std::int64_t{coeffs[l]} * generators[l];
    sum = sum.unaryExpr([p](std::int64_t v) { return mod_reduce(v, p); });
    // The family is an F_p-linear space, so nonsingular differences reduce to
    // nonsingular nonzero members.
    if (!is_symmetric(sum) || (i > 0 && det_mod_p(sum, p) == 0)) {
      throw std::logic_error("structure-matrix family violates the MUB condition at member " + std::to_string(i));
    }
    family.matrices.push_back(std::move(sum));
  }
  return family;
}

FamilyReport validate_family(const SymmetricFamily& family) {
  FamilyReport report;
  report.passed = true;
  for (const auto& a : family.matrices) {
    const bool sym = is_symmetric(a);
    report.symmetric.push_back(sym);
    report.passed = report.passed && sym;
  }
  for (std::size_t j = 0; j < family.matrices.size(); ++j) {
    for (std::size_t k = j + 1; k < family.matrices.size(); ++k) {
      const auto& a = family.matrices[j];
      const auto& b = family.matrices[k];
      std::int64_t det = 0;
      if (a.rows() == b.rows() && a.cols() == b.cols()) det = det_mod_p(a - b, family.p);
      report.determinants.push_back({j, k, det});
      report.passed = report.passed && det != 0;
    }
  }
  return report;
}

std::vector<ClassSpec> class_specs(const SymmetricFamily& family) {
  std::vector<ClassSpec> specs{ClassSpec::z_class()};
  for (const auto& a : family.matrices) specs.push_back(ClassSpec::x_class(a));
  return specs;
}

SymmetricFamily family_for(std::uint32_t p, std::uint32_t m, Method method, std::optional<FpPoly> modulus_poly) {
  switch (method) {
    case Method::kP2Quadratic:
      if (m != 2) throw std::invalid_argument("p2 construction requires m = 2");
      return symmetric_family_p2(p, std::move(modulus_poly));
    case Method::kFieldTrace:
      return symmetric_family_wf(p, m, modulus_poly ? *modulus_poly : default_modulus(p, m));
    case Method::kPrimeFormula: {
      if (m != 1) throw std::invalid_argument("prime construction requires m = 1");
      // X Z^k realizes the class (1 | [k]).
      require_prime(p);
      SymmetricFamily family{p, 1, {}, Method::kPrimeFormula, std::nullopt};
      for (std::int64_t k = 0; k < p; ++k) family.matrices.push_back(FpMatrix::Constant(1, 1, k));
      return family;
    }
  }
  throw std::invalid_argument("unknown method");
}

Basis class_eigenbasis(const ClassSpec& spec, std::uint32_t p, std::uint32_t m, const SpectralConfig& cfg) {
  const auto members = enumerate_class(spec, p, m);
  std::vector<CMatrix> ops;
  ops.reserve(members.size());
  for (const auto& v : members) ops.push_back(to_matrix(v));
  if (spec.kind == ClassKind::kZ) {
    // Already diagonal: the standard basis, in the same canonical order
    // joint_eigenbasis would produce.
    const auto d = static_cast<Eigen::Index>(members.size());
    JointEigendecomposition<double> jd{Basis::Identity(d, d), {}};
    jd.eigenvalues = eigenvalue_table<double>(ops, jd.basis);
    canonicalize_eigenbasis(jd, std::sqrt(cfg.tol));
    return jd.basis;
  }
  return joint_eigenbasis(ops, cfg);
}

MubSet primepower_mub(std::uint32_t p, std::uint32_t m, Method method, const SpectralConfig& cfg,
                      std::optional<FpPoly> modulus_poly, unsigned threads) {
  require_prime(p);
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  if (method == Method::kPrimeFormula || (method == Method::kP2Quadratic && m == 1)) {
    if (m != 1) throw std::invalid_argument("prime construction requires m = 1");
    return prime_mub(p, cfg.tol);
  }
  const std::uint64_t d = checked_dimension(p, m);
  const SymmetricFamily family = family_for(p, m, method, std::move(modulus_poly));
  const auto specs = class_specs(family);

  MubSet set;
  set.dim = d;
  set.method = method;
  set.meta = MubMeta{p, m, family.modulus_poly, cfg.rng_seed, cfg.tol};
  set.bases.resize(specs.size());
  parallel_for(specs.size(), threads, [&](std::size_t j) {
    SpectralConfig class_cfg = cfg;
    class_cfg.rng_seed = derive_seed(cfg.rng_seed, j);
    try {
      set.bases[j] = class_eigenbasis(specs[j], p, m, class_cfg);
    } catch (const SpectralError& e) {
      throw SpectralError("class " + std::to_string(j) + " (derived seed " + std::to_string(e.seed()) + "): " + e.message(),
                          cfg.rng_seed);
    }
  });
  return set;
}

}  // namespace mubkit
