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

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "mubkit/finite_field.hpp"
#include "mubkit/pauli.hpp"
#include "mubkit/spectral.hpp"

namespace mubkit {

enum class Method { kPrimeFormula, kP2Quadratic, kFieldTrace };

/// "prime", "p2", "wf".
std::string_view method_name(Method method);
std::optional<Method> parse_method(std::string_view name);

struct MubMeta {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::optional<FpPoly> modulus_poly;
  std::optional<std::uint64_t> seed;
  double tol = 1e-10;
};

/// Ordered list of orthonormal bases of C^dim, each stored column-wise.
struct MubSet {
  std::uint64_t dim = 0;
  std::vector<Basis> bases;
  Method method = Method::kPrimeFormula;
  MubMeta meta;
};

// ---------------------------------------------------------------------------
// Prime dimensions: eigenvectors of Z_d, X_d, X_d Z_d, ..., X_d Z_d^{d-1}.

/// |psi_t^k> with components omega^{t(d-j)} omega^{-k s_j} / sqrt(d),
/// s_j = j + ... + (d-1). For d = 2 component j additionally carries i^{kj},
/// since X_2 Z_2 has eigenvalues +-i rather than +-1.
CVector prime_eigenvector(std::uint64_t d, std::uint64_t k, std::uint64_t t);

/// Eigenvalue of X_d Z_d^k on prime_eigenvector(d, k, t): omega^t, times (-i)^k when d = 2.
std::complex<double> prime_eigenvalue(std::uint64_t d, std::uint64_t k, std::uint64_t t);

/// Basis 0 is the standard basis; basis k+1 holds prime_eigenvector(d, k, t) in column t.
MubSet prime_mub(std::uint64_t d, double tol = 1e-10);

/// Worst deviation of X_d Z_d^l |psi_t^k> from omega^{t+k-l} |psi_{t+k-l}^k> over t.
/// For d = 2 only the unit-modulus proportionality is measured (the phase differs).
double shift_property_deviation(std::uint64_t d, std::uint64_t k, std::uint64_t l);
bool shift_property_check(std::uint64_t d, std::uint64_t k, std::uint64_t l, double tol = 1e-10);

// ---------------------------------------------------------------------------
// Prime powers: symmetric families -> linear commuting classes -> eigenbases.

struct SymmetricFamily {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::vector<FpMatrix> matrices;
  Method method = Method::kFieldTrace;
  std::optional<FpPoly> modulus_poly;
};

/// {[[a, b], [b, s a + t b]] : a, b in F_p} for x^2 - t x - s irreducible,
/// ordered with a varying fastest. Defaults to find_irreducible(p, 2).
SymmetricFamily symmetric_family_p2(std::uint32_t p, std::optional<FpPoly> modulus_poly = std::nullopt);

/// All sum_l a_l B_l over (a_1, ..., a_m) in lexicographic order, B_l from
/// wf_structure_matrices. Throws std::logic_error if the result fails validate_family.
SymmetricFamily symmetric_family_wf(std::uint32_t p, std::uint32_t m, const FpPoly& modulus_poly);

/// Default modulus: find_irreducible(p, m) for m >= 2, x for m = 1.
FpPoly default_modulus(std::uint32_t p, std::uint32_t m);

struct FamilyReport {
  struct PairDeterminant {
    std::size_t j = 0;
    std::size_t k = 0;
    std::int64_t det = 0;
  };
  bool passed = false;
  std::vector<bool> symmetric;
  std::vector<PairDeterminant> determinants;
};

FamilyReport validate_family(const SymmetricFamily& family);

/// Z class first, then (1 | A_j) in family order.
std::vector<ClassSpec> class_specs(const SymmetricFamily& family);

/// Family a construction method uses for (p, m).
SymmetricFamily family_for(std::uint32_t p, std::uint32_t m, Method method, std::optional<FpPoly> modulus_poly);

/// p^m + 1 bases: basis 0 from the Z class, basis j from the class (1 | A_j).
/// kP2Quadratic needs m = 2 (m = 1 delegates to prime_mub). Each class uses an
/// independent seed derived from cfg.rng_seed, so output does not depend on `threads`.
MubSet primepower_mub(std::uint32_t p, std::uint32_t m, Method method, const SpectralConfig& cfg,
                      std::optional<FpPoly> modulus_poly = std::nullopt, unsigned threads = 1);

/// Joint eigenbasis of one linear class, exactly as primepower_mub computes it.
Basis class_eigenbasis(const ClassSpec& spec, std::uint32_t p, std::uint32_t m, const SpectralConfig& cfg);

}  // namespace mubkit
