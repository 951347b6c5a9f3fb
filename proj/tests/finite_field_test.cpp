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

#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "reference_data.hpp"

namespace mubkit {
namespace {

TEST(FpArith, Examples) {
  EXPECT_EQ(fp_arith(FieldElement(1, 2), FieldElement(1, 2), ArithOp::kAdd).value(), 0u);
  EXPECT_EQ(fp_arith(FieldElement(2, 3), FieldElement(2, 3), ArithOp::kMul).value(), 1u);
  // Frozen from oracle::brute_inverse(2, 5) == 3.
  ASSERT_EQ(oracle::brute_inverse(2, 5), 3);
  EXPECT_EQ(fp_arith(FieldElement(1, 5), FieldElement(2, 5), ArithOp::kDiv).value(), 3u);
  EXPECT_EQ((FieldElement(1, 7) - FieldElement(3, 7)).value(), 5u);
  EXPECT_EQ(FieldElement(-1, 7).value(), 6u);
}

TEST(FpArith, Errors) {
  EXPECT_THROW(fp_arith(FieldElement(1, 3), FieldElement(1, 5), ArithOp::kAdd), std::invalid_argument);
  EXPECT_THROW(fp_arith(FieldElement(1, 5), FieldElement(0, 5), ArithOp::kDiv), std::domain_error);
  EXPECT_THROW(FieldElement(1, 4), std::invalid_argument);
  EXPECT_THROW(FieldElement(1, 1), std::invalid_argument);
  EXPECT_THROW(require_prime((std::uint64_t{1} << 20) + 7), std::invalid_argument);
  EXPECT_NO_THROW(require_prime(1048573));  // largest prime below 2^20
}

TEST(FpArith, InverseTimesSelfIsOne) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 13u, 101u, 1009u}) {
    for (std::uint32_t a = 1; a < p; ++a) {
      const FieldElement x(a, p);
      const FieldElement inv = fp_arith(FieldElement(1, p), x, ArithOp::kDiv);
      EXPECT_EQ(fp_arith(x, inv, ArithOp::kMul).value(), 1u) << "p=" << p << " a=" << a;
      EXPECT_EQ(static_cast<std::int64_t>(inv.value()), oracle::brute_inverse(a, p));
    }
  }
}

TEST(PrimeHelpers, FactorizationAndPrimePowers) {
  EXPECT_EQ(factorization_string(6), "2·3");
  EXPECT_EQ(factorization_string(9), "3^2");
  EXPECT_EQ(factorization_string(13), "13");
  EXPECT_EQ(factorization_string(72), "2^3·3^2");
  EXPECT_EQ(as_prime_power(27), (PrimePower{3, 3}));
  EXPECT_EQ(as_prime_power(16), (PrimePower{2, 4}));
  EXPECT_FALSE(as_prime_power(6));
  EXPECT_FALSE(as_prime_power(1));
  EXPECT_FALSE(as_prime_power(0));
}

TEST(FindIrreducible, Examples) {
  EXPECT_EQ(find_irreducible(2, 2), FpPoly(2, {1, 1, 1}));
  EXPECT_EQ(find_irreducible(3, 2), FpPoly(3, {1, 0, 1}));
  EXPECT_EQ(find_irreducible(2, 3), FpPoly(2, {1, 1, 0, 1}));
  EXPECT_EQ(find_irreducible(2, 2).to_string(), "x^2 + x + 1");
}

TEST(FindIrreducible, IsIrreducibleAndLexicographicallyFirst) {
  struct Case {
    std::uint32_t p;
    int degree;
  };
  for (const Case c : {Case{2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 8}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3},
                       {7, 2}, {7, 3}, {11, 2}, {13, 3}, {31, 2}, {97, 3}}) {
    const FpPoly f = find_irreducible(c.p, c.degree);
    ASSERT_EQ(f.degree(), c.degree);
    ASSERT_TRUE(f.is_monic());
    const oracle::Poly coeffs(f.coeffs().begin(), f.coeffs().end());
    EXPECT_TRUE(oracle::trial_division_irreducible(coeffs, c.p)) << f.to_string();
    if (c.degree <= 3) EXPECT_FALSE(oracle::has_root(coeffs, c.p));
    // Every candidate enumerated before f (a_0 fastest) must be reducible.
    std::vector<std::int64_t> cur(static_cast<std::size_t>(c.degree) + 1, 0);
    cur.back() = 1;
    for (int guard = 0; guard < 100000; ++guard) {
      if (FpPoly(c.p, cur) == f) break;
      EXPECT_FALSE(oracle::trial_division_irreducible(cur, c.p));
      int pos = 0;
      while (pos < c.degree && ++cur[static_cast<std::size_t>(pos)] == c.p) cur[static_cast<std::size_t>(pos++)] = 0;
      ASSERT_LT(pos, c.degree);
    }
  }
}

TEST(IsIrreducible, AgreesWithTrialDivisionExhaustively) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int n = 1; n <= (p == 5 ? 3 : 5); ++n) {
      std::int64_t count = 1;
      for (int i = 0; i < n; ++i) count *= p;
      for (std::int64_t idx = 0; idx < count; ++idx) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(n) + 1, 0);
        c.back() = 1;
        std::int64_t r = idx;
        for (int i = 0; i < n; ++i, r /= p) c[static_cast<std::size_t>(i)] = r % p;
        ASSERT_EQ(is_irreducible(FpPoly(p, c)), oracle::trial_division_irreducible(c, p))
            << FpPoly(p, c).to_string() << " over F_" << p;
      }
    }
  }
}

TEST(FpPolyArith, DivmodReconstructs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7}[trial % 4];
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    std::vector<std::int64_t> a(6), b(3);
    for (auto& x : a) x = coef(rng);
    for (auto& x : b) x = coef(rng);
    b.back() = 1 + coef(rng) % (p - 1);
    const FpPoly fa(p, a), fb(p, b);
    const auto [q, r] = divmod(fa, fb);
    EXPECT_EQ(q * fb + r, fa);
    EXPECT_LT(r.degree(), fb.degree());
  }
  EXPECT_THROW(divmod(FpPoly(3, {1, 1}), FpPoly::zero(3)), std::domain_error);
}

TEST(ExtMul, Examples) {
  const FpPoly f4(2, {1, 1, 1});
  const ExtFieldElement one = ExtFieldElement::one(f4);
  const ExtFieldElement g(f4, {0, 1});
  EXPECT_EQ(ext_mul(g, one), g);
  EXPECT_EQ(ext_mul(g, g), ExtFieldElement(f4, {1, 1}));  // g^2 = g + 1

  const FpPoly f9(3, {2, 1, 1});
  const ExtFieldElement h(f9, {0, 1});
  EXPECT_EQ(ext_mul(h, h), ExtFieldElement(f9, {1, 2}));  // h^2 = 2h + 1
  const oracle::Poly sq = oracle::mul_mod({0, 1}, {0, 1}, {2, 1, 1}, 3);
  EXPECT_EQ(sq, (oracle::Poly{1, 2}));
}

TEST(ExtMul, Errors) {
  EXPECT_THROW(ExtFieldElement(FpPoly(2, {1, 0, 1}), {0, 1}), std::invalid_argument);  // x^2+1 = (x+1)^2
  EXPECT_THROW(ExtFieldElement(FpPoly(2, {1, 1, 1}), {0, 1, 0}), std::invalid_argument);
  const ExtFieldElement a(FpPoly(2, {1, 1, 1}), {0, 1});
  const ExtFieldElement b(FpPoly(3, {1, 0, 1}), {0, 1});
  EXPECT_THROW(ext_mul(a, b), std::invalid_argument);
}

// Field axioms on random triples, cross-checked against schoolbook reduction.
TEST(ExtMul, RingPropertiesOnRandomTriples) {
  std::mt19937_64 rng(2024);
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {2, 3}, {3, 2}, {5, 2}, {3, 3}, {2, 5}, {7, 3}}) {
    const FpPoly f = find_irreducible(p, static_cast<int>(m));
    const oracle::Poly fo(f.coeffs().begin(), f.coeffs().end());
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    auto random_element = [&] {
      std::vector<std::int64_t> c(m);
      for (auto& x : c) x = coef(rng);
      return ExtFieldElement(f, c);
    };
    for (int trial = 0; trial < 50; ++trial) {
      const auto x = random_element(), y = random_element(), z = random_element();
      EXPECT_EQ(x * y, y * x);
      EXPECT_EQ((x * y) * z, x * (y * z));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      const oracle::Poly xo(x.coords().begin(), x.coords().end()), yo(y.coords().begin(), y.coords().end());
      const ExtFieldElement prod = x * y;
      const auto& xy = prod.coords();
      EXPECT_EQ(oracle::Poly(xy.begin(), xy.end()), oracle::mul_mod(xo, yo, fo, p));
    }
  }
}

TEST(ExtField, NonzeroElementsHaveInverses) {
  const FpPoly f = find_irreducible(3, 2);
  for (std::int64_t a = 0; a < 3; ++a) {
    for (std::int64_t b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      const ExtFieldElement x(f, {a, b});
      int hits = 0;
      for (std::int64_t c = 0; c < 3; ++c) {
        for (std::int64_t e = 0; e < 3; ++e) hits += (x * ExtFieldElement(f, {c, e})) == ExtFieldElement::one(f);
      }
      EXPECT_EQ(hits, 1);
    }
  }
}

TEST(StructureMatrices, Examples) {
  const auto b1 = wf_structure_matrices(2, 1, FpPoly(2, {1, 1}));
  ASSERT_EQ(b1.size(), 1u);
  EXPECT_EQ(b1[0], fixtures::fp({{1}}));

  const auto b2 = wf_structure_matrices(2, 2, FpPoly(2, {1, 1, 1}));
  ASSERT_EQ(b2.size(), 2u);
  EXPECT_EQ(b2[0], fixtures::fp({{1, 0}, {0, 1}}));
  EXPECT_EQ(b2[1], fixtures::fp({{0, 1}, {1, 1}}));
  // a B_1 + b B_2 = [[a, b], [b, a + b]]
  for (std::int64_t a = 0; a < 2; ++a) {
    for (std::int64_t b = 0; b < 2; ++b) {
      const FpMatrix s = (a * b2[0] + b * b2[1]).unaryExpr([](std::int64_t v) { return v % 2; });
      EXPECT_EQ(s, fixtures::fp({{a, b}, {b, (a + b) % 2}}));
    }
  }
}

TEST(StructureMatrices, EightDimensionalReferenceGeneratorsSpanTheListedFamily) {
  const auto listed = fixtures::d8_family();
  const FpMatrix i3 = listed[1], a3 = listed[2], a4 = listed[3];
  std::vector<FpMatrix> span;
  for (std::int64_t a1 = 0; a1 < 2; ++a1) {
    for (std::int64_t a2 = 0; a2 < 2; ++a2) {
      for (std::int64_t a3c = 0; a3c < 2; ++a3c) {
        span.push_back((a1 * i3 + a2 * a3 + a3c * a4).unaryExpr([](std::int64_t v) { return v % 2; }));
      }
    }
  }
  for (const auto& m : listed) EXPECT_NE(std::find(span.begin(), span.end(), m), span.end()) << m;
}

TEST(StructureMatrices, SymmetricAndNonsingularSpan) {
  for (const auto& [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{
           {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {7, 3}, {11, 2}, {97, 2}}) {
    const FpPoly f = find_irreducible(p, static_cast<int>(m));
    const auto b = wf_structure_matrices(p, m, f);
    ASSERT_EQ(b.size(), m);
    for (const auto& bl : b) EXPECT_TRUE(is_symmetric(bl));
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 1; idx < count; ++idx) {
      FpMatrix s = FpMatrix::Zero(m, m);
      std::uint64_t r = idx;
      for (std::uint32_t l = 0; l < m; ++l, r /= p) s += static_cast<std::int64_t>(r % p) * b[l];
      ASSERT_NE(oracle::leibniz_det(s, p), 0) << "p=" << p << " m=" << m << " idx=" << idx;
    }
  }
}

TEST(StructureMatrices, RejectsReducibleOrMismatched) {
  EXPECT_THROW(wf_structure_matrices(2, 2, FpPoly(2, {1, 0, 1})), std::invalid_argument);
  EXPECT_THROW(wf_structure_matrices(3, 2, FpPoly(2, {1, 1, 1})), std::invalid_argument);
  EXPECT_THROW(wf_structure_matrices(2, 3, FpPoly(2, {1, 1, 1})), std::invalid_argument);
}

TEST(DetModP, MatchesLeibniz) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint32_t p = std::vector<std::uint32_t>{2, 3, 5, 7, 31}[trial % 5];
    const int n = 1 + trial % 5;
    std::uniform_int_distribution<std::int64_t> coef(0, p - 1);
    FpMatrix a(n, n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a(i) = coef(rng);
    EXPECT_EQ(det_mod_p(a, p), oracle::leibniz_det(a, p));
  }
  EXPECT_EQ(det_mod_p(fixtures::fp({{0, 0}, {0, 0}}), 2), 0);
  EXPECT_THROW(det_mod_p(FpMatrix::Zero(2, 3), 2), std::invalid_argument);
}

}  // namespace
}  // namespace mubkit
