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

#include "mubkit/pauli.hpp"

#include <algorithm>
#include <sstream>

namespace mubkit {

std::uint64_t checked_dimension(std::uint32_t p, std::uint32_t m) {
  std::uint64_t d = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    d *= p;
    if (d > kMaxDim) {
      throw std::invalid_argument("dimension " + std::to_string(p) + "^" + std::to_string(m) +
                                  " exceeds the dense storage bound 2^14");
    }
  }
  return d;
}

SymplecticVector SymplecticVector::make(std::uint32_t p, std::vector<std::int64_t> alpha,
                                        std::vector<std::int64_t> beta) {
  require_prime(p);
  if (alpha.size() != beta.size()) throw std::invalid_argument("symplectic halves differ in length");
  SymplecticVector v;
  v.p = p;
  for (auto a : alpha) v.alpha.push_back(static_cast<std::uint32_t>(mod_reduce(a, p)));
  for (auto b : beta) v.beta.push_back(static_cast<std::uint32_t>(mod_reduce(b, p)));
  return v;
}

SymplecticVector SymplecticVector::identity(std::uint32_t p, std::uint32_t m) {
  return SymplecticVector{p, std::vector<std::uint32_t>(m, 0), std::vector<std::uint32_t>(m, 0)};
}

bool SymplecticVector::is_identity() const {
  auto zero = [](auto x) { return x == 0; };
  return std::all_of(alpha.begin(), alpha.end(), zero) && std::all_of(beta.begin(), beta.end(), zero);
}

std::string SymplecticVector::to_string() const {
  std::ostringstream os;
  const char* sep = p <= 10 ? "" : " ";
  for (std::size_t i = 0; i < alpha.size(); ++i) os << (i ? sep : "") << alpha[i];
  os << '|';
  for (std::size_t i = 0; i < beta.size(); ++i) os << (i ? sep : "") << beta[i];
  return os.str();
}

std::uint32_t symplectic_form(const SymplecticVector& u, const SymplecticVector& v) {
  if (u.p != v.p || u.m() != v.m() || u.beta.size() != u.alpha.size() || v.beta.size() != v.alpha.size()) {
    throw std::invalid_argument("symplectic vectors of different shape");
  }
  std::int64_t s = 0;
  for (std::uint32_t i = 0; i < u.m(); ++i) {
    s += std::int64_t{u.alpha[i]} * v.beta[i] - std::int64_t{v.alpha[i]} * u.beta[i];
  }
  return static_cast<std::uint32_t>(mod_reduce(s, u.p));
}

bool commutes(const SymplecticVector& u, const SymplecticVector& v) { return symplectic_form(u, v) == 0; }

std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint32_t p, std::uint32_t m) {
  std::vector<std::uint32_t> out(m);
  for (std::uint32_t i = m; i-- > 0;) {
    out[i] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  return out;
}

std::uint64_t index_of(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::uint64_t idx = 0;
  for (auto x : digits) idx = idx * p + x;
  return idx;
}

std::vector<SymplecticVector> enumerate_class(const ClassSpec& spec, std::uint32_t p, std::uint32_t m) {
  require_prime(p);
  const std::uint64_t d = checked_dimension(p, m);
  const auto mm = static_cast<Eigen::Index>(m);
  if (spec.kind == ClassKind::kX) {
    if (spec.a.rows() != mm || spec.a.cols() != mm) throw std::invalid_argument("class matrix must be m x m");
    const FpMatrix a = spec.a.unaryExpr([p](std::int64_t v) { return mod_reduce(v, p); });
    if (!is_symmetric(a)) throw std::invalid_argument("class matrix A must be symmetric for the class to commute");
  }
  std::vector<SymplecticVector> out;
  out.reserve(d);
  for (std::uint64_t i = 0; i < d; ++i) {
    auto x = digits_of(i, p, m);
    SymplecticVector v{p, std::vector<std::uint32_t>(m, 0), std::vector<std::uint32_t>(m, 0)};
    if (spec.kind == ClassKind::kZ) {
      v.beta = std::move(x);
    } else {
      for (Eigen::Index j = 0; j < mm; ++j) {
        std::int64_t s = 0;
        for (Eigen::Index k = 0; k < mm; ++k) s += std::int64_t{x[static_cast<std::size_t>(k)]} * spec.a(k, j);
        v.beta[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(mod_reduce(s, p));
      }
      v.alpha = std::move(x);
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<SymplecticVector> all_p0_vectors(std::uint32_t p, std::uint32_t m) {
  require_prime(p);
  const std::uint64_t d = checked_dimension(p, m);
  std::vector<SymplecticVector> out;
  out.reserve(d * d);
  for (std::uint64_t i = 0; i < d; ++i) {
    for (std::uint64_t j = 0; j < d; ++j) out.push_back({p, digits_of(i, p, m), digits_of(j, p, m)});
  }
  return out;
}

}  // namespace mubkit
