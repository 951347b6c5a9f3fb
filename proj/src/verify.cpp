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

#include "mubkit/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace mubkit {

namespace {

// Track the worst deviation seen so far together with its location.
struct Worst {
  double value = 0;
  std::vector<std::size_t> where;
  void offer(double v, std::vector<std::size_t> loc) {
    if (where.empty() || v > value) {
      value = v;
      where = std::move(loc);
    }
  }
};

CheckRecord finish(std::string name, const Worst& w, double tol, std::uint64_t checked, double coverage) {
  CheckRecord r{std::move(name), w.value, w.where, w.value <= tol, checked, coverage};
  return r;
}

}  // namespace

VerifyReport check_mub_set(const MubSet& set, double tol, const VerifyOptions& options) {
  VerifyReport report{true, tol, {}};
  const std::uint64_t d = set.dim;
  const std::uint64_t n = set.bases.size();
  const auto di = static_cast<Eigen::Index>(d);

  std::uint64_t bad_shapes = 0;
  for (const auto& b : set.bases) {
    if (b.rows() != di || b.cols() != di) ++bad_shapes;
  }
  const std::uint64_t excess = n > d + 1 ? n - (d + 1) : 0;
  CheckRecord structure;
  structure.name = "structure";
  structure.worst_deviation = static_cast<double>(excess + bad_shapes + (n == 0 || d == 0 ? 1 : 0));
  structure.location = {static_cast<std::size_t>(n), static_cast<std::size_t>(d + 1)};
  structure.passed = structure.worst_deviation == 0;
  structure.checked = n;
  report.add(structure);
  if (bad_shapes > 0 || n == 0 || d == 0) return report;

  const bool exhaustive = d <= options.exhaustive_limit;
  const double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));

  if (exhaustive) {
    Worst ortho, unbiased;
    for (std::size_t a = 0; a < n; ++a) {
      const auto r = orthonormal_record(set.bases[a], tol);
      ortho.offer(r.worst_deviation, {a, r.location[0], r.location[1]});
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        const auto r = unbiased_record(set.bases[a], set.bases[b], tol);
        unbiased.offer(r.worst_deviation, {a, b, r.location[0], r.location[1]});
      }
    }
    report.add(finish("orthonormal", ortho, tol, n * d * d, 1.0));
    report.add(finish("unbiased", unbiased, tol, n * (n - 1) / 2 * d * d, 1.0));
    return report;
  }

  SplitMix64 rng(options.seed);
  auto pick = [&rng](std::uint64_t bound) { return static_cast<std::size_t>(rng.next() % bound); };
  {
    const std::uint64_t total = n * d * d;
    const std::uint64_t samples = std::min(total, options.spot_samples);
    Worst ortho;
    for (std::uint64_t s = 0; s < samples; ++s) {
      const std::size_t a = pick(n), i = pick(d), j = pick(d);
      const auto& b = set.bases[a];
      const std::complex<double> ip = b.col(static_cast<Eigen::Index>(i)).dot(b.col(static_cast<Eigen::Index>(j)));
      ortho.offer(std::abs(ip - (i == j ? 1.0 : 0.0)), {a, i, j});
    }
    report.add(finish("orthonormal", ortho, tol, samples, static_cast<double>(samples) / static_cast<double>(total)));
  }
  if (n >= 2) {
    const std::uint64_t total = n * (n - 1) / 2 * d * d;
    const std::uint64_t samples = std::min(total, options.spot_samples);
    Worst unbiased;
    for (std::uint64_t s = 0; s < samples; ++s) {
      std::size_t a = pick(n), b = pick(n - 1);
      if (b >= a) ++b;
      if (a > b) std::swap(a, b);
      const std::size_t i = pick(d), j = pick(d);
      const std::complex<double> ip =
          set.bases[a].col(static_cast<Eigen::Index>(i)).dot(set.bases[b].col(static_cast<Eigen::Index>(j)));
      unbiased.offer(std::abs(std::abs(ip) - inv_sqrt_d), {a, b, i, j});
    }
    report.add(finish("unbiased", unbiased, tol, samples, static_cast<double>(samples) / static_cast<double>(total)));
  }
  return report;
}

std::vector<std::vector<CMatrix>> mub_to_classes(const MubSet& set) {
  const VerifyReport report = check_mub_set(set, set.meta.tol);
  if (!report.passed) throw std::invalid_argument("mub_to_classes: input does not pass check_mub_set");
  const auto d = static_cast<std::int64_t>(set.dim);
  std::vector<std::vector<CMatrix>> classes;
  classes.reserve(set.bases.size());
  for (const auto& b : set.bases) {
    std::vector<CMatrix> cls;
    cls.reserve(static_cast<std::size_t>(d));
    for (std::int64_t t = 0; t < d; ++t) {
      CVector phases(d);
      for (std::int64_t k = 1; k <= d; ++k) phases(k - 1) = root_of_unity(t * k, d);
      cls.push_back(b * phases.asDiagonal() * b.adjoint());
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

VerifyReport check_orthogonal_classes(const std::vector<std::vector<CMatrix>>& classes, double tol) {
  VerifyReport report{true, tol, {}};
  CheckRecord structure;
  structure.name = "structure";
  if (classes.empty() || classes.front().empty()) {
    structure.passed = false;
    structure.worst_deviation = 1;
    report.add(structure);
    return report;
  }
  const Eigen::Index d = classes.front().front().rows();
  std::uint64_t bad_shapes = 0;
  std::uint64_t count = 1;
  for (const auto& cls : classes) {
    if (cls.empty()) ++bad_shapes;
    count += cls.empty() ? 0 : cls.size() - 1;
    for (const auto& u : cls) {
      if (u.rows() != d || u.cols() != d) ++bad_shapes;
    }
  }
  const auto d2 = static_cast<std::uint64_t>(d * d);
  structure.worst_deviation = static_cast<double>(bad_shapes + (count > d2 ? count - d2 : 0));
  structure.location = {static_cast<std::size_t>(count), static_cast<std::size_t>(d2)};
  structure.passed = structure.worst_deviation == 0;
  structure.checked = count;
  report.add(structure);
  if (bad_shapes > 0) return report;

  const CMatrix identity = CMatrix::Identity(d, d);
  Worst id_dev, comm;
  std::uint64_t pairs = 0;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    const auto& cls = classes[j];
    id_dev.offer((cls[0] - identity).cwiseAbs().maxCoeff(), {j});
    for (std::size_t s = 0; s < cls.size(); ++s) {
      for (std::size_t t = s + 1; t < cls.size(); ++t, ++pairs) {
        comm.offer((cls[s] * cls[t] - cls[t] * cls[s]).cwiseAbs().maxCoeff(), {j, s, t});
      }
    }
  }
  report.add(finish("identity", id_dev, tol, classes.size(), 1.0));
  report.add(finish("commuting", comm, tol, pairs, 1.0));

  // Identity once, then every non-identity member; columns are vec(U).
  std::vector<std::pair<std::size_t, std::size_t>> label{{0, 0}};
  CMatrix stacked(d * d, static_cast<Eigen::Index>(count));
  stacked.col(0) = identity.reshaped();
  Eigen::Index col = 1;
  for (std::size_t j = 0; j < classes.size(); ++j) {
    for (std::size_t t = 1; t < classes[j].size(); ++t) {
      stacked.col(col++) = classes[j][t].reshaped();
      label.emplace_back(j, t);
    }
  }
  const CMatrix gram = stacked.adjoint() * stacked;
  const CMatrix dev = (gram - static_cast<double>(d) * CMatrix::Identity(gram.rows(), gram.cols())) / static_cast<double>(d);
  Eigen::Index a = 0, b = 0;
  const double worst = dev.cwiseAbs().maxCoeff(&a, &b);
  CheckRecord ortho{"pairwise_orthogonal", worst,
                    {label[static_cast<std::size_t>(a)].first, label[static_cast<std::size_t>(a)].second,
                     label[static_cast<std::size_t>(b)].first, label[static_cast<std::size_t>(b)].second},
                    worst <= tol, count, 1.0};
  report.add(ortho);
  return report;
}

std::complex<double> root_of_unity_sum(std::int64_t m, std::int64_t n) {
  if (n <= 0) throw std::invalid_argument("root_of_unity_sum needs n > 0");
  std::complex<double> sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) sum += std::polar(1.0, 2 * std::numbers::pi * static_cast<double>(m * k) / static_cast<double>(n));
  return sum;
}

}  // namespace mubkit
