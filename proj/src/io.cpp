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

#include "mubkit/io.hpp"

#include <cmath>

namespace mubkit {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::uint64_t require_uint(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0)) {
    throw SchemaError(std::string("field \"") + key + "\" must be a non-negative integer");
  }
  return v.get<std::uint64_t>();
}

std::vector<std::int64_t> int_array(const Json& j, const char* what) {
  if (!j.is_array()) throw SchemaError(std::string(what) + " must be an array of integers");
  std::vector<std::int64_t> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw SchemaError(std::string(what) + " must be an array of integers");
    out.push_back(x.get<std::int64_t>());
  }
  return out;
}

}  // namespace

Json poly_to_json(const FpPoly& f) {
  Json out = Json::array();
  for (auto c : f.coeffs()) out.push_back(c);
  return out;
}

FpPoly poly_from_json(std::uint32_t p, const Json& j) {
  try {
    return FpPoly(p, int_array(j, "modulus_poly"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json symplectic_to_json(const SymplecticVector& v) {
  return Json{{"alpha", v.alpha}, {"beta", v.beta}, {"p", v.p}};
}

SymplecticVector symplectic_from_json(const Json& j) {
  const auto p = require_uint(j, "p");
  try {
    return SymplecticVector::make(static_cast<std::uint32_t>(p), int_array(require(j, "alpha"), "alpha"),
                                  int_array(require(j, "beta"), "beta"));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Json basis_to_json(const Basis& b) {
  Json out = Json::array();
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    for (Eigen::Index r = 0; r < b.rows(); ++r) out.push_back(Json::array({b(r, c).real(), b(r, c).imag()}));
  }
  return out;
}

Basis basis_from_json(const Json& j, std::uint64_t dim) {
  if (!j.is_array() || j.size() != dim * dim) {
    throw SchemaError("each basis must hold dim^2 = " + std::to_string(dim * dim) + " entries");
  }
  const auto d = static_cast<Eigen::Index>(dim);
  Basis b(d, d);
  std::size_t idx = 0;
  for (Eigen::Index c = 0; c < d; ++c) {
    for (Eigen::Index r = 0; r < d; ++r, ++idx) {
      const Json& e = j[idx];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw SchemaError("basis entries must be [re, im] number pairs");
      }
      const double re = e[0].get<double>(), im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) throw SchemaError("basis entries must be finite");
      b(r, c) = {re, im};
    }
  }
  return b;
}

Json mub_to_json(const MubSet& set) {
  Json out;
  out["schema_version"] = kSchemaVersion;
  out["dim"] = set.dim;
  out["p"] = set.meta.p;
  out["m"] = set.meta.m;
  out["method"] = std::string(method_name(set.method));
  if (set.meta.modulus_poly) out["modulus_poly"] = poly_to_json(*set.meta.modulus_poly);
  if (set.meta.seed) out["seed"] = *set.meta.seed;
  out["tol"] = set.meta.tol;
  Json bases = Json::array();
  for (const auto& b : set.bases) bases.push_back(basis_to_json(b));
  out["bases"] = std::move(bases);
  return out;
}

MubSet mub_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("top-level value must be an object");
  const Json& version = require(j, "schema_version");
  if (!version.is_string() || version.get<std::string>() != kSchemaVersion) {
    throw SchemaError("unsupported schema_version (expected \"mub/1\")");
  }
  MubSet set;
  set.dim = require_uint(j, "dim");
  set.meta.p = static_cast<std::uint32_t>(require_uint(j, "p"));
  set.meta.m = static_cast<std::uint32_t>(require_uint(j, "m"));
  if (!is_prime(set.meta.p) || set.meta.p > kMaxPrime) throw SchemaError("field \"p\" must be a supported prime");
  std::uint64_t pm = 1;
  for (std::uint32_t i = 0; i < set.meta.m && pm <= kMaxDim; ++i) pm *= set.meta.p;
  if (set.meta.m == 0 || pm != set.dim) throw SchemaError("dim must equal p^m");
  if (set.dim > kMaxDim) throw SchemaError("dim exceeds the dense storage bound 2^14");

  const Json& method = require(j, "method");
  if (!method.is_string()) throw SchemaError("method must be a string");
  const auto parsed = parse_method(method.get<std::string>());
  if (!parsed) throw SchemaError("unknown method \"" + method.get<std::string>() + "\"");
  set.method = *parsed;

  if (j.contains("modulus_poly")) set.meta.modulus_poly = poly_from_json(set.meta.p, j.at("modulus_poly"));
  if (j.contains("seed")) set.meta.seed = require_uint(j, "seed");
  const Json& tol = require(j, "tol");
  if (!tol.is_number() || !(tol.get<double>() > 0)) throw SchemaError("tol must be a positive number");
  set.meta.tol = tol.get<double>();

  const Json& bases = require(j, "bases");
  if (!bases.is_array()) throw SchemaError("bases must be an array");
  for (const auto& b : bases) set.bases.push_back(basis_from_json(b, set.dim));
  return set;
}

std::string serialize_mub(const MubSet& set) { return mub_to_json(set).dump() + "\n"; }

MubSet parse_mub(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("invalid JSON: ") + e.what());
  }
  return mub_from_json(j);
}

Json report_to_json(const VerifyReport& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    checks.push_back(Json{{"name", c.name},
                          {"passed", c.passed},
                          {"worst_deviation", c.worst_deviation},
                          {"location", c.location},
                          {"checked", c.checked},
                          {"coverage", c.coverage}});
  }
  return Json{{"passed", report.passed}, {"tolerance", report.tolerance}, {"checks", std::move(checks)}};
}

Json family_to_json(const SymmetricFamily& family) {
  Json matrices = Json::array();
  for (const auto& a : family.matrices) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < a.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  Json out{{"p", family.p}, {"m", family.m}, {"method", std::string(method_name(family.method))}};
  if (family.modulus_poly) out["modulus_poly"] = poly_to_json(*family.modulus_poly);
  out["matrices"] = std::move(matrices);
  return out;
}

}  // namespace mubkit
