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

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mubkit/mub.hpp"
#include "mubkit/verify.hpp"

namespace mubkit {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "mub/1";

/// Malformed or inconsistent input file.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients lowest degree first: x^2 + x + 1 -> [1, 1, 1].
Json poly_to_json(const FpPoly& f);
FpPoly poly_from_json(std::uint32_t p, const Json& j);

/// {"alpha": [...], "beta": [...], "p": p}
Json symplectic_to_json(const SymplecticVector& v);
SymplecticVector symplectic_from_json(const Json& j);

/// Column-major list of [re, im] pairs.
Json basis_to_json(const Basis& b);
Basis basis_from_json(const Json& j, std::uint64_t dim);

Json mub_to_json(const MubSet& set);
/// Validates the "mub/1" schema; throws SchemaError on any violation.
MubSet mub_from_json(const Json& j);
/// Compact single-line encoding followed by a newline; byte-stable.
std::string serialize_mub(const MubSet& set);
MubSet parse_mub(const std::string& text);

Json report_to_json(const VerifyReport& report);
Json family_to_json(const SymmetricFamily& family);

}  // namespace mubkit
