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

#include "mubkit/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "mubkit/io.hpp"
#include "mubkit/parallel.hpp"

namespace mubkit {

namespace {

// Thrown inside subcommand handlers to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Exit{kExitBadInput, "cannot read " + path};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MubSet load_mub(const std::string& path) {
  try {
    return parse_mub(read_file(path));
  } catch (const SchemaError& e) {
    throw Exit{kExitBadInput, path + ": " + e.what()};
  }
}

std::vector<std::int64_t> parse_poly_list(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Exit{kExitBadInput, "--poly expects comma-separated integers, got \"" + text + "\""};
    }
  }
  if (out.empty()) throw Exit{kExitBadInput, "--poly is empty"};
  return out;
}

std::string join_digits(const std::vector<std::uint32_t>& digits, std::uint32_t p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < digits.size(); ++i) os << (i && p > 10 ? " " : "") << digits[i];
  return os.str();
}

struct GenerateArgs {
  std::optional<std::uint64_t> dim;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> m;
  std::string method = "auto";
  std::optional<std::string> poly;
  std::optional<std::uint64_t> seed;
  double tol = 1e-10;
  std::optional<std::string> out;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  std::uint32_t p = 0, m = 0;
  if (a.dim) {
    const auto pp = as_prime_power(*a.dim);
    if (!pp) throw Exit{kExitBadInput, std::to_string(*a.dim) + " = " + factorization_string(*a.dim) + " is not a prime power"};
    p = pp->p;
    m = pp->m;
    if ((a.p && *a.p != p) || (a.m && *a.m != m)) throw Exit{kExitBadInput, "--dim disagrees with --p/--m"};
  } else {
    if (!a.p || !a.m) throw Exit{kExitBadInput, "give --dim or both --p and --m"};
    p = *a.p;
    m = *a.m;
    if (!is_prime(p) || p > kMaxPrime) throw Exit{kExitBadInput, "--p " + std::to_string(p) + " is not a supported prime"};
    if (m == 0) throw Exit{kExitBadInput, "--m must be positive"};
  }
  try {
    checked_dimension(p, m);
  } catch (const std::invalid_argument& e) {
    throw Exit{kExitBadInput, e.what()};
  }
  if (!(a.tol > 0)) throw Exit{kExitBadInput, "--tol must be positive"};

  Method method;
  if (a.method == "auto") {
    method = m == 1 ? Method::kPrimeFormula : (m == 2 ? Method::kP2Quadratic : Method::kFieldTrace);
  } else {
    method = *parse_method(a.method);
  }
  if (method == Method::kPrimeFormula && m != 1) throw Exit{kExitBadInput, "method prime needs a prime dimension"};
  if (method == Method::kP2Quadratic && m > 2) throw Exit{kExitBadInput, "method p2 needs m <= 2"};

  std::optional<FpPoly> poly;
  if (a.poly) {
    if (method == Method::kPrimeFormula || m == 1) throw Exit{kExitBadInput, "--poly does not apply to prime dimensions"};
    FpPoly f(p, parse_poly_list(*a.poly));
    if (f.degree() != static_cast<int>(m) || !is_irreducible(f)) {
      throw Exit{kExitBadInput, "--poly " + f.to_string() + " is not an irreducible polynomial of degree " +
                                    std::to_string(m) + " over F_" + std::to_string(p)};
    }
    poly = f;
  }

  SpectralConfig cfg;
  cfg.tol = a.tol;
  if (a.seed) cfg.rng_seed = *a.seed;

  MubSet set;
  try {
    set = primepower_mub(p, m, method, cfg, poly, thread_budget());
  } catch (const SpectralError& e) {
    throw Exit{kExitConstructionFailed, std::string("construction failed: ") + e.what()};
  }
  const VerifyReport report = check_mub_set(set, set.meta.tol);
  if (!report.passed) {
    throw Exit{kExitConstructionFailed, "construction failed self-verification (seed " + std::to_string(cfg.rng_seed) + ")"};
  }

  const std::string text = serialize_mub(set);
  if (a.out) {
    std::ofstream file(*a.out, std::ios::binary);
    if (!file) throw Exit{kExitBadInput, "cannot write " + *a.out};
    file << text;
  } else {
    out << text;
  }
  return kExitOk;
}

int cmd_verify(const std::string& in, std::optional<double> tol_flag, bool classes, std::ostream& out) {
  MubSet set = load_mub(in);
  const double tol = tol_flag.value_or(set.meta.tol);
  if (!(tol > 0)) throw Exit{kExitBadInput, "--tol must be positive"};
  set.meta.tol = tol;
  const VerifyReport report = check_mub_set(set, tol);
  Json j = report_to_json(report);
  bool passed = report.passed;
  if (classes && report.passed) {
    const VerifyReport class_report = check_orthogonal_classes(mub_to_classes(set), tol);
    j["classes"] = report_to_json(class_report);
    passed = passed && class_report.passed;
    j["passed"] = passed;
  }
  out << j.dump(2) << "\n";
  return passed ? kExitOk : kExitVerifyFailed;
}

int cmd_export(const std::string& in, const std::string& format, const std::string& what, std::ostream& out) {
  const MubSet set = load_mub(in);
  const bool csv = format == "csv";
  if (what == "bases") {
    if (csv) {
      out << "basis,vector";
      for (std::uint64_t r = 0; r < set.dim; ++r) out << ",re" << r << ",im" << r;
      out << "\n";
      std::ostringstream num;
      num.precision(17);
      for (std::size_t b = 0; b < set.bases.size(); ++b) {
        for (Eigen::Index c = 0; c < set.bases[b].cols(); ++c) {
          out << b << ',' << c;
          for (Eigen::Index r = 0; r < set.bases[b].rows(); ++r) {
            num.str("");
            num << ',' << set.bases[b](r, c).real() + 0.0 << ',' << set.bases[b](r, c).imag() + 0.0;
            out << num.str();
          }
          out << "\n";
        }
      }
    } else {
      Json bases = Json::array();
      for (const auto& b : set.bases) bases.push_back(basis_to_json(b));
      out << Json{{"dim", set.dim}, {"bases", std::move(bases)}}.dump() << "\n";
    }
    return kExitOk;
  }

  SymmetricFamily family;
  try {
    family = family_for(set.meta.p, set.meta.m, set.method, set.meta.modulus_poly);
  } catch (const std::exception& e) {
    throw Exit{kExitBadInput, std::string("cannot rebuild the family: ") + e.what()};
  }
  if (what == "family") {
    if (csv) {
      out << "index,entries\n";
      for (std::size_t i = 0; i < family.matrices.size(); ++i) {
        const FpMatrix& a = family.matrices[i];
        std::vector<std::uint32_t> digits;
        for (Eigen::Index r = 0; r < a.rows(); ++r) {
          for (Eigen::Index c = 0; c < a.cols(); ++c) digits.push_back(static_cast<std::uint32_t>(a(r, c)));
        }
        out << i << ',' << join_digits(digits, family.p) << "\n";
      }
    } else {
      out << family_to_json(family).dump() << "\n";
    }
    return kExitOk;
  }

  // classes
  const auto specs = class_specs(family);
  if (csv) out << "class_index,x_vector,alpha|beta\n";
  Json classes = Json::array();
  for (std::size_t j = 0; j < specs.size(); ++j) {
    const auto members = enumerate_class(specs[j], set.meta.p, set.meta.m);
    Json jm = Json::array();
    for (const auto& v : members) {
      if (csv) {
        const auto& x = specs[j].kind == ClassKind::kZ ? v.beta : v.alpha;
        out << j << ',' << join_digits(x, v.p) << ',' << v.to_string() << "\n";
      } else {
        jm.push_back(symplectic_to_json(v));
      }
    }
    if (!csv) {
      Json gen = "Z";
      if (specs[j].kind == ClassKind::kX) gen = family_to_json(SymmetricFamily{family.p, family.m, {specs[j].a}, family.method, std::nullopt})["matrices"][0];
      classes.push_back(Json{{"class_index", j}, {"generator", std::move(gen)}, {"members", std::move(jm)}});
    }
  }
  if (!csv) out << Json{{"p", set.meta.p}, {"m", set.meta.m}, {"classes", std::move(classes)}}.dump() << "\n";
  return kExitOk;
}

}  // namespace

std::string dimension_info(std::uint64_t dim) {
  std::ostringstream os;
  os << dim << " = " << factorization_string(dim) << "; ";
  const auto pp = as_prime_power(dim);
  const std::uint64_t bound = dim + 1;
  if (!pp) {
    os << "not a prime power; construction unsupported; bound " << bound;
    return os.str();
  }
  os << (pp->m == 1 ? "prime" : "prime power") << "; ";
  if (dim > kMaxDim) {
    os << "exceeds dense storage bound " << kMaxDim << "; bound " << bound;
    return os.str();
  }
  os << bound << " MUBs constructible; bound " << bound << "; method ";
  if (pp->m == 1) {
    os << "prime";
  } else {
    const FpPoly f = default_modulus(pp->p, pp->m);
    os << (pp->m == 2 ? "p2" : "wf") << "; default polynomial " << f.to_string() << ' ' << poly_to_json(f).dump();
  }
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Construct and verify complete sets of mutually unbiased bases in prime-power dimensions", "mubkit"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Construct d+1 mutually unbiased bases");
  generate->add_option("--dim", gen.dim, "Dimension d = p^m");
  generate->add_option("--p", gen.p, "Characteristic p");
  generate->add_option("--m", gen.m, "Exponent m");
  generate->add_option("--method", gen.method, "Construction method")
      ->check(CLI::IsMember({"auto", "prime", "p2", "wf"}));
  generate->add_option("--poly", gen.poly, "Modulus polynomial coefficients, lowest degree first (e.g. 2,1,1)");
  generate->add_option("--seed", gen.seed, "Seed for the joint diagonalization");
  generate->add_option("--tol", gen.tol, "Verification tolerance");
  generate->add_option("--out", gen.out, "Output path (default stdout)");

  std::string verify_in;
  std::optional<double> verify_tol;
  bool verify_classes = false;
  auto* verify = app.add_subcommand("verify", "Certify a mub/1 file");
  verify->add_option("--in", verify_in, "Input file")->required();
  verify->add_option("--tol", verify_tol, "Tolerance (default: the file's)");
  verify->add_flag("--classes", verify_classes, "Also check the induced operator classes");

  std::string export_in, export_format = "json", export_what = "bases";
  auto* exporter = app.add_subcommand("export", "Export bases, operator classes or the symmetric family");
  exporter->add_option("--in", export_in, "Input file")->required();
  exporter->add_option("--format", export_format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  exporter->add_option("--what", export_what, "bases, classes or family")
      ->check(CLI::IsMember({"bases", "classes", "family"}));

  std::uint64_t info_dim = 0;
  auto* info = app.add_subcommand("info", "Describe a dimension");
  info->add_option("--dim", info_dim, "Dimension")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "mubkit: " << e.what() << "\n";
    return kExitBadInput;
  }

  try {
    if (generate->parsed()) return cmd_generate(gen, out);
    if (verify->parsed()) return cmd_verify(verify_in, verify_tol, verify_classes, out);
    if (exporter->parsed()) return cmd_export(export_in, export_format, export_what, out);
    if (info->parsed()) {
      out << dimension_info(info_dim) << "\n";
      return kExitOk;
    }
  } catch (const Exit& e) {
    err << "mubkit: " << e.message << "\n";
    return e.code;
  } catch (const std::invalid_argument& e) {
    err << "mubkit: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace mubkit
