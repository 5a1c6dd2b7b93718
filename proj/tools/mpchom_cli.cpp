// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end. Links against the mpchom shared library through
// its C API only; everything here is argument plumbing and presentation.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mpchom.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitBoundViolation = 2;

struct StringDeleter {
  void operator()(char* p) const { mpchom_string_free(p); }
};
using CString = std::unique_ptr<char, StringDeleter>;

struct RingDeleter {
  void operator()(mpchom_ring* p) const { mpchom_ring_free(p); }
};
struct MatrixDeleter {
  void operator()(mpchom_matrix* p) const { mpchom_matrix_free(p); }
};
struct CodesDeleter {
  void operator()(mpchom_codes* p) const { mpchom_codes_free(p); }
};

int report_error(int status) {
  std::cerr << "error: " << mpchom_status_name(status) << ": "
            << mpchom_last_error() << "\n";
  return kExitError;
}

int write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) {
    std::cerr << "error: cannot open output file '" << out_path << "'\n";
    return kExitError;
  }
  file << text;
  return kExitOk;
}

std::string read_file(const std::string& path, bool& ok) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    ok = false;
    return {};
  }
  std::ostringstream os;
  os << file.rdbuf();
  ok = true;
  return os.str();
}

std::unique_ptr<mpchom_ring, RingDeleter> parse_ring_or_die(
    const std::string& text, int& status) {
  mpchom_ring* ring = nullptr;
  status = mpchom_ring_parse(text.c_str(), &ring);
  return std::unique_ptr<mpchom_ring, RingDeleter>(ring);
}

std::string weights_csv(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  std::ostringstream os;
  os << "element,w_h,decimal\n";
  for (const auto& row : doc.at("weights")) {
    os << row.at("element").dump() << ',' << row.at("w_h").get<std::string>()
       << ',' << row.at("decimal").get<double>() << '\n';
  }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homogeneous weights and matrix product codes over finite "
               "principal ideal rings"};
  app.require_subcommand(1);

  std::string ring_text, matrix_json, codes_path, config_path, out_path;
  std::string format = "json";
  int rows = 0, cols = 0;
  std::uint64_t seed = 0, trials = 0;
  bool seed_set = false, trials_set = false;

  auto* weights = app.add_subcommand("weights", "homogeneous weight table");
  weights->add_option("ring,--ring", ring_text, "ring spec, e.g. Z6")
      ->required();
  weights->add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  weights->add_option("--out", out_path, "write the report to a file");

  auto* nsc = app.add_subcommand("nsc", "non-singular-by-columns check");
  nsc->add_option("ring,--ring", ring_text)->required();
  nsc->add_option("matrix,--matrix", matrix_json, "matrix as JSON")
      ->required();
  nsc->add_option("--out", out_path);

  auto* build = app.add_subcommand("build-nsc", "deterministic NSC matrix");
  build->add_option("ring,--ring", ring_text)->required();
  build->add_option("m", rows, "rows")->required();
  build->add_option("l", cols, "columns")->required();
  build->add_option("--out", out_path);

  auto* verify = app.add_subcommand(
      "verify", "distance-bound verification of [C_1,...,C_m]A");
  verify->add_option("ring,--ring", ring_text)->required();
  verify->add_option("matrix,--matrix", matrix_json)->required();
  verify->add_option("codes,--codes", codes_path, "codes JSON file")
      ->required();
  verify->add_option("--out", out_path);

  auto* dual = app.add_subcommand(
      "dual-verify", "dual-code verification for square NSC matrices");
  dual->add_option("ring,--ring", ring_text)->required();
  dual->add_option("matrix,--matrix", matrix_json)->required();
  dual->add_option("codes,--codes", codes_path)->required();
  dual->add_option("--out", out_path);

  auto* counter = app.add_subcommand(
      "counterexample", "sharpness instance for rings with q_2 == q_1 + 1");
  counter->add_option("ring,--ring", ring_text)->required();
  counter->add_option("--out", out_path);

  auto* campaign = app.add_subcommand(
      "campaign", "seeded randomized verification campaign");
  campaign->add_option("config,--config", config_path, "config JSON file")
      ->required();
  campaign->add_option("--seed", seed);
  campaign->add_option("--trials", trials);
  campaign->add_option("--format", format)
      ->check(CLI::IsMember({"json", "csv"}));
  campaign->add_option("--out", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }
  seed_set = campaign->count("--seed") > 0;
  trials_set = campaign->count("--trials") > 0;

  int status = MPCHOM_OK;

  if (weights->parsed()) {
    auto ring = parse_ring_or_die(ring_text, status);
    if (status != MPCHOM_OK) return report_error(status);
    char* raw = nullptr;
    status = mpchom_ring_weight_table(ring.get(), &raw);
    if (status != MPCHOM_OK) return report_error(status);
    CString json(raw);
    return write_output(format == "csv" ? weights_csv(json.get()) : json.get(),
                        out_path);
  }

  if (nsc->parsed() || build->parsed()) {
    auto ring = parse_ring_or_die(ring_text, status);
    if (status != MPCHOM_OK) return report_error(status);
    mpchom_matrix* raw_matrix = nullptr;
    if (nsc->parsed()) {
      status = mpchom_matrix_parse(ring.get(), matrix_json.c_str(), &raw_matrix);
    } else {
      status = mpchom_build_nsc(ring.get(), rows, cols, &raw_matrix);
    }
    if (status != MPCHOM_OK) return report_error(status);
    std::unique_ptr<mpchom_matrix, MatrixDeleter> matrix(raw_matrix);
    char* raw = nullptr;
    if (nsc->parsed()) {
      int is_nsc = 0;
      status = mpchom_matrix_is_nsc(matrix.get(), &is_nsc, &raw);
    } else {
      status = mpchom_matrix_to_json(matrix.get(), &raw);
    }
    if (status != MPCHOM_OK) return report_error(status);
    CString json(raw);
    return write_output(json.get(), out_path);
  }

  if (verify->parsed() || dual->parsed()) {
    auto ring = parse_ring_or_die(ring_text, status);
    if (status != MPCHOM_OK) return report_error(status);
    mpchom_matrix* raw_matrix = nullptr;
    status = mpchom_matrix_parse(ring.get(), matrix_json.c_str(), &raw_matrix);
    if (status != MPCHOM_OK) return report_error(status);
    std::unique_ptr<mpchom_matrix, MatrixDeleter> matrix(raw_matrix);

    bool ok = false;
    std::string codes_text = read_file(codes_path, ok);
    if (!ok) {
      std::cerr << "error: cannot read codes file '" << codes_path << "'\n";
      return kExitError;
    }
    mpchom_codes* raw_codes = nullptr;
    status = mpchom_codes_parse(ring.get(), codes_text.c_str(), &raw_codes);
    if (status != MPCHOM_OK) return report_error(status);
    std::unique_ptr<mpchom_codes, CodesDeleter> codes(raw_codes);

    char* raw = nullptr;
    int flag = 0;
    if (verify->parsed()) {
      status = mpchom_verify_bound(codes.get(), matrix.get(), &raw, &flag);
    } else {
      status = mpchom_verify_dual(codes.get(), matrix.get(), &raw, &flag);
    }
    if (status != MPCHOM_OK) return report_error(status);
    CString json(raw);
    const int rc = write_output(json.get(), out_path);
    if (rc != kExitOk) return rc;
    return flag ? kExitOk : kExitBoundViolation;
  }

  if (counter->parsed()) {
    auto ring = parse_ring_or_die(ring_text, status);
    if (status != MPCHOM_OK) return report_error(status);
    char* raw = nullptr;
    status = mpchom_counterexample(ring.get(), &raw);
    if (status != MPCHOM_OK) return report_error(status);
    CString json(raw);
    const int rc = write_output(json.get(), out_path);
    if (rc != kExitOk) return rc;
    return kExitBoundViolation;  // a successful construction is a violation
  }

  if (campaign->parsed()) {
    bool ok = false;
    std::string config_text = read_file(config_path, ok);
    if (!ok) {
      std::cerr << "error: cannot read config file '" << config_path << "'\n";
      return kExitError;
    }
    nlohmann::json config;
    try {
      config = nlohmann::json::parse(config_text);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "error: Parse: " << e.what() << "\n";
      return kExitError;
    }
    if (seed_set) config["seed"] = seed;
    if (trials_set) config["trials"] = trials;
    if (campaign->count("--format") > 0) config["format"] = format;
    // writing happens here, not in the library
    if (out_path.empty() && config.contains("out") &&
        config["out"].is_string()) {
      out_path = config["out"].get<std::string>();
    }
    config.erase("out");

    char* raw = nullptr;
    long long violations = 0;
    status = mpchom_campaign_run(config.dump().c_str(), &raw, &violations);
    if (status != MPCHOM_OK) return report_error(status);
    CString report(raw);
    const int rc = write_output(report.get(), out_path);
    if (rc != kExitOk) return rc;
    return violations > 0 ? kExitBoundViolation : kExitOk;
  }

  return kExitError;
}
