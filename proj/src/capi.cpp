// SPDX-License-Identifier: Apache-2.0
#include "mpchom.h"

#include <cstdlib>
#include <cstring>
#include <fstream>

#include "mpchom/campaign.hpp"
#include "mpchom/errors.hpp"
#include "mpchom/parse.hpp"

using namespace mpchom;

struct mpchom_ring {
  PirPtr impl;
};

struct mpchom_matrix {
  RingMatrix impl;
};

struct mpchom_codes {
  PirPtr ring;
  std::vector<Code> impl;
};

namespace {

thread_local std::string g_last_error;

int set_error(Errc code, const std::string& message) {
  g_last_error = message;
  return static_cast<int>(code);
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

template <typename Fn>
int guarded(Fn&& fn) {
  try {
    fn();
    return MPCHOM_OK;
  } catch (const RingError& e) {
    return set_error(e.code(), e.what());
  } catch (const std::exception& e) {
    return set_error(Errc::Internal, e.what());
  }
}

int require(bool ok, const char* message) {
  if (ok) return MPCHOM_OK;
  return set_error(Errc::InvalidArgument, message);
}

}  // namespace

extern "C" {

const char* mpchom_version(void) { return kVersion; }

const char* mpchom_status_name(int status) {
  return errc_name(static_cast<Errc>(status));
}

const char* mpchom_last_error(void) { return g_last_error.c_str(); }

void mpchom_string_free(char* text) { std::free(text); }

int mpchom_ring_parse(const char* text, mpchom_ring** out) {
  if (int rc = require(text && out, "ring_parse needs text and out")) return rc;
  return guarded([&] { *out = new mpchom_ring{parse_ring(text)}; });
}

void mpchom_ring_free(mpchom_ring* ring) { delete ring; }

int mpchom_ring_describe(const mpchom_ring* ring, char** json_out) {
  if (int rc = require(ring && json_out, "ring_describe needs ring and out")) {
    return rc;
  }
  return guarded([&] {
    const Pir& R = *ring->impl;
    Json out = Json::object();
    out["ring"] = R.describe();
    out["signature"] = R.signature();
    out["size"] = R.size();
    Json comps = Json::array();
    for (const ChainRing& c : R.components()) {
      comps.push_back(Json::object({{"name", c.describe()},
                                    {"p", c.p()},
                                    {"e", c.e()},
                                    {"r", c.r()},
                                    {"q", c.q()}}));
    }
    out["components"] = std::move(comps);
    if (R.modulus()) out["modulus"] = *R.modulus();
    *json_out = dup_string(out.dump(2) + "\n");
  });
}

int mpchom_ring_weight_table(const mpchom_ring* ring, char** json_out) {
  if (int rc = require(ring && json_out, "weight_table needs ring and out")) {
    return rc;
  }
  return guarded([&] {
    *json_out = dup_string(weight_table_to_json(*ring->impl).dump(2) + "\n");
  });
}

int mpchom_ring_hypothesis(const mpchom_ring* ring, int* ok_out,
                           char** reason_out) {
  if (int rc = require(ring && ok_out, "hypothesis needs ring and ok_out")) {
    return rc;
  }
  return guarded([&] {
    const Hypothesis h = hypothesis_check(*ring->impl);
    *ok_out = h.ok ? 1 : 0;
    if (reason_out) *reason_out = dup_string(h.reason);
  });
}

int mpchom_matrix_parse(const mpchom_ring* ring, const char* json,
                        mpchom_matrix** out) {
  if (int rc = require(ring && json && out, "matrix_parse needs all inputs")) {
    return rc;
  }
  return guarded([&] {
    *out = new mpchom_matrix{
        matrix_from_json(ring->impl, parse_json_text(json))};
  });
}

void mpchom_matrix_free(mpchom_matrix* matrix) { delete matrix; }

int mpchom_matrix_to_json(const mpchom_matrix* matrix, char** json_out) {
  if (int rc = require(matrix && json_out, "matrix_to_json needs all inputs")) {
    return rc;
  }
  return guarded([&] {
    *json_out = dup_string(matrix_to_json(matrix->impl).dump() + "\n");
  });
}

int mpchom_matrix_is_nsc(const mpchom_matrix* matrix, int* nsc_out,
                         char** detail_json_out) {
  if (int rc = require(matrix && nsc_out, "is_nsc needs matrix and out")) {
    return rc;
  }
  return guarded([&] {
    const NscResult r = is_nsc(matrix->impl);
    *nsc_out = r.ok ? 1 : 0;
    if (detail_json_out) {
      *detail_json_out = dup_string(
          nsc_result_to_json(*matrix->impl.ring(), r).dump(2) + "\n");
    }
  });
}

int mpchom_build_nsc(const mpchom_ring* ring, int rows, int cols,
                     mpchom_matrix** out) {
  if (int rc = require(ring && out, "build_nsc needs ring and out")) return rc;
  if (int rc = require(rows >= 1 && cols >= 1, "shape must be positive")) {
    return rc;
  }
  return guarded([&] {
    *out = new mpchom_matrix{build_nsc(ring->impl,
                                       static_cast<std::size_t>(rows),
                                       static_cast<std::size_t>(cols))};
  });
}

int mpchom_codes_parse(const mpchom_ring* ring, const char* json,
                       mpchom_codes** out) {
  if (int rc = require(ring && json && out, "codes_parse needs all inputs")) {
    return rc;
  }
  return guarded([&] {
    *out = new mpchom_codes{
        ring->impl, codes_from_json(ring->impl, parse_json_text(json))};
  });
}

void mpchom_codes_free(mpchom_codes* codes) { delete codes; }

int mpchom_codes_count(const mpchom_codes* codes, int* count_out) {
  if (int rc = require(codes && count_out, "codes_count needs all inputs")) {
    return rc;
  }
  *count_out = static_cast<int>(codes->impl.size());
  return MPCHOM_OK;
}

int mpchom_verify_bound(const mpchom_codes* codes,
                          const mpchom_matrix* matrix, char** report_json_out,
                          int* bound_holds_out) {
  if (int rc = require(codes && matrix && report_json_out,
                       "verify_bound needs codes, matrix, and out")) {
    return rc;
  }
  return guarded([&] {
    const MpcReport rep = verify_bound(codes->impl, matrix->impl);
    *report_json_out = dup_string(
        mpc_report_to_json(*matrix->impl.ring(), rep).dump(2) + "\n");
    if (bound_holds_out) *bound_holds_out = rep.bound_holds ? 1 : 0;
  });
}

int mpchom_verify_dual(const mpchom_codes* codes, const mpchom_matrix* matrix,
                       char** report_json_out, int* all_ok_out) {
  if (int rc = require(codes && matrix && report_json_out,
                       "verify_dual needs codes, matrix, and out")) {
    return rc;
  }
  return guarded([&] {
    const DualReport rep = verify_dual(codes->impl, matrix->impl);
    *report_json_out = dup_string(dual_report_to_json(rep).dump(2) + "\n");
    if (all_ok_out) {
      const bool ok = rep.set_equal && rep.reversed_inverse_nsc &&
                      rep.cardinality_ok &&
                      (!rep.hypothesis_ok || rep.bound_holds) &&
                      (!(rep.hypothesis_ok && (rep.c1 || rep.c2)) ||
                       rep.equality);
      *all_ok_out = ok ? 1 : 0;
    }
  });
}

int mpchom_counterexample(const mpchom_ring* ring, char** report_json_out) {
  if (int rc = require(ring && report_json_out,
                       "counterexample needs ring and out")) {
    return rc;
  }
  return guarded([&] {
    const Counterexample ce = build_counterexample(ring->impl);
    *report_json_out = dup_string(counterexample_to_json(ce).dump(2) + "\n");
  });
}

int mpchom_rowspan_hamming(const mpchom_matrix* matrix, int k,
                           char** report_json_out) {
  if (int rc = require(matrix && report_json_out && k >= 1,
                       "rowspan needs matrix, out, and k >= 1")) {
    return rc;
  }
  return guarded([&] {
    const RowspanReport rep =
        rowspan_hamming(matrix->impl, static_cast<std::size_t>(k));
    Json out = Json::object();
    out["k"] = rep.k;
    out["min_hamming"] = rep.min_hamming;
    out["expected"] = rep.expected;
    out["ok"] = rep.ok;
    *report_json_out = dup_string(out.dump(2) + "\n");
  });
}

int mpchom_campaign_run(const char* config_json, char** report_out,
                        long long* violations_out) {
  if (int rc = require(config_json && report_out,
                       "campaign_run needs config and out")) {
    return rc;
  }
  return guarded([&] {
    const CampaignConfig config =
        CampaignConfig::from_json(parse_json_text(config_json));
    const CampaignResult result = run_campaign(config);
    const std::string report = config.format == "csv"
                                   ? campaign_report_csv(config, result)
                                   : campaign_report_json(config, result);
    if (!config.out_path.empty()) {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) {
        fail(Errc::InvalidArgument,
             "cannot open output file '" + config.out_path + "'");
      }
      file << report;
    }
    *report_out = dup_string(report);
    if (violations_out) {
      *violations_out = static_cast<long long>(result.violations);
    }
  });
}

}  // extern "C"
