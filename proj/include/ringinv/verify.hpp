#pragma once

// Theorem catalog runner and ring census. Each catalog entry encodes one
// statement about the inverse along an element (an equivalence, an identity,
// or a set description) and checks it by quantifying over an enumerable ring:
// exhaustively for one- and two-variable statements, and over a documented
// stratified domain (0, 1, idempotents, units, plus a fixed-seed sample) for
// free variables beyond the second when the ring has more than 12 elements.
//
// The ground truth for "a is invertible along d" inside the runner is a
// definitional brute-force table (unique outer inverse with matching
// one-sided principal ideals), so route-based theorems are checked against
// an independent oracle.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ringinv/ring.hpp"

namespace ringinv {

struct VerifyOptions {
  bool parallel = false;      // OpenMP sweep over instances
  std::uint64_t seed = 0;     // seed for sampled strata
  std::uint64_t max_failures = 8;  // witnesses kept per report
};

// Largest ring the runner accepts; keeps full sweeps desk-scale.
inline constexpr std::uint64_t kVerifyMaxElements = 256;

enum class VerifyStatus { Pass, Fail, NotApplicable };

const char* status_name(VerifyStatus s);

struct FailureWitness {
  std::vector<std::pair<std::string, std::string>> bindings;  // name -> element literal
  std::string detail;                                         // failing clause
};

struct TheoremReport {
  std::string theorem_id;
  std::string ring;
  VerifyStatus status = VerifyStatus::Pass;
  std::uint64_t instances_checked = 0;
  std::vector<FailureWitness> failures;
  double elapsed_ms = 0.0;
  std::string note;  // sampling descriptions, skipped clauses, N/A reasons
};

// Catalog keys in canonical order.
const std::vector<std::string>& catalog_ids();
bool is_catalog_id(const std::string& id);
// One-line mathematical description of the entry.
const char* catalog_description(const std::string& id);

// Throws RingError for an unknown id, a non-enumerable ring, or a ring
// larger than kVerifyMaxElements.
TheoremReport verify_theorem(const RingPtr& ring, const std::string& theorem_id,
                             const VerifyOptions& opts = {});
std::vector<TheoremReport> verify_all(const RingPtr& ring, const VerifyOptions& opts = {});

nlohmann::ordered_json to_json(const TheoremReport& rep);
nlohmann::ordered_json to_json(const std::vector<TheoremReport>& reps);

struct CensusReport {
  std::string ring;
  std::uint64_t size = 0;
  std::uint64_t units = 0;
  std::uint64_t idempotents = 0;
  std::uint64_t regular = 0;
  std::uint64_t group_invertible = 0;
  std::uint64_t quasinilpotent = 0;
  std::uint64_t mp_invertible = 0;
  std::uint64_t ep = 0;
  std::vector<std::pair<unsigned, std::uint64_t>> drazin_index_histogram;  // index -> count
  std::vector<std::pair<std::string, std::uint64_t>> along_set_sizes;  // regular d -> |R^{along d}|
};

CensusReport census(const RingPtr& ring, const VerifyOptions& opts = {});
nlohmann::ordered_json to_json(const CensusReport& rep);

}  // namespace ringinv
