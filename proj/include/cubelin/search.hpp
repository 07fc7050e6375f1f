#ifndef CUBELIN_SEARCH_HPP
#define CUBELIN_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cubelin/druzkowski.hpp"
#include "cubelin/io.hpp"
#include "cubelin/matrix.hpp"

namespace cubelin {

enum class SearchMode { Enumerate, Sample };
enum class SearchFilter { KellerOnly, TraceZeroOnly };
enum class SearchCheck { RankBound, Invert, Corollary };

inline constexpr std::uint64_t kDefaultEnumerationCeiling = 10'000'000;

/// Invalid search configuration.
class SearchConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Enumeration larger than the configured ceiling; the message carries the count.
class SearchRefused : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchConfig {
  std::size_t n = 2;
  std::vector<GaussianRational> alphabet;
  SearchMode mode = SearchMode::Enumerate;
  std::uint64_t count = 0;  ///< sample mode only
  std::uint64_t seed = 0;   ///< sample mode only
  std::set<SearchFilter> filters;
  std::set<SearchCheck> checks;
  unsigned workers = 1;
  std::uint64_t ceiling = kDefaultEnumerationCeiling;
  bool keep_records = false;
};

/*
 * Reads the JSON form
 *
 *   {"n": 2, "alphabet": ["0", "1"], "mode": "enumerate" | "sample",
 *    "count": 10000, "seed": 7, "filters": ["keller_only", "trace_zero_only"],
 *    "checks": ["rank_bound", "invert", "corollary"], "workers": 1,
 *    "ceiling": 10000000}
 *
 * where only "n" and "alphabet" are required.
 */
SearchConfig parse_search_config(const Json& j);
/// Echo of the configuration; the worker count is left out so reports do not depend on it.
Json to_json(const SearchConfig& config);
void validate(const SearchConfig& config);

/// CUBELIN_CEILING if set and valid, else kDefaultEnumerationCeiling.
std::uint64_t ceiling_from_environment();

/*
 * SplitMix64 output number `draw` (0-based) of the stream seeded with
 * `seed`: the state before draw k is seed + (k+1) * 0x9E3779B97F4A7C15,
 * followed by the standard SplitMix64 finalizer. Random access lets
 * workers reproduce any slice of the stream independently.
 */
std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t draw);

/// Number of candidates the configuration visits, as a decimal string.
std::string candidate_count_string(const SearchConfig& config);

/*
 * Candidate `index` of the search space.
 *
 * Enumerate: `index` written in base |alphabet| with n^2 digits, most
 * significant digit first, gives the alphabet positions of the entries in
 * row-major order. Sample: entry e of candidate k takes alphabet position
 * splitmix64(seed, k * n^2 + e) mod |alphabet|.
 */
ScalarMatrix candidate_matrix(const SearchConfig& config, std::uint64_t index);

struct CandidateRecord {
  std::uint64_t index = 0;
  ScalarMatrix matrix;
  RankBoundCertificate certificate;
  bool keller = false;
  std::optional<std::uint32_t> inverse_degree;
  std::optional<bool> corollary_verified;
  bool anomaly = false;
  std::vector<std::string> reasons;
};

Json to_json(const CandidateRecord& record);

struct SearchTotals {
  std::uint64_t candidates = 0;
  std::uint64_t trace_zero = 0;
  std::uint64_t keller = 0;
  std::uint64_t keller_det_cross_checked = 0;
  std::uint64_t selected = 0;

  std::uint64_t rank_bound_checked = 0;
  std::uint64_t rank_bound_applicable = 0;
  std::uint64_t rank_bound_tight = 0;
  std::uint64_t rank_bound_violations = 0;

  std::uint64_t invert_attempted = 0;
  std::uint64_t invertible = 0;
  std::uint64_t not_invertible = 0;
  std::uint32_t max_inverse_degree = 0;

  std::uint64_t corollary_attempted = 0;
  std::uint64_t corollary_applicable = 0;
  std::uint64_t corollary_verified = 0;

  std::uint64_t trace_gram_mismatches = 0;
  std::uint64_t keller_det_mismatches = 0;
  std::uint64_t nilpotent_with_nonzero_trace = 0;
  std::uint64_t evaluation_errors = 0;

  void merge(const SearchTotals& other);
  friend bool operator==(const SearchTotals&, const SearchTotals&) = default;
};

struct SearchReport {
  SearchConfig config;
  SearchTotals totals;
  std::vector<CandidateRecord> anomalies;  ///< ascending index
  std::vector<CandidateRecord> records;    ///< selected candidates, only with keep_records
  std::chrono::milliseconds duration{0};

  bool clean() const noexcept { return anomalies.empty(); }
};

/// Summary object: config echo, totals, anomalies, duration_ms (last key).
Json to_json(const SearchReport& report);

/// Evaluates one candidate; `totals` receives its contribution.
CandidateRecord evaluate_candidate(const SearchConfig& config, std::uint64_t index,
                                   SearchTotals& totals);

/*
 * Visits every candidate, splitting the index range into `workers`
 * contiguous chunks. Totals are sums and anomalies are concatenated in chunk
 * order, so the report does not depend on the worker count.
 */
SearchReport run_search(const SearchConfig& config);

}  // namespace cubelin

#endif  // CUBELIN_SEARCH_HPP
