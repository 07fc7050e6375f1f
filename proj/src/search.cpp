#include "cubelin/search.hpp"

#include <cstdlib>
#include <exception>
#include <thread>

#include <gmpxx.h>

#include "cubelin/inversion.hpp"
#include "cubelin/pairing.hpp"

namespace cubelin {
namespace {

constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ULL;

const char* name_of(SearchFilter f) {
  switch (f) {
    case SearchFilter::KellerOnly: return "keller_only";
    case SearchFilter::TraceZeroOnly: return "trace_zero_only";
  }
  return "";
}

const char* name_of(SearchCheck c) {
  switch (c) {
    case SearchCheck::RankBound: return "rank_bound";
    case SearchCheck::Invert: return "invert";
    case SearchCheck::Corollary: return "corollary";
  }
  return "";
}

SearchFilter filter_from(const std::string& s) {
  if (s == "keller_only") return SearchFilter::KellerOnly;
  if (s == "trace_zero_only") return SearchFilter::TraceZeroOnly;
  throw SearchConfigError("unknown filter '" + s + "' (expected keller_only or trace_zero_only)");
}

SearchCheck check_from(const std::string& s) {
  if (s == "rank_bound") return SearchCheck::RankBound;
  if (s == "invert") return SearchCheck::Invert;
  if (s == "corollary") return SearchCheck::Corollary;
  throw SearchConfigError("unknown check '" + s + "' (expected rank_bound, invert or corollary)");
}

mpz_class candidate_count(const SearchConfig& config) {
  if (config.mode == SearchMode::Sample) return mpz_class(static_cast<unsigned long>(config.count));
  mpz_class total;
  mpz_ui_pow_ui(total.get_mpz_t(), config.alphabet.size(), config.n * config.n);
  return total;
}

std::uint64_t json_u64(const Json& j, const char* key) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<long long>() < 0)) {
    throw SearchConfigError(std::string("'") + key + "' must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

}  // namespace

SearchConfig parse_search_config(const Json& j) {
  if (!j.is_object()) throw SearchConfigError("search config must be a JSON object");
  SearchConfig config;
  bool has_n = false, has_alphabet = false;
  for (const auto& [key, value] : j.items()) {
    if (key == "n") {
      config.n = json_u64(value, "n");
      has_n = true;
    } else if (key == "alphabet") {
      if (!value.is_array()) throw SearchConfigError("'alphabet' must be an array of literals");
      for (const auto& lit : value) {
        if (!lit.is_string()) throw SearchConfigError("'alphabet' entries must be strings");
        try {
          config.alphabet.push_back(GaussianRational::parse(lit.get<std::string>()));
        } catch (const ParseError& e) {
          throw SearchConfigError("alphabet entry '" + lit.get<std::string>() + "': " + e.what());
        }
      }
      has_alphabet = true;
    } else if (key == "mode") {
      const std::string mode = value.is_string() ? value.get<std::string>() : "";
      if (mode == "enumerate") {
        config.mode = SearchMode::Enumerate;
      } else if (mode == "sample") {
        config.mode = SearchMode::Sample;
      } else {
        throw SearchConfigError("'mode' must be \"enumerate\" or \"sample\"");
      }
    } else if (key == "count") {
      config.count = json_u64(value, "count");
    } else if (key == "seed") {
      config.seed = json_u64(value, "seed");
    } else if (key == "filters" || key == "checks") {
      if (!value.is_array()) throw SearchConfigError("'" + key + "' must be an array");
      for (const auto& item : value) {
        if (!item.is_string()) throw SearchConfigError("'" + key + "' entries must be strings");
        if (key == "filters") {
          config.filters.insert(filter_from(item.get<std::string>()));
        } else {
          config.checks.insert(check_from(item.get<std::string>()));
        }
      }
    } else if (key == "workers") {
      config.workers = static_cast<unsigned>(json_u64(value, "workers"));
    } else if (key == "ceiling") {
      config.ceiling = json_u64(value, "ceiling");
    } else {
      throw SearchConfigError("unknown config key '" + key + "'");
    }
  }
  if (!has_n) throw SearchConfigError("missing 'n'");
  if (!has_alphabet) throw SearchConfigError("missing 'alphabet'");
  validate(config);
  return config;
}

void validate(const SearchConfig& config) {
  if (config.n < 1 || config.n > kMaxVariables) {
    throw SearchConfigError("'n' must be between 1 and " + std::to_string(kMaxVariables));
  }
  if (config.alphabet.empty()) throw SearchConfigError("'alphabet' must not be empty");
  for (std::size_t a = 0; a < config.alphabet.size(); ++a) {
    for (std::size_t b = a + 1; b < config.alphabet.size(); ++b) {
      if (config.alphabet[a] == config.alphabet[b]) {
        throw SearchConfigError("'alphabet' repeats " + config.alphabet[a].to_string());
      }
    }
  }
  if (config.workers < 1) throw SearchConfigError("'workers' must be positive");
  if (config.checks.contains(SearchCheck::Corollary) && config.n > kCorollaryMaxDimension) {
    throw SearchConfigError("the corollary check needs n <= " +
                            std::to_string(kCorollaryMaxDimension));
  }
}

Json to_json(const SearchConfig& config) {
  Json out;
  out["n"] = config.n;
  Json alphabet = Json::array();
  for (const auto& a : config.alphabet) alphabet.push_back(a.to_string());
  out["alphabet"] = std::move(alphabet);
  out["mode"] = config.mode == SearchMode::Enumerate ? "enumerate" : "sample";
  if (config.mode == SearchMode::Sample) {
    out["count"] = config.count;
    out["seed"] = config.seed;
  }
  Json filters = Json::array();
  for (auto f : config.filters) filters.push_back(name_of(f));
  out["filters"] = std::move(filters);
  Json checks = Json::array();
  for (auto c : config.checks) checks.push_back(name_of(c));
  out["checks"] = std::move(checks);
  out["ceiling"] = config.ceiling;
  return out;
}

std::uint64_t ceiling_from_environment() {
  const char* raw = std::getenv("CUBELIN_CEILING");
  if (raw == nullptr || *raw == '\0') return kDefaultEnumerationCeiling;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == nullptr || *end != '\0') return kDefaultEnumerationCeiling;
  return value;
}

std::uint64_t splitmix64(std::uint64_t seed, std::uint64_t draw) {
  std::uint64_t z = seed + (draw + 1) * kGoldenGamma;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::string candidate_count_string(const SearchConfig& config) {
  return candidate_count(config).get_str();
}

ScalarMatrix candidate_matrix(const SearchConfig& config, std::uint64_t index) {
  const std::size_t n = config.n;
  const std::size_t entries = n * n;
  const std::uint64_t base = config.alphabet.size();
  ScalarMatrix m(n, n);
  if (config.mode == SearchMode::Enumerate) {
    std::uint64_t rest = index;
    for (std::size_t e = entries; e-- > 0;) {
      m(e / n, e % n) = config.alphabet[rest % base];
      rest /= base;
    }
  } else {
    for (std::size_t e = 0; e < entries; ++e) {
      m(e / n, e % n) = config.alphabet[splitmix64(config.seed, index * entries + e) % base];
    }
  }
  return m;
}

Json to_json(const CandidateRecord& record) {
  Json out;
  out["index"] = record.index;
  out["matrix"] = matrix_to_json(record.matrix);
  out["certificate"] = to_json(record.certificate);
  out["keller"] = record.keller;
  out["inverse_degree"] = record.inverse_degree ? Json(*record.inverse_degree) : Json(nullptr);
  out["corollary_verified"] =
      record.corollary_verified ? Json(*record.corollary_verified) : Json(nullptr);
  out["anomaly"] = record.anomaly;
  out["reasons"] = record.reasons;
  return out;
}

void SearchTotals::merge(const SearchTotals& o) {
  candidates += o.candidates;
  trace_zero += o.trace_zero;
  keller += o.keller;
  keller_det_cross_checked += o.keller_det_cross_checked;
  selected += o.selected;
  rank_bound_checked += o.rank_bound_checked;
  rank_bound_applicable += o.rank_bound_applicable;
  rank_bound_tight += o.rank_bound_tight;
  rank_bound_violations += o.rank_bound_violations;
  invert_attempted += o.invert_attempted;
  invertible += o.invertible;
  not_invertible += o.not_invertible;
  max_inverse_degree = std::max(max_inverse_degree, o.max_inverse_degree);
  corollary_attempted += o.corollary_attempted;
  corollary_applicable += o.corollary_applicable;
  corollary_verified += o.corollary_verified;
  trace_gram_mismatches += o.trace_gram_mismatches;
  keller_det_mismatches += o.keller_det_mismatches;
  nilpotent_with_nonzero_trace += o.nilpotent_with_nonzero_trace;
  evaluation_errors += o.evaluation_errors;
}

Json to_json(const SearchReport& report) {
  const SearchTotals& t = report.totals;
  Json totals;
  totals["candidates"] = t.candidates;
  totals["trace_zero"] = t.trace_zero;
  totals["keller"] = t.keller;
  totals["keller_det_cross_checked"] = t.keller_det_cross_checked;
  totals["selected"] = t.selected;
  totals["rank_bound"] = Json{{"checked", t.rank_bound_checked},
                              {"trace_condition", t.rank_bound_applicable},
                              {"tight", t.rank_bound_tight},
                              {"violations", t.rank_bound_violations}};
  totals["invert"] = Json{{"attempted", t.invert_attempted},
                          {"invertible", t.invertible},
                          {"not_invertible", t.not_invertible},
                          {"max_inverse_degree", t.max_inverse_degree}};
  totals["corollary"] = Json{{"attempted", t.corollary_attempted},
                             {"applicable", t.corollary_applicable},
                             {"verified", t.corollary_verified}};
  totals["cross_checks"] = Json{{"trace_gram_mismatches", t.trace_gram_mismatches},
                                {"keller_det_mismatches", t.keller_det_mismatches},
                                {"nilpotent_with_nonzero_trace", t.nilpotent_with_nonzero_trace},
                                {"evaluation_errors", t.evaluation_errors}};
  Json anomalies = Json::array();
  for (const auto& a : report.anomalies) anomalies.push_back(to_json(a));

  Json out;
  out["config"] = to_json(report.config);
  out["totals"] = std::move(totals);
  out["anomaly_count"] = report.anomalies.size();
  out["anomalies"] = std::move(anomalies);
  out["duration_ms"] = report.duration.count();
  return out;
}

CandidateRecord evaluate_candidate(const SearchConfig& config, std::uint64_t index,
                                   SearchTotals& totals) {
  CandidateRecord rec;
  rec.index = index;
  rec.matrix = candidate_matrix(config, index);
  const ScalarMatrix& a = rec.matrix;
  const std::size_t n = config.n;
  ++totals.candidates;

  auto flag = [&rec](std::string reason) {
    rec.anomaly = true;
    rec.reasons.push_back(std::move(reason));
  };

  try {
    rec.certificate = rank_bound_certificate(a);
    const bool trace_zero = rec.certificate.trace_condition_holds;
    if (trace_zero) ++totals.trace_zero;
    if (trace_poly(a).is_zero() != trace_zero) {
      ++totals.trace_gram_mismatches;
      flag("trace polynomial and A^t D A disagree on the trace condition");
    }

    // A nonzero trace rules out nilpotency (it is the degree-2 part of
    // det(I + JH) - 1), so large dimensions skip the expensive test then.
    const bool full_keller_test = trace_zero || n <= 3;
    if (full_keller_test) {
      try {
        rec.keller = is_keller(a);
        if (n <= kMaxDeterminantSize) ++totals.keller_det_cross_checked;
      } catch (const KellerCrossCheckError& e) {
        ++totals.keller_det_mismatches;
        flag(e.what());
      }
    }
    if (rec.keller) ++totals.keller;
    if (rec.keller && !trace_zero) {
      ++totals.nilpotent_with_nonzero_trace;
      flag("nilpotent JH with nonzero trace");
    }

    bool selected = true;
    if (config.filters.contains(SearchFilter::KellerOnly)) selected = selected && rec.keller;
    if (config.filters.contains(SearchFilter::TraceZeroOnly)) selected = selected && trace_zero;
    if (selected) {
      ++totals.selected;
      if (config.checks.contains(SearchCheck::RankBound)) {
        ++totals.rank_bound_checked;
        if (trace_zero) ++totals.rank_bound_applicable;
        if (rec.certificate.tight()) ++totals.rank_bound_tight;
        if (!rec.certificate.theorem_satisfied) {
          ++totals.rank_bound_violations;
          flag("rank bound violated: 2*rank = " + std::to_string(2 * rec.certificate.rank) +
               " > n + delta = " + std::to_string(rec.certificate.bound_times_two));
        }
      }
      if (config.checks.contains(SearchCheck::Invert)) {
        ++totals.invert_attempted;
        const InverseResult inv = decide_automorphism(a);
        if (inv.invertible()) {
          ++totals.invertible;
          rec.inverse_degree = inv.inverse_degree;
          totals.max_inverse_degree = std::max(totals.max_inverse_degree, *inv.inverse_degree);
        } else {
          ++totals.not_invertible;
          if (rec.keller) {
            flag("Keller map not inverted within degree bound " +
                 std::to_string(inv.degree_bound_used));
          }
        }
      }
      if (config.checks.contains(SearchCheck::Corollary)) {
        ++totals.corollary_attempted;
        const CorollaryReport report = corollary_pipeline(a);
        if (report.applicable()) {
          ++totals.corollary_applicable;
          rec.corollary_verified = report.verified;
          if (report.verified) ++totals.corollary_verified;
        }
        if (report.anomaly) flag("corollary pipeline: " + *report.anomaly);
      }
    }
  } catch (const std::exception& e) {
    ++totals.evaluation_errors;
    flag(std::string("evaluation error: ") + e.what());
  }
  return rec;
}

SearchReport run_search(const SearchConfig& config) {
  validate(config);
  const auto start = std::chrono::steady_clock::now();
  const mpz_class total_big = candidate_count(config);
  if (config.mode == SearchMode::Enumerate && total_big > mpz_class(std::to_string(config.ceiling))) {
    throw SearchRefused("enumeration would visit " + total_big.get_str() +
                        " candidates, above the ceiling of " + std::to_string(config.ceiling));
  }
  const std::uint64_t total = std::stoull(total_big.get_str());

  struct Chunk {
    SearchTotals totals;
    std::vector<CandidateRecord> anomalies;
    std::vector<CandidateRecord> records;
    std::exception_ptr error;
  };
  const unsigned workers = std::max(1u, config.workers);
  std::vector<Chunk> chunks(workers);

  auto work = [&](unsigned w) {
    Chunk& chunk = chunks[w];
    try {
      const std::uint64_t begin = total / workers * w + std::min<std::uint64_t>(w, total % workers);
      const std::uint64_t end =
          begin + total / workers + (w < total % workers ? 1 : 0);
      for (std::uint64_t k = begin; k < end; ++k) {
        const std::uint64_t selected_before = chunk.totals.selected;
        CandidateRecord rec = evaluate_candidate(config, k, chunk.totals);
        const bool selected = chunk.totals.selected > selected_before;
        if (rec.anomaly) chunk.anomalies.push_back(rec);
        if (config.keep_records && selected) chunk.records.push_back(std::move(rec));
      }
    } catch (...) {
      chunk.error = std::current_exception();
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(work, w);
  }

  SearchReport report;
  report.config = config;
  for (Chunk& chunk : chunks) {
    if (chunk.error) std::rethrow_exception(chunk.error);
    report.totals.merge(chunk.totals);
    for (auto& a : chunk.anomalies) report.anomalies.push_back(std::move(a));
    for (auto& r : chunk.records) report.records.push_back(std::move(r));
  }
  report.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace cubelin
