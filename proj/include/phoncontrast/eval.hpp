// Evaluation layer: rank correlation against severity, bootstrap
// comparison of correlations, and descriptive error analyses.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "phoncontrast/inventory.hpp"
#include "phoncontrast/metrics.hpp"

namespace phoncontrast {

enum class ExecMode { serial, parallel };

// Kendall tau-b by exact pair enumeration. Requires n >= 2; throws
// DataError when either list is entirely tied (undefined correlation).
double kendall_tau(const std::vector<double>& x, const std::vector<double>& y);

struct CorrelationResult {
  std::string metric_name;
  std::string setting;
  double tau = 0.0;
  int n = 0;
};

struct BootstrapResult {
  double delta_tau_point = 0.0;  // tau(a, scores) - tau(b, scores)
  double ci_low = 0.0;
  double ci_high = 0.0;
  int iterations = 0;
  uint64_t seed = 0;
  bool significant = false;  // zero outside [ci_low, ci_high]
};

// Paired bootstrap over speakers for the difference in tau against the
// shared score list. Each iteration resamples speaker indices with
// replacement (the same indices for a, b, and scores) from a substream
// keyed by (seed, iteration), so results are independent of execution
// order. Iterations whose resample leaves tau undefined are redrawn, at
// most ten times each, after which a DataError reports resample
// exhaustion. CI bounds are the 2.5th and 97.5th percentiles of the sorted
// deltas. Requires equal lengths and n >= 3.
BootstrapResult bootstrap_tau_diff(const std::vector<double>& a,
                                   const std::vector<double>& b,
                                   const std::vector<double>& scores,
                                   int iterations = 10000, uint64_t seed = 0,
                                   ExecMode mode = ExecMode::serial);

struct ErrorTypeRow {
  int severity = 0;
  long n_ref_total = 0;
  double correct_pct = 0.0;
  double sub_pct = 0.0;
  double del_pct = 0.0;
  double ins_pct = 0.0;  // relative to the same reference-token base
};

// Percentage profile of alignment op types per severity bucket; correct,
// substitution, and deletion percentages sum to 100 exactly. Buckets are
// sorted by severity; empty buckets are omitted.
std::vector<ErrorTypeRow> error_type_profile(
    const std::vector<std::pair<int, MetricCounts>>& per_utterance);

struct CoverageSlope {
  std::string phoneme;
  double slope = 0.0;
  double coverage_first = 0.0;  // at the lowest severity present
  double coverage_last = 0.0;   // at the highest severity present
};

// Weighted least-squares slope of per-phoneme coverage (percent) on
// severity, weighted by speaker counts. Phonemes below `healthy_floor`
// coverage at severity 0, or observed at fewer than two severity levels,
// are excluded. Ranked by |slope| descending, phoneme ascending on ties.
std::vector<CoverageSlope> coverage_slopes(
    const std::map<std::string, std::map<int, double>>& coverage_by_phoneme,
    const std::map<int, double>& speakers_per_severity,
    double healthy_floor = 80.0);

struct PferCell {
  int severity = 0;
  SegClass cls = SegClass::consonant;
  long n = 0;
  double mean = 0.0;
  double median = 0.0;
  double p10 = 0.0;
  double p90 = 0.0;
};

// Distribution summary of per-utterance class-restricted PFER values,
// grouped by (severity, class) and sorted the same way.
std::vector<PferCell> pfer_distribution_stats(
    const std::vector<std::tuple<int, SegClass, double>>& values);

}  // namespace phoncontrast
