#include "phoncontrast/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

#ifdef PHONCONTRAST_OPENMP
#include <omp.h>
#endif

#include "phoncontrast/rng.hpp"
#include "phoncontrast/stats.hpp"

namespace phoncontrast {

double kendall_tau(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw ConfigError("tau inputs differ in length");
  const size_t n = x.size();
  if (n < 2) throw DataError("tau needs at least two observations");

  long long concordant = 0, discordant = 0, tied_x = 0, tied_y = 0;
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const double dx = x[i] - x[j], dy = y[i] - y[j];
      if (dx == 0.0 && dy == 0.0) continue;  // both-tied pairs drop out
      if (dx == 0.0) {
        ++tied_x;
      } else if (dy == 0.0) {
        ++tied_y;
      } else if ((dx > 0.0) == (dy > 0.0)) {
        ++concordant;
      } else {
        ++discordant;
      }
    }
  }
  const long long cd = concordant + discordant;
  if (cd + tied_x == 0 || cd + tied_y == 0)
    throw DataError("tau undefined: a list is entirely tied");
  return static_cast<double>(concordant - discordant) /
         std::sqrt(static_cast<double>(cd + tied_x) *
                   static_cast<double>(cd + tied_y));
}

namespace {

// One bootstrap delta; redraws resamples that leave tau undefined.
double bootstrap_delta(const std::vector<double>& a,
                       const std::vector<double>& b,
                       const std::vector<double>& scores, uint64_t seed,
                       uint64_t iteration, int* redraws) {
  const size_t n = scores.size();
  std::vector<double> ra(n), rb(n), rs(n);
  for (int attempt = 0; attempt < 10; ++attempt) {
    SplitMix64 rng = substream(seed, iteration, static_cast<uint64_t>(attempt));
    for (size_t k = 0; k < n; ++k) {
      const size_t idx = static_cast<size_t>(rng.bounded(n));
      ra[k] = a[idx];
      rb[k] = b[idx];
      rs[k] = scores[idx];
    }
    try {
      return kendall_tau(ra, rs) - kendall_tau(rb, rs);
    } catch (const DataError&) {
      ++*redraws;
    }
  }
  throw DataError("bootstrap resample exhaustion: degenerate input");
}

}  // namespace

BootstrapResult bootstrap_tau_diff(const std::vector<double>& a,
                                   const std::vector<double>& b,
                                   const std::vector<double>& scores,
                                   int iterations, uint64_t seed,
                                   ExecMode mode) {
  if (a.size() != b.size() || a.size() != scores.size())
    throw ConfigError("bootstrap inputs differ in length");
  if (scores.size() < 3)
    throw DataError("bootstrap needs at least three speakers");
  if (iterations < 1) throw ConfigError("bootstrap needs >= 1 iteration");

  BootstrapResult res;
  res.iterations = iterations;
  res.seed = seed;
  res.delta_tau_point = kendall_tau(a, scores) - kendall_tau(b, scores);

  std::vector<double> deltas(iterations);
  std::atomic<int> total_redraws{0};
  std::atomic<bool> failed{false};

#ifdef PHONCONTRAST_OPENMP
  const bool parallel = mode == ExecMode::parallel;
#pragma omp parallel for schedule(static) if (parallel)
  for (int it = 0; it < iterations; ++it) {
    if (failed.load(std::memory_order_relaxed)) continue;
    int redraws = 0;
    try {
      deltas[it] = bootstrap_delta(a, b, scores, seed,
                                   static_cast<uint64_t>(it), &redraws);
    } catch (const DataError&) {
      failed.store(true, std::memory_order_relaxed);
    }
    total_redraws += redraws;
  }
#else
  (void)mode;
  for (int it = 0; it < iterations; ++it) {
    int redraws = 0;
    deltas[it] = bootstrap_delta(a, b, scores, seed,
                                 static_cast<uint64_t>(it), &redraws);
    total_redraws += redraws;
  }
#endif
  if (failed.load())
    throw DataError("bootstrap resample exhaustion: degenerate input");

  std::sort(deltas.begin(), deltas.end());
  res.ci_low = percentile_inclusive(deltas, 0.025);
  res.ci_high = percentile_inclusive(deltas, 0.975);
  res.significant = !(res.ci_low <= 0.0 && 0.0 <= res.ci_high);
  return res;
}

std::vector<ErrorTypeRow> error_type_profile(
    const std::vector<std::pair<int, MetricCounts>>& per_utterance) {
  std::map<int, MetricCounts> buckets;
  for (const auto& [severity, counts] : per_utterance) {
    MetricCounts& b = buckets[severity];
    b.substitutions += counts.substitutions;
    b.insertions += counts.insertions;
    b.deletions += counts.deletions;
    b.matches += counts.matches;
    b.n_ref += counts.n_ref;
  }
  std::vector<ErrorTypeRow> rows;
  for (const auto& [severity, b] : buckets) {
    if (b.n_ref == 0) continue;
    ErrorTypeRow r;
    r.severity = severity;
    r.n_ref_total = b.n_ref;
    const double base = static_cast<double>(b.n_ref);
    r.correct_pct = 100.0 * static_cast<double>(b.matches) / base;
    r.sub_pct = 100.0 * static_cast<double>(b.substitutions) / base;
    r.del_pct = 100.0 * static_cast<double>(b.deletions) / base;
    r.ins_pct = 100.0 * static_cast<double>(b.insertions) / base;
    rows.push_back(r);
  }
  return rows;
}

std::vector<CoverageSlope> coverage_slopes(
    const std::map<std::string, std::map<int, double>>& coverage_by_phoneme,
    const std::map<int, double>& speakers_per_severity, double healthy_floor) {
  std::vector<CoverageSlope> out;
  for (const auto& [phoneme, by_sev] : coverage_by_phoneme) {
    if (by_sev.size() < 2) continue;
    auto healthy = by_sev.find(0);
    if (healthy == by_sev.end() || healthy->second < healthy_floor) continue;

    std::vector<double> x, y, w;
    for (const auto& [sev, cov] : by_sev) {
      auto sw = speakers_per_severity.find(sev);
      x.push_back(static_cast<double>(sev));
      y.push_back(cov);
      w.push_back(sw == speakers_per_severity.end() ? 1.0 : sw->second);
    }
    CoverageSlope s;
    s.phoneme = phoneme;
    s.slope = wls_slope(x, y, w);
    s.coverage_first = by_sev.begin()->second;
    s.coverage_last = by_sev.rbegin()->second;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const CoverageSlope& a, const CoverageSlope& b) {
              const double ma = std::abs(a.slope), mb = std::abs(b.slope);
              if (ma != mb) return ma > mb;
              return a.phoneme < b.phoneme;
            });
  return out;
}

std::vector<PferCell> pfer_distribution_stats(
    const std::vector<std::tuple<int, SegClass, double>>& values) {
  std::map<std::pair<int, int>, std::vector<double>> cells;
  for (const auto& [sev, cls, v] : values)
    cells[{sev, static_cast<int>(cls)}].push_back(v);

  std::vector<PferCell> out;
  for (auto& [key, vals] : cells) {
    PferCell c;
    c.severity = key.first;
    c.cls = static_cast<SegClass>(key.second);
    c.n = static_cast<long>(vals.size());
    c.mean = mean_of(vals);
    c.median = percentile_inclusive(vals, 0.5);
    c.p10 = percentile_inclusive(vals, 0.10);
    c.p90 = percentile_inclusive(vals, 0.90);
    out.push_back(c);
  }
  return out;
}

}  // namespace phoncontrast
