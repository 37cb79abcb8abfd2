#include <doctest.h>

#include <cmath>

#include "phoncontrast/eval.hpp"
#include "support.hpp"

using namespace phoncontrast;

TEST_SUITE_BEGIN("eval");

TEST_CASE("kendall tau on handcrafted lists") {
  CHECK(kendall_tau({1, 2, 3, 4}, {10, 20, 30, 40}) == 1.0);
  CHECK(kendall_tau({1, 2, 3, 4}, {40, 30, 20, 10}) == -1.0);
  // One discordant pair among six: (C-D)/n = (4-2)/6 with no ties.
  CHECK(kendall_tau({1, 2, 3, 4}, {1, 3, 2, 4}) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  // Ties on both sides, worked by hand: C=4, D=0, TX=1, TY=1.
  const std::vector<double> x = {1, 1, 2, 3};
  const std::vector<double> y = {5, 6, 6, 7};
  CHECK(kendall_tau(x, y) ==
        doctest::Approx(4.0 / std::sqrt(5.0 * 5.0)).epsilon(1e-12));
}

TEST_CASE("kendall tau matches the tie-group formula on random lists") {
  SplitMix64 rng(71);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n = 2 + rng.bounded(14);
    std::vector<double> x(n), y(n);
    for (size_t i = 0; i < n; ++i) {
      x[i] = double(rng.bounded(6));
      y[i] = double(rng.bounded(6));
    }
    const auto all_same = [](const std::vector<double>& v) {
      for (double e : v)
        if (e != v[0]) return false;
      return true;
    };
    if (all_same(x) || all_same(y)) {
      CHECK_THROWS_AS(kendall_tau(x, y), DataError);
      continue;
    }
    CHECK(kendall_tau(x, y) ==
          doctest::Approx(testsupport::oracle_tau_b(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("kendall tau rejects degenerate input") {
  CHECK_THROWS_AS(kendall_tau({1, 1, 1}, {1, 2, 3}), DataError);
  CHECK_THROWS_AS(kendall_tau({1, 2, 3}, {7, 7, 7}), DataError);
  CHECK_THROWS_AS(kendall_tau({1, 2}, {1}), ConfigError);
  CHECK_THROWS_AS(kendall_tau({1}, {1}), DataError);
}

TEST_CASE("bootstrap of identical lists is a zero-width null") {
  const std::vector<double> a = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6};
  const std::vector<double> s = {0, 1, 2, 3, 4, 5};
  const BootstrapResult r = bootstrap_tau_diff(a, a, s, 500, 9);
  CHECK(r.delta_tau_point == 0.0);
  CHECK(r.ci_low == 0.0);
  CHECK(r.ci_high == 0.0);
  CHECK_FALSE(r.significant);
  CHECK(r.iterations == 500);
  CHECK(r.seed == 9);
}

TEST_CASE("bootstrap is deterministic in the seed") {
  SplitMix64 rng(1234);
  std::vector<double> a(12), b(12), s(12);
  for (size_t i = 0; i < a.size(); ++i) {
    s[i] = double(i);
    a[i] = double(i) + 0.5 * rng.unit();
    b[i] = double(a.size() - i) + 2.0 * rng.unit();
  }
  const BootstrapResult r1 = bootstrap_tau_diff(a, b, s, 400, 42);
  const BootstrapResult r2 = bootstrap_tau_diff(a, b, s, 400, 42);
  CHECK(r1.ci_low == r2.ci_low);
  CHECK(r1.ci_high == r2.ci_high);
  CHECK(r1.delta_tau_point == r2.delta_tau_point);

  const BootstrapResult r3 = bootstrap_tau_diff(a, b, s, 400, 43);
  CHECK((r3.ci_low != r1.ci_low || r3.ci_high != r1.ci_high));
}

TEST_CASE("bootstrap is antisymmetric in its first two arguments") {
  SplitMix64 rng(77);
  std::vector<double> a(10), b(10), s(10);
  for (size_t i = 0; i < a.size(); ++i) {
    s[i] = double(i);
    a[i] = double(i) + rng.unit();
    b[i] = 3.0 * rng.unit();
  }
  const BootstrapResult fwd = bootstrap_tau_diff(a, b, s, 300, 5);
  const BootstrapResult rev = bootstrap_tau_diff(b, a, s, 300, 5);
  CHECK(fwd.delta_tau_point == doctest::Approx(-rev.delta_tau_point));
  CHECK(fwd.ci_low == doctest::Approx(-rev.ci_high).epsilon(1e-12));
  CHECK(fwd.ci_high == doctest::Approx(-rev.ci_low).epsilon(1e-12));
  CHECK(fwd.significant == rev.significant);
}

TEST_CASE("bootstrap serial and parallel modes agree exactly") {
  SplitMix64 rng(3);
  std::vector<double> a(15), b(15), s(15);
  for (size_t i = 0; i < a.size(); ++i) {
    s[i] = double(i % 5);
    a[i] = rng.unit();
    b[i] = rng.unit();
  }
  const BootstrapResult ser =
      bootstrap_tau_diff(a, b, s, 1000, 11, ExecMode::serial);
  const BootstrapResult par =
      bootstrap_tau_diff(a, b, s, 1000, 11, ExecMode::parallel);
  CHECK(ser.delta_tau_point == par.delta_tau_point);
  CHECK(ser.ci_low == par.ci_low);
  CHECK(ser.ci_high == par.ci_high);
  CHECK(ser.significant == par.significant);
}

TEST_CASE("bootstrap input validation") {
  const std::vector<double> ok = {1, 2, 3};
  CHECK_THROWS_AS(bootstrap_tau_diff({1, 2}, {1, 2}, {1, 2}, 100, 0),
                  DataError);
  CHECK_THROWS_AS(bootstrap_tau_diff(ok, {1, 2}, ok, 100, 0), ConfigError);
  CHECK_THROWS_AS(bootstrap_tau_diff(ok, ok, ok, 0, 0), ConfigError);
}

TEST_CASE("a clear signal is flagged significant, noise is not") {
  // a tracks the scores perfectly; b is seed-dependent noise.
  const int n = 30;
  std::vector<double> a(n), s(n);
  for (int i = 0; i < n; ++i) {
    a[i] = double(i);
    s[i] = double(i);
  }
  int significant = 0;
  for (uint64_t seed = 0; seed < 6; ++seed) {
    SplitMix64 rng(substream(900 + seed, 0, 0));
    std::vector<double> b(n);
    for (int i = 0; i < n; ++i) b[i] = rng.unit();
    const BootstrapResult r =
        bootstrap_tau_diff(a, b, s, 800, seed, ExecMode::parallel);
    if (r.significant) ++significant;
    CHECK(r.delta_tau_point > 0.5);
  }
  CHECK(significant >= 5);
}

TEST_CASE("error type profile percentages sum and bucket correctly") {
  MetricCounts sev0;
  sev0.matches = 9;
  sev0.substitutions = 1;
  sev0.deletions = 0;
  sev0.insertions = 0;
  sev0.n_ref = 10;
  sev0.n_aligned = 10;
  MetricCounts sev2a;
  sev2a.matches = 3;
  sev2a.substitutions = 1;
  sev2a.deletions = 1;
  sev2a.insertions = 2;
  sev2a.n_ref = 5;
  sev2a.n_aligned = 7;
  MetricCounts sev2b;
  sev2b.matches = 4;
  sev2b.substitutions = 0;
  sev2b.deletions = 1;
  sev2b.insertions = 0;
  sev2b.n_ref = 5;
  sev2b.n_aligned = 5;
  MetricCounts empty;  // contributes nothing; its bucket must vanish

  const auto rows = error_type_profile(
      {{2, sev2a}, {0, sev0}, {2, sev2b}, {7, empty}});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].severity == 0);
  CHECK(rows[0].n_ref_total == 10);
  CHECK(rows[0].correct_pct == doctest::Approx(90.0).epsilon(1e-12));
  CHECK(rows[0].sub_pct == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(rows[1].severity == 2);
  CHECK(rows[1].n_ref_total == 10);
  CHECK(rows[1].correct_pct == doctest::Approx(70.0).epsilon(1e-12));
  CHECK(rows[1].sub_pct == doctest::Approx(10.0).epsilon(1e-12));
  CHECK(rows[1].del_pct == doctest::Approx(20.0).epsilon(1e-12));
  CHECK(rows[1].ins_pct == doctest::Approx(20.0).epsilon(1e-12));
  for (const auto& r : rows)
    CHECK(r.correct_pct + r.sub_pct + r.del_pct ==
          doctest::Approx(100.0).epsilon(1e-12));
}

TEST_CASE("coverage slopes filter and rank phonemes") {
  std::map<std::string, std::map<int, double>> cov;
  cov["p"] = {{0, 100.0}, {1, 80.0}, {2, 60.0}};
  cov["t"] = {{0, 95.0}, {1, 90.0}, {2, 85.0}};
  cov["k"] = {{0, 70.0}, {1, 50.0}, {2, 30.0}};  // unhealthy at severity 0
  cov["s"] = {{1, 90.0}};                        // single level
  const std::map<int, double> speakers = {{0, 10.0}, {1, 10.0}, {2, 10.0}};

  const auto rows = coverage_slopes(cov, speakers, 80.0);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].phoneme == "p");
  CHECK(rows[0].slope == doctest::Approx(-20.0).epsilon(1e-9));
  CHECK(rows[0].coverage_first == 100.0);
  CHECK(rows[0].coverage_last == 60.0);
  CHECK(rows[1].phoneme == "t");
  CHECK(rows[1].slope == doctest::Approx(-5.0).epsilon(1e-9));
}

TEST_CASE("coverage slope weighting follows speaker counts") {
  // Three points not on a line; unequal weights pull the slope toward the
  // heavily sampled severities.
  std::map<std::string, std::map<int, double>> cov;
  cov["p"] = {{0, 100.0}, {1, 100.0}, {2, 40.0}};
  const std::map<int, double> flat = {{0, 1.0}, {1, 1.0}, {2, 1.0}};
  const std::map<int, double> tilted = {{0, 1.0}, {1, 1.0}, {2, 8.0}};
  const double s_flat = coverage_slopes(cov, flat, 80.0)[0].slope;
  const double s_tilt = coverage_slopes(cov, tilted, 80.0)[0].slope;
  CHECK(s_flat == doctest::Approx(-30.0).epsilon(1e-9));
  CHECK(s_tilt < s_flat);
}

TEST_CASE("pfer distribution stats summarize cells") {
  std::vector<std::tuple<int, SegClass, double>> vals;
  for (double v : {0.1, 0.2, 0.3, 0.4})
    vals.emplace_back(1, SegClass::consonant, v);
  vals.emplace_back(1, SegClass::vowel, 0.5);
  vals.emplace_back(0, SegClass::vowel, 0.0);

  const auto cells = pfer_distribution_stats(vals);
  REQUIRE(cells.size() == 3);
  CHECK(cells[0].severity == 0);
  CHECK(cells[0].cls == SegClass::vowel);
  CHECK(cells[0].n == 1);
  CHECK(cells[1].severity == 1);
  CHECK(cells[1].cls == SegClass::consonant);
  CHECK(cells[1].n == 4);
  CHECK(cells[1].mean == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cells[1].median == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(cells[1].p10 == doctest::Approx(0.13).epsilon(1e-9));
  CHECK(cells[1].p90 == doctest::Approx(0.37).epsilon(1e-9));
  CHECK(cells[2].cls == SegClass::vowel);
  CHECK(cells[2].n == 1);
  CHECK(cells[2].median == 0.5);
}

TEST_SUITE_END();
