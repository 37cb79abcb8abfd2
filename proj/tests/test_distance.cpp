#include <doctest.h>

#include "phoncontrast/distance.hpp"
#include "phoncontrast/rng.hpp"
#include "support.hpp"

using namespace phoncontrast;
using testsupport::inventory;
using testsupport::table;

TEST_SUITE_BEGIN("distance");

namespace {

double d13(const char* a, const char* b) {
  static const WeightVector w = testsupport::consonant13_weights();
  return feat_distance(table().lookup(a), table().lookup(b), w);
}

FeatureVector random_vec(SplitMix64* rng) {
  FeatureVector v;
  for (int i = 0; i < kNumFeatures; ++i)
    v[i] = static_cast<int8_t>(static_cast<int>(rng->bounded(3)) - 1);
  return v;
}

}  // namespace

TEST_CASE("pinned consonant distances under the 13-feature weights") {
  CHECK(d13("p", "b") == doctest::Approx(1.0 / 13.0).epsilon(1e-12));
  CHECK(d13("p", "ɡ") == doctest::Approx(7.0 / 26.0).epsilon(1e-12));
  CHECK(d13("z", "s") == doctest::Approx(1.0 / 13.0).epsilon(1e-12));
  CHECK(d13("t̪", "t") == doctest::Approx(1.0 / 13.0).epsilon(1e-12));
  CHECK(d13("t̪", "θ") == doctest::Approx(1.0 / 13.0).epsilon(1e-12));
  CHECK(d13("pʰ", "p") == 0.0);
}

TEST_CASE("class-aware distances select the pair-appropriate weights") {
  const LanguageWeights eng =
      make_language_weights(inventory("eng"), table(), 0.0);
  const ClassAwareDistance dist{&table(), &eng};
  CHECK(dist("p", "b") == doctest::Approx(1.0 / 13.0).epsilon(1e-12));
  CHECK(dist("i", "ɪ") == doctest::Approx(1.0 / 5.0).epsilon(1e-12));
  CHECK(dist("i", "u") == doctest::Approx(2.0 / 5.0).epsilon(1e-12));
  // Cross-class pairs fall back to the union set.
  CHECK(dist("p", "ɑ") == doctest::Approx(19.0 / 36.0).epsilon(1e-12));
  CHECK(dist("ɑ", "p") == doctest::Approx(19.0 / 36.0).epsilon(1e-12));
  CHECK(feat_distance(table().lookup("i"), table().lookup("ɪ"), eng.unified) ==
        doctest::Approx(2.0 / 36.0).epsilon(1e-12));
  CHECK(feat_distance(table().lookup("p"), table().lookup("ɡ"), eng.unified) ==
        doctest::Approx(10.0 / 36.0).epsilon(1e-12));

  const LanguageWeights spa =
      make_language_weights(inventory("spa"), table(), 0.0);
  CHECK(feat_distance(table().lookup("z"), table().lookup("s"), spa.unified) ==
        doctest::Approx(2.0 / 34.0).epsilon(1e-12));
}

TEST_CASE("uniform weights collapse identical realizations") {
  WeightVector all;
  all.fill(1.0);
  CHECK(feat_distance(table().lookup("æ"), table().lookup("a"), all) == 0.0);
  CHECK(feat_distance(table().lookup("ɛ"), table().lookup("ə"), all) == 0.0);
}

TEST_CASE("extreme vectors reach distance one") {
  FeatureVector lo, hi;
  lo.fill(-1);
  hi.fill(1);
  WeightVector w;
  w.fill(1.0);
  CHECK(feat_distance(lo, hi, w) == 1.0);
}

TEST_CASE("all-zero weights are rejected") {
  WeightVector w;
  w.fill(0.0);
  CHECK_THROWS_AS(feat_distance(table().lookup("p"), table().lookup("b"), w),
                  ConfigError);
}

TEST_CASE("metric axioms hold on random ternary vectors") {
  SplitMix64 rng(7);
  WeightVector w;
  for (int i = 0; i < kNumFeatures; ++i) w[i] = 0.25 + rng.unit();
  for (int trial = 0; trial < 2000; ++trial) {
    const FeatureVector a = random_vec(&rng);
    const FeatureVector b = random_vec(&rng);
    const FeatureVector c = random_vec(&rng);
    const double dab = feat_distance(a, b, w);
    const double dba = feat_distance(b, a, w);
    const double dac = feat_distance(a, c, w);
    const double dcb = feat_distance(c, b, w);
    REQUIRE(dab == dba);
    REQUIRE(dab >= 0.0);
    REQUIRE(dab <= 1.0);
    REQUIRE(feat_distance(a, a, w) == 0.0);
    REQUIRE(dab <= dac + dcb + 1e-12);
  }
}

TEST_SUITE_END();
