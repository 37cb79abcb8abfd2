#include <doctest.h>

#include "phoncontrast/inventory.hpp"
#include "support.hpp"

using namespace phoncontrast;
using testsupport::inventory;
using testsupport::table;

TEST_SUITE_BEGIN("inventory");

TEST_CASE("fixtures load with the expected shapes") {
  CHECK(inventory("eng").consonants.size() == 24);
  CHECK(inventory("eng").vowels.size() == 12);
  CHECK(inventory("spa").consonants.size() == 19);
  CHECK(inventory("spa").vowels.size() == 5);
  CHECK(inventory("ita").consonants.size() == 23);
  CHECK(inventory("ita").vowels.size() == 7);
  CHECK(inventory("tam").consonants.size() == 19);
  CHECK(inventory("tam").vowels.size() == 10);
  CHECK(inventory("eng").is_member("tʃ"));
  CHECK_FALSE(inventory("eng").is_member("ɟ"));
}

TEST_CASE("cluster whitelist picks the multi-base members") {
  CHECK(inventory("eng").cluster_whitelist() ==
        std::vector<std::string>{"tʃ", "dʒ"});
  CHECK(inventory("spa").cluster_whitelist() ==
        std::vector<std::string>{"tʃ"});
  CHECK(inventory("ita").cluster_whitelist() ==
        std::vector<std::string>{"ts", "tʃ", "dʒ"});
  CHECK(inventory("tam").cluster_whitelist() ==
        std::vector<std::string>{"tʃ", "dʒ"});
}

TEST_CASE("vowel scans recover the per-language contrastive sets") {
  using V = std::vector<std::string>;
  CHECK(identify_contrastive(inventory("eng"), table(), SegClass::vowel) ==
        V{"hi", "lo", "back", "round", "tense"});
  CHECK(identify_contrastive(inventory("spa"), table(), SegClass::vowel) ==
        V{"hi", "lo", "back", "round"});
  CHECK(identify_contrastive(inventory("ita"), table(), SegClass::vowel) ==
        V{"hi", "lo", "back", "round", "tense"});
  CHECK(identify_contrastive(inventory("tam"), table(), SegClass::vowel) ==
        V{"hi", "lo", "back", "round", "long"});
}

TEST_CASE("consonant scans differ from the shipped override") {
  using V = std::vector<std::string>;
  CHECK(identify_contrastive(inventory("eng"), table(), SegClass::consonant) ==
        V{"son", "cons", "cont", "delrel", "lat", "nas", "strid", "voi", "sg",
          "ant", "cor", "distr", "lab", "back", "round"});
  CHECK(identify_contrastive(inventory("spa"), table(), SegClass::consonant) ==
        V{"son", "cont", "delrel", "lat", "nas", "strid", "voi", "ant", "cor",
          "distr", "lab", "back"});
  CHECK(identify_contrastive(inventory("ita"), table(), SegClass::consonant) ==
        V{"son", "cons", "cont", "delrel", "lat", "nas", "strid", "voi", "sg",
          "ant", "cor", "distr", "lab", "back", "round"});
  CHECK(identify_contrastive(inventory("tam"), table(), SegClass::consonant) ==
        V{"son", "cons", "cont", "delrel", "lat", "nas", "strid", "voi", "ant",
          "cor", "distr", "lab", "back"});
  for (const char* lang : {"eng", "spa", "ita", "tam"}) {
    REQUIRE(inventory(lang).contrastive_override.has_value());
    CHECK(inventory(lang).contrastive_override->consonants ==
          testsupport::consonant13());
  }
}

TEST_CASE("build_weights fills contrastive slots with 1 and the rest with w_nc") {
  const WeightVector w = build_weights({"voi", "nas"}, 0.25, table());
  CHECK(w[table().feature_index("voi")] == 1.0);
  CHECK(w[table().feature_index("nas")] == 1.0);
  CHECK(w[table().feature_index("syl")] == 0.25);
  CHECK_THROWS_AS(build_weights({"bogus"}, 0.0, table()), ConfigError);
  CHECK_THROWS_AS(build_weights({"voi"}, -0.1, table()), ConfigError);
  CHECK_THROWS_AS(build_weights({"voi"}, 1.5, table()), ConfigError);
}

TEST_CASE("theta matches the frozen values across w_nc") {
  struct Row {
    const char* lang;
    double w_nc;
    double theta;
  };
  const Row rows[] = {
      {"eng", 0.0, 1.0 / 6.0},    {"eng", 0.5, 67.0 / 420.0},
      {"eng", 1.0, 37.0 / 240.0}, {"spa", 0.0, 31.0 / 170.0},
      {"spa", 0.5, 31.0 / 205.0}, {"spa", 1.0, 31.0 / 240.0},
      {"ita", 0.0, 17.0 / 90.0},  {"ita", 0.5, 17.0 / 105.0},
      {"ita", 1.0, 17.0 / 120.0}, {"tam", 0.0, 31.0 / 180.0},
      {"tam", 0.5, 31.0 / 210.0}, {"tam", 1.0, 31.0 / 240.0},
  };
  for (const Row& r : rows) {
    CAPTURE(r.lang);
    CAPTURE(r.w_nc);
    const LanguageWeights lw =
        make_language_weights(inventory(r.lang), table(), r.w_nc);
    CHECK(lw.theta == doctest::Approx(r.theta).epsilon(1e-12));
  }
}

TEST_CASE("theta override bypasses the computation") {
  const LanguageWeights lw =
      make_language_weights(inventory("eng"), table(), 0.0, 0.25);
  CHECK(lw.theta == 0.25);
  CHECK_THROWS_AS(make_language_weights(inventory("eng"), table(), 0.0, 1.5),
                  ConfigError);
  CHECK_THROWS_AS(make_language_weights(inventory("eng"), table(), 0.0, 0.0),
                  ConfigError);
}

TEST_CASE("pair weights select by segment class") {
  const LanguageWeights lw =
      make_language_weights(inventory("eng"), table(), 0.0);
  CHECK(&lw.pair_weights(false, false) == &lw.consonant);
  CHECK(&lw.pair_weights(true, true) == &lw.vowel);
  CHECK(&lw.pair_weights(true, false) == &lw.unified);
  CHECK(&lw.pair_weights(false, true) == &lw.unified);
  CHECK(lw.consonant_set.size() == 13);
  CHECK(lw.vowel_set.size() == 5);
  CHECK(lw.union_set.size() == 18);
}

TEST_CASE("theta needs at least two consonants") {
  PhonemeInventory inv;
  inv.language = "tiny";
  inv.consonants = {"p"};
  inv.vowels = {"a"};
  CHECK_THROWS_AS(compute_theta(inv, table(), testsupport::consonant13_weights()),
                  DataError);
}

TEST_CASE("schema violations are data errors") {
  namespace fs = std::filesystem;
  const fs::path dir = testsupport::fresh_temp_dir("inventory");
  auto check_bad = [&](const std::string& body) {
    testsupport::spit(dir / "inv.json", body);
    CHECK_THROWS_AS(load_inventory((dir / "inv.json").string()), DataError);
  };
  check_bad("{");
  check_bad(R"({"language":"x","consonants":[],"vowels":["a"]})");
  check_bad(R"({"language":"x","consonants":["p","p"],"vowels":["a"]})");
  check_bad(R"({"language":"x","consonants":["p"],"vowels":["p"]})");
  check_bad(R"({"consonants":["p"],"vowels":["a"]})");
  check_bad(
      R"({"language":"x","consonants":["p"],"vowels":["a"],"frequencies":{"p":-1}})");
  fs::remove_all(dir);
}

TEST_SUITE_END();
