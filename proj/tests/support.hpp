// Shared test fixtures: data loading, brute-force oracles, and the
// synthetic graded corpus used by pipeline and acceptance tests.
#pragma once

#include <unistd.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "phoncontrast/alignment.hpp"
#include "phoncontrast/features.hpp"
#include "phoncontrast/inventory.hpp"
#include "phoncontrast/pipeline.hpp"
#include "phoncontrast/rng.hpp"

namespace testsupport {

using namespace phoncontrast;

inline std::string data_dir() { return PHONCONTRAST_DATA_DIR; }

inline const FeatureTable& table() {
  static const FeatureTable t = FeatureTable::load(
      data_dir() + "/feature_table.csv", data_dir() + "/diacritic_rules.csv");
  return t;
}

inline const PhonemeInventory& inventory(const std::string& lang) {
  static std::map<std::string, PhonemeInventory> cache;
  auto it = cache.find(lang);
  if (it == cache.end())
    it = cache
             .emplace(lang, load_inventory(data_dir() + "/inventories/" +
                                           lang + ".json"))
             .first;
  return it->second;
}

inline std::map<std::string, PhonemeInventory> inventories(
    const std::vector<std::string>& langs) {
  std::map<std::string, PhonemeInventory> out;
  for (const auto& l : langs) out.emplace(l, inventory(l));
  return out;
}

// The consonant contrastive set shared by all four language fixtures.
inline const std::vector<std::string>& consonant13() {
  static const std::vector<std::string> names = {
      "syl", "son",   "cons", "cont", "delrel", "lat",  "nas",
      "strid", "voi", "ant",  "cor",  "distr",  "lab"};
  return names;
}

inline WeightVector consonant13_weights() {
  return build_weights(consonant13(), 0.0, table());
}

// Cost-only alignment oracle. Pure recursion for short inputs, memoized
// recursion otherwise; no tie-breaking, just the minimum.
inline double oracle_align_cost(const SegmentSequence& ref,
                                const SegmentSequence& hyp,
                                const PairDistanceFn& dist, double theta,
                                double gap) {
  const size_t n = ref.size(), m = hyp.size();
  const double inf = std::numeric_limits<double>::infinity();
  const bool memoize = n + m > 10;
  std::vector<double> memo;
  if (memoize) memo.assign((n + 1) * (m + 1), -1.0);

  std::function<double(size_t, size_t)> go = [&](size_t i, size_t j) -> double {
    if (i == n) return static_cast<double>(m - j) * gap;
    if (j == m) return static_cast<double>(n - i) * gap;
    if (memoize && memo[i * (m + 1) + j] >= 0.0) return memo[i * (m + 1) + j];
    double best = std::min(go(i + 1, j) + gap, go(i, j + 1) + gap);
    const double d = dist(ref[i], hyp[j]);
    if (d <= theta + 1e-9) best = std::min(best, go(i + 1, j + 1) + d);
    if (memoize) memo[i * (m + 1) + j] = best;
    return best;
  };
  const double c = go(0, 0);
  (void)inf;
  return c;
}

// Plain Levenshtein distance, integer DP, written independently of the
// alignment module.
inline long levenshtein(const SegmentSequence& a, const SegmentSequence& b) {
  std::vector<long> prev(b.size() + 1), cur(b.size() + 1);
  for (size_t j = 0; j <= b.size(); ++j) prev[j] = static_cast<long>(j);
  for (size_t i = 1; i <= a.size(); ++i) {
    cur[0] = static_cast<long>(i);
    for (size_t j = 1; j <= b.size(); ++j) {
      const long sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

// Tau-b through the tie-group formula, as an independent cross-check of the
// library's pair-enumeration implementation.
inline double oracle_tau_b(std::vector<double> x, std::vector<double> y) {
  const size_t n = x.size();
  long long concordant = 0, discordant = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      const double s = (x[i] - x[j]) * (y[i] - y[j]);
      if (s > 0) ++concordant;
      if (s < 0) ++discordant;
    }
  auto tie_term = [](std::vector<double> v) {
    std::sort(v.begin(), v.end());
    long long t = 0;
    size_t i = 0;
    while (i < v.size()) {
      size_t j = i;
      while (j < v.size() && v[j] == v[i]) ++j;
      const long long g = static_cast<long long>(j - i);
      t += g * (g - 1) / 2;
      i = j;
    }
    return t;
  };
  const long long n0 = static_cast<long long>(n) * (n - 1) / 2;
  const long long n1 = tie_term(x), n2 = tie_term(y);
  return static_cast<double>(concordant - discordant) /
         std::sqrt(static_cast<double>(n0 - n1) *
                   static_cast<double>(n0 - n2));
}

// English voicing pairs; each differs from its partner in voi alone, so the
// substitution clears the gate at every non-contrastive weight.
inline const std::map<std::string, std::string>& voicing_swap() {
  static const std::map<std::string, std::string> m = {
      {"p", "b"},  {"b", "p"},  {"t", "d"},  {"d", "t"},
      {"k", "ɡ"},  {"ɡ", "k"},  {"f", "v"},  {"v", "f"},
      {"θ", "ð"},  {"ð", "θ"},  {"s", "z"},  {"z", "s"},
      {"ʃ", "ʒ"},  {"ʒ", "ʃ"},  {"tʃ", "dʒ"}, {"dʒ", "tʃ"}};
  return m;
}

struct CorpusSpec {
  int speakers_per_severity = 10;
  int utterances_per_speaker = 20;
  std::vector<double> deletion_rate = {0.0, 0.10, 0.30, 0.50};
  std::vector<double> substitution_rate = {0.0, 0.05, 0.15, 0.25};
  // Severity-independent replacement of voiceless obstruents by their
  // aspirated (out-of-inventory) forms in the hypothesis.
  double aspiration_rate = 0.0;
  uint64_t seed = 42;
};

// Graded synthetic corpus over the English inventory: deletions and
// voicing-pair substitutions scale with severity; aspiration noise, when
// enabled, does not.
inline std::vector<UtteranceRecord> make_graded_corpus(const CorpusSpec& spec) {
  const PhonemeInventory& inv = inventory("eng");
  const std::vector<std::string> vocab = inv.ordered_members();
  static const std::map<std::string, std::string> aspirate = {
      {"p", "pʰ"}, {"t", "tʰ"}, {"k", "kʰ"}, {"s", "sʰ"}, {"f", "fʰ"}};

  std::vector<UtteranceRecord> out;
  const int n_sev = static_cast<int>(spec.deletion_rate.size());
  for (int sev = 0; sev < n_sev; ++sev) {
    for (int spk = 0; spk < spec.speakers_per_severity; ++spk) {
      char spk_id[32];
      std::snprintf(spk_id, sizeof(spk_id), "S%d%02d", sev, spk);
      for (int utt = 0; utt < spec.utterances_per_speaker; ++utt) {
        SplitMix64 rng = substream(
            spec.seed, static_cast<uint64_t>(sev * 1000 + spk),
            static_cast<uint64_t>(utt));
        const int len = 6 + static_cast<int>(rng.bounded(5));
        std::string ref, hyp;
        for (int k = 0; k < len; ++k) {
          const std::string& tok = vocab[rng.bounded(vocab.size())];
          ref += tok;
          ref += ' ';
          if (rng.unit() < spec.deletion_rate[sev]) continue;
          std::string h = tok;
          if (rng.unit() < spec.substitution_rate[sev]) {
            auto it = voicing_swap().find(h);
            if (it != voicing_swap().end()) h = it->second;
          }
          if (spec.aspiration_rate > 0.0 &&
              rng.unit() < spec.aspiration_rate) {
            auto it = aspirate.find(h);
            if (it != aspirate.end()) h = it->second;
          }
          hyp += h;
          hyp += ' ';
        }
        UtteranceRecord r;
        char utt_id[48];
        std::snprintf(utt_id, sizeof(utt_id), "%s-u%03d", spk_id, utt);
        r.utterance_id = utt_id;
        r.speaker_id = spk_id;
        r.language = "eng";
        r.severity = sev;
        r.reference_ipa = ref;
        r.hypothesis_ipa = hyp;
        out.push_back(std::move(r));
      }
    }
  }
  return out;
}

// Scratch directory for tests that touch the filesystem.
inline std::filesystem::path fresh_temp_dir(const std::string& tag) {
  const auto p = std::filesystem::temp_directory_path() /
                 ("phoncontrast_" + tag + "_" +
                  std::to_string(static_cast<unsigned long>(::getpid())));
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(f), {});
}

inline void spit(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  f << content;
}

}  // namespace testsupport
