// Compares the serial and OpenMP execution paths of the two parallel
// kernels: the bootstrap resampler and the batch scoring pipeline.
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "phoncontrast/pipeline.hpp"
#include "phoncontrast/rng.hpp"

using namespace phoncontrast;
namespace fs = std::filesystem;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

std::string data_root() {
  if (const char* env = std::getenv("PHONCONTRAST_DATA")) return env;
  return "data";
}

std::vector<UtteranceRecord> synthetic_corpus(int speakers_per_severity,
                                              int utterances_per_speaker) {
  const std::vector<std::string> tokens = {
      "p", "b", "t", "d", "k", "ɡ", "m", "n", "s", "z",
      "f", "v", "l", "ɹ", "i", "ɪ", "æ", "ɑ", "u", "ə"};
  const double deletion_rate[4] = {0.0, 0.1, 0.3, 0.5};
  std::vector<UtteranceRecord> out;
  for (int sev = 0; sev < 4; ++sev)
    for (int spk = 0; spk < speakers_per_severity; ++spk)
      for (int utt = 0; utt < utterances_per_speaker; ++utt) {
        SplitMix64 rng(substream(4242, sev * 1000 + spk, utt));
        UtteranceRecord r;
        r.utterance_id = "u" + std::to_string(sev) + "_" +
                         std::to_string(spk) + "_" + std::to_string(utt);
        r.speaker_id = "s" + std::to_string(sev) + "_" + std::to_string(spk);
        r.language = "eng";
        r.severity = sev;
        const uint64_t len = 6 + rng.bounded(5);
        for (uint64_t i = 0; i < len; ++i) {
          const std::string& tok = tokens[rng.bounded(tokens.size())];
          if (!r.reference_ipa.empty()) r.reference_ipa += ' ';
          r.reference_ipa += tok;
          if (rng.unit() < deletion_rate[sev]) continue;
          if (!r.hypothesis_ipa.empty()) r.hypothesis_ipa += ' ';
          r.hypothesis_ipa += tok;
        }
        out.push_back(std::move(r));
      }
  return out;
}

void report_pair(const char* label, double serial_s, double parallel_s) {
  std::printf("  serial:   %8.3f s\n", serial_s);
  std::printf("  parallel: %8.3f s  (%.2fx)\n", parallel_s,
              parallel_s > 0 ? serial_s / parallel_s : 0.0);
  (void)label;
}

}  // namespace

int main(int argc, char** argv) {
  int n_speakers = 10;       // per severity level
  int n_utterances = 20;     // per speaker
  int iterations = 20000;    // bootstrap resamples
  if (argc > 1) n_utterances = std::atoi(argv[1]);
  if (argc > 2) iterations = std::atoi(argv[2]);

#ifndef PHONCONTRAST_OPENMP
  std::printf("note: built without OpenMP; both paths run serially\n");
#endif

  // Bootstrap kernel.
  {
    const int n = 60;
    SplitMix64 rng(7);
    std::vector<double> a(n), b(n), s(n);
    for (int i = 0; i < n; ++i) {
      s[i] = double(i % 5);
      a[i] = s[i] + rng.unit();
      b[i] = 3.0 * rng.unit();
    }
    std::printf("bootstrap_tau_diff: n=%d, iterations=%d\n", n, iterations);
    auto t0 = std::chrono::steady_clock::now();
    const BootstrapResult rs =
        bootstrap_tau_diff(a, b, s, iterations, 1, ExecMode::serial);
    const double serial_s = seconds_since(t0);
    t0 = std::chrono::steady_clock::now();
    const BootstrapResult rp =
        bootstrap_tau_diff(a, b, s, iterations, 1, ExecMode::parallel);
    const double parallel_s = seconds_since(t0);
    report_pair("bootstrap", serial_s, parallel_s);
    std::printf("  identical results: %s\n",
                rs.ci_low == rp.ci_low && rs.ci_high == rp.ci_high &&
                        rs.delta_tau_point == rp.delta_tau_point
                    ? "yes"
                    : "NO");
  }

  // Batch scoring kernel.
  {
    const fs::path root = data_root();
    const FeatureTable table =
        FeatureTable::load((root / "feature_table.csv").string(),
                           (root / "diacritic_rules.csv").string());
    std::map<std::string, PhonemeInventory> invs;
    PhonemeInventory inv =
        load_inventory((root / "inventories" / "eng.json").string());
    invs.emplace(inv.language, std::move(inv));

    const auto records = synthetic_corpus(n_speakers, n_utterances);
    RunConfig cfg;
    cfg.bootstrap_iterations = 200;
    std::printf("pipeline: %zu utterances x %zu settings\n", records.size(),
                cfg.settings.size());
    cfg.exec = ExecMode::serial;
    auto t0 = std::chrono::steady_clock::now();
    const PipelineResult rs = run_pipeline(cfg, records, table, invs);
    const double serial_s = seconds_since(t0);
    cfg.exec = ExecMode::parallel;
    t0 = std::chrono::steady_clock::now();
    const PipelineResult rp = run_pipeline(cfg, records, table, invs);
    const double parallel_s = seconds_since(t0);
    report_pair("pipeline", serial_s, parallel_s);
    std::printf("  identical results: %s\n",
                rs.report_json == rp.report_json &&
                        render_per_utterance_tsv(rs) ==
                            render_per_utterance_tsv(rp)
                    ? "yes"
                    : "NO");
  }
  return 0;
}
