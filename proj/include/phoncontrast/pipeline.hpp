// End-to-end pipeline: corpus ingestion, per-utterance scoring under the
// four analysis settings, speaker aggregation, evaluation, serialization.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phoncontrast/eval.hpp"
#include "phoncontrast/inventory.hpp"
#include "phoncontrast/metrics.hpp"

namespace phoncontrast {

enum class Setting { raw, mapping, alignment, mapping_alignment };

const char* to_string(Setting s);
Setting setting_from_string(const std::string& s);  // ConfigError on miss

struct UtteranceRecord {
  std::string utterance_id;
  std::string speaker_id;
  std::string language;
  int severity = 0;
  std::string reference_ipa;
  std::string hypothesis_ipa;
};

// Reads a JSON-lines corpus (one object per line with keys utterance_id,
// speaker_id, language, severity, reference_ipa, hypothesis_ipa). Schema
// violations raise DataError with the line number.
std::vector<UtteranceRecord> ingest_corpus(const std::string& path);

struct RunConfig {
  std::vector<Setting> settings{Setting::raw, Setting::mapping,
                                Setting::alignment,
                                Setting::mapping_alignment};
  double w_nc = 0.0;
  std::optional<double> theta_override;
  uint64_t seed = 0;
  int bootstrap_iterations = 10000;
  bool strict = false;           // abort on the first utterance error
  bool strict_equality = false;  // classify substitutions by string equality
  ExecMode exec = ExecMode::parallel;
};

struct UtteranceRow {
  std::string utterance_id;
  std::string speaker_id;
  std::string language;
  int severity = 0;
  Setting setting = Setting::raw;
  MetricCounts counts;
  std::optional<double> per, pfer, pfer_consonant, pfer_vowel, phoncov;
  bool excluded = false;
  std::string error;
};

struct SpeakerRow {
  std::string language;
  Setting setting = Setting::raw;
  SpeakerReport report;
  int n_excluded = 0;  // utterances dropped by errors
};

struct CoverageRow {
  std::string language;
  Setting setting = Setting::raw;
  int severity = 0;
  std::string phoneme;
  long covered = 0;        // utterances containing the phoneme in both sides
  long opportunities = 0;  // utterances containing it in the reference
};

struct PipelineResult {
  std::vector<UtteranceRow> utterances;
  std::vector<SpeakerRow> speakers;
  std::vector<CoverageRow> coverage;
  std::string report_json;
};

// Scores every record under every requested setting. In lenient mode an
// utterance that raises a data error is excluded from aggregates and
// counted; in strict mode the error propagates.
PipelineResult run_pipeline(const RunConfig& cfg,
                            const std::vector<UtteranceRecord>& records,
                            const FeatureTable& table,
                            const std::map<std::string, PhonemeInventory>& invs);

// Deterministic text renderings (fixed six-decimal reals, NA for undefined).
std::string render_per_utterance_tsv(const PipelineResult& r);
std::string render_per_speaker_tsv(const PipelineResult& r);
std::string render_coverage_tsv(const PipelineResult& r);

// Writes per_utterance.tsv, per_speaker.tsv, phoneme_coverage.tsv, and
// report.json under out_dir (created if missing).
void write_outputs(const PipelineResult& r, const std::string& out_dir);

}  // namespace phoncontrast
