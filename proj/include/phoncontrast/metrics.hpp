// Utterance metrics (PER, PFER, PhonCov) and speaker-level aggregation.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phoncontrast/alignment.hpp"
#include "phoncontrast/features.hpp"
#include "phoncontrast/inventory.hpp"

namespace phoncontrast {

struct MetricCounts {
  long substitutions = 0;
  long insertions = 0;
  long deletions = 0;
  long matches = 0;
  long n_ref = 0;
  long n_aligned = 0;
};

MetricCounts count_ops(const Alignment& al, long n_ref);

// (S + I + D) / N_ref; may exceed 1. Empty reference -> no value.
std::optional<double> per(const Alignment& al, long n_ref);

// Mean pair_distance over all alignment ops. Empty alignment -> no value.
std::optional<double> pfer(const Alignment& al);

// PFER restricted to ops of one segment class. Deletions and substitutions
// are classed by their reference segment, insertions by their hypothesis
// segment. No ops of the class -> no value.
std::optional<double> pfer_class(const Alignment& al, const SegmentSequence& ref,
                                 const SegmentSequence& hyp, SegClass cls,
                                 const FeatureTable& table);

// 100 * |unique(ref) intersect unique(hyp)| / |unique(ref)|.
// Empty reference -> no value.
std::optional<double> phoncov(const SegmentSequence& ref,
                              const SegmentSequence& hyp);

struct UtteranceMetrics {
  std::string utterance_id;
  MetricCounts counts;
  std::optional<double> per;
  std::optional<double> pfer;
  std::optional<double> pfer_consonant;
  std::optional<double> pfer_vowel;
  std::optional<double> phoncov;
};

struct SpeakerReport {
  std::string speaker_id;
  int severity = 0;
  int n_utterances = 0;
  // Count of utterances with an undefined value, per metric.
  int per_undefined = 0;
  int pfer_undefined = 0;
  int phoncov_undefined = 0;
  std::optional<double> per;
  std::optional<double> pfer;
  std::optional<double> phoncov;
};

// Unweighted means over utterances with defined values, per metric.
// Returns no value when every metric is undefined for every utterance.
std::optional<SpeakerReport> aggregate_speaker(
    const std::vector<UtteranceMetrics>& utterances,
    const std::string& speaker_id, int severity);

}  // namespace phoncontrast
