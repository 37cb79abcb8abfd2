#include "phoncontrast/metrics.hpp"

#include <set>

namespace phoncontrast {

MetricCounts count_ops(const Alignment& al, long n_ref) {
  MetricCounts c;
  c.n_ref = n_ref;
  for (const AlignOp& op : al.ops) {
    switch (op.kind) {
      case OpKind::match:
        ++c.matches;
        break;
      case OpKind::substitute:
        ++c.substitutions;
        break;
      case OpKind::del:
        ++c.deletions;
        break;
      case OpKind::ins:
        ++c.insertions;
        break;
    }
  }
  c.n_aligned = static_cast<long>(al.ops.size());
  return c;
}

std::optional<double> per(const Alignment& al, long n_ref) {
  if (n_ref <= 0) return std::nullopt;
  const MetricCounts c = count_ops(al, n_ref);
  return static_cast<double>(c.substitutions + c.insertions + c.deletions) /
         static_cast<double>(n_ref);
}

std::optional<double> pfer(const Alignment& al) {
  if (al.ops.empty()) return std::nullopt;
  double sum = 0.0;
  for (const AlignOp& op : al.ops) sum += op.pair_distance;
  return sum / static_cast<double>(al.ops.size());
}

std::optional<double> pfer_class(const Alignment& al,
                                 const SegmentSequence& ref,
                                 const SegmentSequence& hyp, SegClass cls,
                                 const FeatureTable& table) {
  if (cls == SegClass::all) return pfer(al);
  const bool want_vowel = cls == SegClass::vowel;
  double sum = 0.0;
  long n = 0;
  for (const AlignOp& op : al.ops) {
    // Insertions are classed by their hypothesis segment, everything else
    // by its reference segment.
    const std::string& seg =
        op.kind == OpKind::ins ? hyp[op.hyp_index] : ref[op.ref_index];
    if (table.is_vowel(table.lookup(seg)) != want_vowel) continue;
    sum += op.pair_distance;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

std::optional<double> phoncov(const SegmentSequence& ref,
                              const SegmentSequence& hyp) {
  const std::set<std::string> ref_set(ref.begin(), ref.end());
  if (ref_set.empty()) return std::nullopt;
  const std::set<std::string> hyp_set(hyp.begin(), hyp.end());
  long covered = 0;
  for (const auto& tok : ref_set)
    if (hyp_set.count(tok)) ++covered;
  return 100.0 * static_cast<double>(covered) /
         static_cast<double>(ref_set.size());
}

std::optional<SpeakerReport> aggregate_speaker(
    const std::vector<UtteranceMetrics>& utterances,
    const std::string& speaker_id, int severity) {
  SpeakerReport rep;
  rep.speaker_id = speaker_id;
  rep.severity = severity;
  rep.n_utterances = static_cast<int>(utterances.size());

  double per_sum = 0.0, pfer_sum = 0.0, cov_sum = 0.0;
  int per_n = 0, pfer_n = 0, cov_n = 0;
  for (const UtteranceMetrics& u : utterances) {
    if (u.per) {
      per_sum += *u.per;
      ++per_n;
    } else {
      ++rep.per_undefined;
    }
    if (u.pfer) {
      pfer_sum += *u.pfer;
      ++pfer_n;
    } else {
      ++rep.pfer_undefined;
    }
    if (u.phoncov) {
      cov_sum += *u.phoncov;
      ++cov_n;
    } else {
      ++rep.phoncov_undefined;
    }
  }
  if (per_n == 0 && pfer_n == 0 && cov_n == 0) return std::nullopt;
  if (per_n > 0) rep.per = per_sum / per_n;
  if (pfer_n > 0) rep.pfer = pfer_sum / pfer_n;
  if (cov_n > 0) rep.phoncov = cov_sum / cov_n;
  return rep;
}

}  // namespace phoncontrast
