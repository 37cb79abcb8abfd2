#include "phoncontrast/alignment.hpp"

#include <limits>

#include "phoncontrast/distance.hpp"

namespace phoncontrast {

const char* to_string(OpKind k) {
  switch (k) {
    case OpKind::match:
      return "match";
    case OpKind::substitute:
      return "substitute";
    case OpKind::del:
      return "delete";
    case OpKind::ins:
      return "insert";
  }
  return "?";
}

namespace {

enum class Step : uint8_t { none, diag, up, left };

Alignment align_core(const SegmentSequence& ref, const SegmentSequence& hyp,
                     const PairDistanceFn& dist, double theta,
                     double gap_cost) {
  const size_t n = ref.size(), m = hyp.size();
  const double inf = std::numeric_limits<double>::infinity();

  std::vector<double> cost((n + 1) * (m + 1), 0.0);
  std::vector<Step> step((n + 1) * (m + 1), Step::none);
  std::vector<double> sub((n + 1) * (m + 1), 0.0);
  auto at = [m](size_t i, size_t j) { return i * (m + 1) + j; };

  for (size_t i = 1; i <= n; ++i) {
    cost[at(i, 0)] = static_cast<double>(i) * gap_cost;
    step[at(i, 0)] = Step::up;
  }
  for (size_t j = 1; j <= m; ++j) {
    cost[at(0, j)] = static_cast<double>(j) * gap_cost;
    step[at(0, j)] = Step::left;
  }

  for (size_t i = 1; i <= n; ++i) {
    for (size_t j = 1; j <= m; ++j) {
      double d = dist(ref[i - 1], hyp[j - 1]);
      const double diag =
          d > theta + kTieEpsilon ? inf : cost[at(i - 1, j - 1)] + d;
      const double up = cost[at(i - 1, j)] + gap_cost;
      const double left = cost[at(i, j - 1)] + gap_cost;
      // Tie preference: substitution/match, then deletion, then insertion.
      double best = diag;
      Step s = Step::diag;
      if (up < best - kTieEpsilon) {
        best = up;
        s = Step::up;
      }
      if (left < best - kTieEpsilon) {
        best = left;
        s = Step::left;
      }
      cost[at(i, j)] = best;
      step[at(i, j)] = s;
      sub[at(i, j)] = d;
    }
  }

  Alignment al;
  al.total_cost = cost[at(n, m)];
  size_t i = n, j = m;
  while (i > 0 || j > 0) {
    switch (step[at(i, j)]) {
      case Step::diag: {
        const double d = sub[at(i, j)];
        al.ops.push_back({d <= kTieEpsilon ? OpKind::match : OpKind::substitute,
                          static_cast<int>(i - 1), static_cast<int>(j - 1), d});
        --i;
        --j;
        break;
      }
      case Step::up:
        al.ops.push_back({OpKind::del, static_cast<int>(i - 1), -1, 1.0});
        --i;
        break;
      case Step::left:
        al.ops.push_back({OpKind::ins, -1, static_cast<int>(j - 1), 1.0});
        --j;
        break;
      case Step::none:
        throw Error("alignment backtrace corrupted");
    }
  }
  std::reverse(al.ops.begin(), al.ops.end());
  return al;
}

}  // namespace

Alignment align_weighted(const SegmentSequence& ref, const SegmentSequence& hyp,
                         const PairDistanceFn& dist, double theta,
                         double gap_cost) {
  if (theta <= 0.0 || theta > 1.0)
    throw ConfigError("theta must lie in (0,1]");
  if (gap_cost <= 0.0) throw ConfigError("gap cost must be positive");
  return align_core(ref, hyp, dist, theta, gap_cost);
}

Alignment align_uniform(const SegmentSequence& ref,
                        const SegmentSequence& hyp) {
  const auto binary = [](const std::string& a, const std::string& b) {
    return a == b ? 0.0 : 1.0;
  };
  return align_core(ref, hyp, binary, 1.0, 1.0);
}

void rescore(Alignment& al, const SegmentSequence& ref,
             const SegmentSequence& hyp, const PairDistanceFn& dist,
             bool strict_equality) {
  for (AlignOp& op : al.ops) {
    if (op.kind != OpKind::match && op.kind != OpKind::substitute) continue;
    const std::string& r = ref[op.ref_index];
    const std::string& h = hyp[op.hyp_index];
    op.pair_distance = dist(r, h);
    const bool is_match =
        strict_equality ? r == h : op.pair_distance <= kTieEpsilon;
    op.kind = is_match ? OpKind::match : OpKind::substitute;
  }
}

}  // namespace phoncontrast
