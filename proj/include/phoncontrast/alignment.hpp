// Sequence alignment: weighted Needleman-Wunsch with a substitution gate,
// plus unit-cost Levenshtein alignment and pair rescoring.
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phoncontrast/tokenize.hpp"

namespace phoncontrast {

enum class OpKind { match, substitute, del, ins };

const char* to_string(OpKind k);

struct AlignOp {
  OpKind kind;
  int ref_index;  // -1 for insertions
  int hyp_index;  // -1 for deletions
  double pair_distance;
};

struct Alignment {
  std::vector<AlignOp> ops;
  double total_cost = 0.0;
};

using PairDistanceFn =
    std::function<double(const std::string&, const std::string&)>;

// Global alignment minimizing total cost, where substituting ref[i] by
// hyp[j] costs dist(ref[i], hyp[j]) and is disallowed (infinite) when that
// distance exceeds theta; every gap costs gap_cost. Ties during the
// deterministic backtrace prefer substitution/match over deletion over
// insertion. An op is a match when its pair distance is zero. Deletions and
// insertions carry pair_distance 1.0 regardless of gap_cost.
// Throws ConfigError unless 0 < theta <= 1 and gap_cost > 0.
Alignment align_weighted(const SegmentSequence& ref, const SegmentSequence& hyp,
                         const PairDistanceFn& dist, double theta,
                         double gap_cost = 1.0);

// Unit-cost Levenshtein alignment with the same tie preference. Matches are
// exact string equality; substitutions carry pair_distance 1.0.
Alignment align_uniform(const SegmentSequence& ref, const SegmentSequence& hyp);

// Re-annotates match/substitute ops with dist(ref[i], hyp[j]) and
// reclassifies them: by zero distance when strict_equality is false, by
// string equality otherwise. Gap ops keep pair_distance 1.0.
void rescore(Alignment& al, const SegmentSequence& ref,
             const SegmentSequence& hyp, const PairDistanceFn& dist,
             bool strict_equality = false);

}  // namespace phoncontrast
