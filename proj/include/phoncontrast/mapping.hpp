// Mapping of language-universal phones onto a target inventory, with a
// deterministic tie-break cascade and per-token traces.
#pragma once

#include <string>
#include <vector>

#include "phoncontrast/inventory.hpp"
#include "phoncontrast/tokenize.hpp"

namespace phoncontrast {

enum class MapRule {
  unique_min,
  base_form,
  feature_match_count,
  class_priority,
  frequency,
  inventory_order,
};

const char* to_string(MapRule r);

struct MappingTrace {
  std::string input;
  std::string winner;
  double distance = 0.0;
  // All inventory members within kTieEpsilon of the minimum distance.
  std::vector<std::string> tie_set;
  MapRule rule = MapRule::unique_min;
};

// Maps one phone to its nearest inventory member under the class-aware
// weights. Ties are resolved by, in order: base-form identity after
// stripping all attached marks; highest exact-agreement count on the
// pair-relevant contrastive coordinates; class-priority agreement (vowels:
// height, backness, roundness; consonants: manner, place, voicing);
// inventory frequency; inventory declaration order.
// Throws UnknownSegmentError when the phone does not resolve.
MappingTrace map_phone(const std::string& phone, const PhonemeInventory& inv,
                       const FeatureTable& table, const LanguageWeights& w);

inline constexpr const char* kUnresolvedSentinel = "\xEF\xBF\xBD";  // U+FFFD

struct MapSequenceResult {
  SegmentSequence mapped;
  std::vector<MappingTrace> traces;
  // "index:token" for each unresolvable input (lenient mode only).
  std::vector<std::string> failures;
};

// Maps a token sequence element-wise. In strict mode the first unresolvable
// token aborts with a DataError naming the index; in lenient mode it is
// replaced by kUnresolvedSentinel and logged.
MapSequenceResult map_sequence(const SegmentSequence& seq,
                               const PhonemeInventory& inv,
                               const FeatureTable& table,
                               const LanguageWeights& w, bool strict);

}  // namespace phoncontrast
