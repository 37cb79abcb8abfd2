// Articulatory feature table: CSV loading, exact lookup, and the
// diacritic-stripping fallback for segments absent from the table.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "phoncontrast/errors.hpp"

namespace phoncontrast {

inline constexpr int kNumFeatures = 24;

// Ternary feature vector, one entry per table column, values in {-1, 0, +1}.
using FeatureVector = std::array<int8_t, kNumFeatures>;

struct DiacriticRule {
  std::string diacritic;  // a single combining mark or modifier letter
  int feature = -1;       // column index
  int8_t value = 0;
};

class FeatureTable {
 public:
  // Loads the segment table and, optionally, the diacritic rule list.
  // Throws DataError on malformed rows, duplicate keys, or non-ternary
  // values; ConfigError if a rule names an unknown feature.
  static FeatureTable load(const std::string& csv_path,
                           const std::string& rules_path = "");

  const std::vector<std::string>& feature_names() const { return names_; }

  // Column index for a feature name, or -1 if absent.
  int feature_index(const std::string& name) const;

  size_t size() const { return entries_.size(); }
  bool contains(const std::string& segment) const {
    return entries_.count(segment) > 0;
  }

  // Exact lookup; nullptr when the segment is not a table key.
  const FeatureVector* find(const std::string& segment) const;

  // Lookup with fallback: on a miss, trailing combining marks and modifier
  // letters are stripped one at a time (rightmost first) until the remainder
  // is a table key, then any diacritic rules matching the stripped marks are
  // re-applied in their original order. Throws UnknownSegmentError when no
  // prefix resolves.
  FeatureVector lookup(const std::string& segment) const;

  bool is_vowel(const FeatureVector& v) const { return v[syl_index_] == 1; }
  int syl_index() const { return syl_index_; }

  // Base codepoints of all single-codepoint vowel entries; used by the
  // tokenizer's diphthong splitter.
  std::unordered_set<char32_t> vowel_bases() const;

  const std::vector<DiacriticRule>& rules() const { return rules_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, FeatureVector> entries_;
  std::vector<DiacriticRule> rules_;
  int syl_index_ = -1;
};

}  // namespace phoncontrast
