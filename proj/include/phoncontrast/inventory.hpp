// Phoneme inventories, contrastive feature identification, weight vectors,
// and the language-level alignment threshold.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "phoncontrast/distance.hpp"
#include "phoncontrast/features.hpp"

namespace phoncontrast {

enum class SegClass { consonant, vowel, all };

struct ContrastiveOverride {
  std::vector<std::string> consonants;
  std::vector<std::string> vowels;
};

struct PhonemeInventory {
  std::string language;
  std::vector<std::string> consonants;
  std::vector<std::string> vowels;
  // Optional relative frequencies; empty means uniform (the frequency
  // tie-break rule becomes a no-op).
  std::map<std::string, double> frequencies;
  std::optional<ContrastiveOverride> contrastive_override;

  bool is_member(const std::string& tok) const;

  // Inventory members in declaration order, consonants first.
  std::vector<std::string> ordered_members() const;

  // Multi-base-character members (tie-bar-less affricates such as "ts"),
  // used as the tokenizer's cluster whitelist.
  std::vector<std::string> cluster_whitelist() const;
};

// Loads and validates an inventory JSON file. Throws DataError on schema
// violations (missing keys, empty classes, duplicate members).
PhonemeInventory load_inventory(const std::string& path);

// Features taking both + and - somewhere within the given segment class of
// the inventory. Ordered by table column. Every member must resolve through
// the feature table.
std::vector<std::string> identify_contrastive(const PhonemeInventory& inv,
                                              const FeatureTable& table,
                                              SegClass cls);

// Weight 1.0 for the named contrastive features, w_nc elsewhere.
// Throws ConfigError on unknown feature names or w_nc outside [0,1].
WeightVector build_weights(const std::vector<std::string>& contrastive,
                           double w_nc, const FeatureTable& table);

// 90th percentile (inclusive, linearly interpolated) of each consonant's
// nearest-neighbor distance within the inventory's consonant set.
// Throws DataError when fewer than two consonants are present.
double compute_theta(const PhonemeInventory& inv, const FeatureTable& table,
                     const WeightVector& w);

// Per-language weight bundle. Same-class segment pairs are compared under
// their class's contrastive set; cross-class pairs under the union set.
struct LanguageWeights {
  WeightVector consonant{};
  WeightVector vowel{};
  WeightVector unified{};
  std::vector<int> consonant_set;  // feature column indices
  std::vector<int> vowel_set;
  std::vector<int> union_set;
  double theta = 0.0;
  double w_nc = 0.0;
  int syl_index = 0;

  const WeightVector& pair_weights(bool a_vowel, bool b_vowel) const {
    if (a_vowel != b_vowel) return unified;
    return a_vowel ? vowel : consonant;
  }
  const std::vector<int>& pair_set(bool a_vowel, bool b_vowel) const {
    if (a_vowel != b_vowel) return union_set;
    return a_vowel ? vowel_set : consonant_set;
  }
};

// Builds the bundle from the inventory's contrastive override when present,
// otherwise from a scan. Theta is computed under the unified weights unless
// overridden.
LanguageWeights make_language_weights(const PhonemeInventory& inv,
                                      const FeatureTable& table, double w_nc,
                                      std::optional<double> theta_override = {});

// Class-aware pair distance over segment strings; resolves both segments
// through the table and selects weights by segment class.
struct ClassAwareDistance {
  const FeatureTable* table;
  const LanguageWeights* weights;
  double operator()(const std::string& a, const std::string& b) const {
    const FeatureVector va = table->lookup(a);
    const FeatureVector vb = table->lookup(b);
    return feat_distance(va, vb,
                         weights->pair_weights(table->is_vowel(va),
                                               table->is_vowel(vb)));
  }
};

}  // namespace phoncontrast
