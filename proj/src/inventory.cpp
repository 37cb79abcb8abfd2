#include "phoncontrast/inventory.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>

#include <json.hpp>

#include "phoncontrast/stats.hpp"
#include "phoncontrast/utf8.hpp"

namespace phoncontrast {

bool PhonemeInventory::is_member(const std::string& tok) const {
  return std::find(consonants.begin(), consonants.end(), tok) !=
             consonants.end() ||
         std::find(vowels.begin(), vowels.end(), tok) != vowels.end();
}

std::vector<std::string> PhonemeInventory::ordered_members() const {
  std::vector<std::string> out = consonants;
  out.insert(out.end(), vowels.begin(), vowels.end());
  return out;
}

std::vector<std::string> PhonemeInventory::cluster_whitelist() const {
  std::vector<std::string> out;
  for (const auto& member : ordered_members()) {
    const auto cps = utf8::decode(member);
    size_t bases = 0;
    for (char32_t cp : cps)
      if (!utf8::is_attaching(cp)) ++bases;
    if (bases >= 2) out.push_back(member);
  }
  return out;
}

namespace {

std::vector<std::string> string_list(const nlohmann::json& j,
                                     const std::string& key,
                                     const std::string& path) {
  if (!j.contains(key) || !j[key].is_array() || j[key].empty())
    throw DataError(path + ": '" + key + "' must be a nonempty array");
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (const auto& item : j[key]) {
    if (!item.is_string())
      throw DataError(path + ": '" + key + "' entries must be strings");
    std::string s = item.get<std::string>();
    if (!seen.insert(s).second)
      throw DataError(path + ": duplicate member '" + s + "' in " + key);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

PhonemeInventory load_inventory(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open inventory: " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw DataError(path + ": invalid JSON: " + e.what());
  }

  PhonemeInventory inv;
  if (!j.contains("language") || !j["language"].is_string())
    throw DataError(path + ": 'language' must be a string");
  inv.language = j["language"].get<std::string>();
  inv.consonants = string_list(j, "consonants", path);
  inv.vowels = string_list(j, "vowels", path);
  for (const auto& c : inv.consonants)
    if (std::find(inv.vowels.begin(), inv.vowels.end(), c) != inv.vowels.end())
      throw DataError(path + ": '" + c + "' listed as consonant and vowel");

  if (j.contains("frequencies")) {
    if (!j["frequencies"].is_object())
      throw DataError(path + ": 'frequencies' must be an object");
    for (const auto& [k, v] : j["frequencies"].items()) {
      if (!v.is_number() || v.get<double>() < 0.0)
        throw DataError(path + ": frequency of '" + k + "' must be >= 0");
      inv.frequencies[k] = v.get<double>();
    }
  }

  if (j.contains("contrastive_override")) {
    const auto& o = j["contrastive_override"];
    if (!o.is_object())
      throw DataError(path + ": 'contrastive_override' must be an object");
    ContrastiveOverride ov;
    ov.consonants = string_list(o, "consonants", path);
    ov.vowels = string_list(o, "vowels", path);
    inv.contrastive_override = std::move(ov);
  }
  return inv;
}

std::vector<std::string> identify_contrastive(const PhonemeInventory& inv,
                                              const FeatureTable& table,
                                              SegClass cls) {
  std::vector<std::string> members;
  if (cls == SegClass::consonant || cls == SegClass::all)
    members.insert(members.end(), inv.consonants.begin(),
                   inv.consonants.end());
  if (cls == SegClass::vowel || cls == SegClass::all)
    members.insert(members.end(), inv.vowels.begin(), inv.vowels.end());

  std::array<bool, kNumFeatures> has_plus{}, has_minus{};
  for (const auto& m : members) {
    const FeatureVector v = table.lookup(m);
    for (int i = 0; i < kNumFeatures; ++i) {
      if (v[i] == 1) has_plus[i] = true;
      if (v[i] == -1) has_minus[i] = true;
    }
  }
  std::vector<std::string> out;
  for (int i = 0; i < kNumFeatures; ++i)
    if (has_plus[i] && has_minus[i]) out.push_back(table.feature_names()[i]);
  return out;
}

WeightVector build_weights(const std::vector<std::string>& contrastive,
                           double w_nc, const FeatureTable& table) {
  if (w_nc < 0.0 || w_nc > 1.0)
    throw ConfigError("w_nc must lie in [0,1]");
  WeightVector w;
  w.fill(w_nc);
  for (const auto& name : contrastive) {
    const int idx = table.feature_index(name);
    if (idx < 0) throw ConfigError("unknown feature name '" + name + "'");
    w[idx] = 1.0;
  }
  return w;
}

double compute_theta(const PhonemeInventory& inv, const FeatureTable& table,
                     const WeightVector& w) {
  if (inv.consonants.size() < 2)
    throw DataError("inventory '" + inv.language +
                    "' needs at least two consonants for theta");
  std::vector<FeatureVector> vecs;
  vecs.reserve(inv.consonants.size());
  for (const auto& c : inv.consonants) vecs.push_back(table.lookup(c));

  std::vector<double> nn;
  nn.reserve(vecs.size());
  for (size_t i = 0; i < vecs.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < vecs.size(); ++j) {
      if (i == j) continue;
      best = std::min(best, feat_distance(vecs[i], vecs[j], w));
    }
    nn.push_back(best);
  }
  return percentile_inclusive(std::move(nn), 0.9);
}

namespace {

std::vector<int> name_indices(const std::vector<std::string>& names,
                              const FeatureTable& table) {
  std::vector<int> out;
  for (const auto& n : names) {
    const int idx = table.feature_index(n);
    if (idx < 0) throw ConfigError("unknown feature name '" + n + "'");
    out.push_back(idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

LanguageWeights make_language_weights(const PhonemeInventory& inv,
                                      const FeatureTable& table, double w_nc,
                                      std::optional<double> theta_override) {
  for (const auto& m : inv.ordered_members()) table.lookup(m);

  std::vector<std::string> cons_names, vowel_names;
  if (inv.contrastive_override) {
    cons_names = inv.contrastive_override->consonants;
    vowel_names = inv.contrastive_override->vowels;
  } else {
    cons_names = identify_contrastive(inv, table, SegClass::consonant);
    vowel_names = identify_contrastive(inv, table, SegClass::vowel);
  }

  LanguageWeights lw;
  lw.w_nc = w_nc;
  lw.syl_index = table.syl_index();
  lw.consonant = build_weights(cons_names, w_nc, table);
  lw.vowel = build_weights(vowel_names, w_nc, table);
  lw.consonant_set = name_indices(cons_names, table);
  lw.vowel_set = name_indices(vowel_names, table);

  std::set<std::string> union_names(cons_names.begin(), cons_names.end());
  union_names.insert(vowel_names.begin(), vowel_names.end());
  const std::vector<std::string> union_list(union_names.begin(),
                                            union_names.end());
  lw.unified = build_weights(union_list, w_nc, table);
  lw.union_set = name_indices(union_list, table);

  if (theta_override) {
    if (*theta_override <= 0.0 || *theta_override > 1.0)
      throw ConfigError("theta override must lie in (0,1]");
    lw.theta = *theta_override;
  } else {
    lw.theta = compute_theta(inv, table, lw.unified);
  }
  return lw;
}

}  // namespace phoncontrast
