#include "phoncontrast/mapping.hpp"

#include <algorithm>
#include <limits>

#include "phoncontrast/distance.hpp"
#include "phoncontrast/utf8.hpp"

namespace phoncontrast {

const char* to_string(MapRule r) {
  switch (r) {
    case MapRule::unique_min:
      return "unique_min";
    case MapRule::base_form:
      return "base_form";
    case MapRule::feature_match_count:
      return "feature_match_count";
    case MapRule::class_priority:
      return "class_priority";
    case MapRule::frequency:
      return "frequency";
    case MapRule::inventory_order:
      return "inventory_order";
  }
  return "?";
}

namespace {

std::string base_form(const std::string& tok) {
  std::vector<char32_t> kept;
  for (char32_t cp : utf8::decode(tok))
    if (!utf8::is_attaching(cp)) kept.push_back(cp);
  return utf8::encode(kept);
}

int agreement_count(const FeatureVector& a, const FeatureVector& b,
                    const std::vector<int>& coords) {
  int n = 0;
  for (int i : coords)
    if (a[i] == b[i]) ++n;
  return n;
}

// Survivors with the maximal value of `score`.
template <typename Score>
void keep_max(std::vector<size_t>* survivors, Score score) {
  double best = -std::numeric_limits<double>::infinity();
  for (size_t idx : *survivors) best = std::max(best, score(idx));
  std::vector<size_t> next;
  for (size_t idx : *survivors)
    if (score(idx) >= best) next.push_back(idx);
  *survivors = std::move(next);
}

const std::vector<std::vector<std::string>>& vowel_priority_groups() {
  static const std::vector<std::vector<std::string>> g = {
      {"hi", "lo"}, {"back"}, {"round"}};
  return g;
}

const std::vector<std::vector<std::string>>& consonant_priority_groups() {
  static const std::vector<std::vector<std::string>> g = {
      {"son", "cont", "delrel", "nas", "lat", "strid"},
      {"ant", "cor", "distr", "lab", "hi", "back"},
      {"voi"}};
  return g;
}

}  // namespace

MappingTrace map_phone(const std::string& phone, const PhonemeInventory& inv,
                       const FeatureTable& table, const LanguageWeights& w) {
  const FeatureVector pv = table.lookup(phone);
  const bool p_vowel = table.is_vowel(pv);

  const std::vector<std::string> candidates = inv.ordered_members();
  std::vector<FeatureVector> cvecs;
  std::vector<double> dist;
  cvecs.reserve(candidates.size());
  double dmin = std::numeric_limits<double>::infinity();
  for (const auto& cand : candidates) {
    const FeatureVector cv = table.lookup(cand);
    const double d =
        feat_distance(pv, cv, w.pair_weights(p_vowel, table.is_vowel(cv)));
    cvecs.push_back(cv);
    dist.push_back(d);
    dmin = std::min(dmin, d);
  }

  MappingTrace trace;
  trace.input = phone;
  std::vector<size_t> survivors;
  for (size_t i = 0; i < candidates.size(); ++i) {
    if (dist[i] <= dmin + kTieEpsilon) {
      survivors.push_back(i);
      trace.tie_set.push_back(candidates[i]);
    }
  }

  auto finish = [&](MapRule rule) {
    trace.rule = rule;
    trace.winner = candidates[survivors.front()];
    trace.distance = dist[survivors.front()];
    return trace;
  };

  if (survivors.size() == 1) return finish(MapRule::unique_min);

  // Base-form identity; a rule that matches nothing leaves the set alone.
  const std::string pbase = base_form(phone);
  std::vector<size_t> by_base;
  for (size_t idx : survivors)
    if (base_form(candidates[idx]) == pbase) by_base.push_back(idx);
  if (!by_base.empty()) survivors = std::move(by_base);
  if (survivors.size() == 1) return finish(MapRule::base_form);

  keep_max(&survivors, [&](size_t idx) {
    const bool c_vowel = table.is_vowel(cvecs[idx]);
    return static_cast<double>(
        agreement_count(pv, cvecs[idx], w.pair_set(p_vowel, c_vowel)));
  });
  if (survivors.size() == 1) return finish(MapRule::feature_match_count);

  const auto& groups =
      p_vowel ? vowel_priority_groups() : consonant_priority_groups();
  for (const auto& group : groups) {
    std::vector<int> coords;
    for (const auto& name : group) {
      const int idx = table.feature_index(name);
      if (idx >= 0) coords.push_back(idx);
    }
    keep_max(&survivors, [&](size_t idx) {
      return static_cast<double>(agreement_count(pv, cvecs[idx], coords));
    });
    if (survivors.size() == 1) return finish(MapRule::class_priority);
  }

  if (!inv.frequencies.empty()) {
    keep_max(&survivors, [&](size_t idx) {
      auto it = inv.frequencies.find(candidates[idx]);
      return it == inv.frequencies.end() ? 0.0 : it->second;
    });
    if (survivors.size() == 1) return finish(MapRule::frequency);
  }

  survivors.resize(1);  // candidates are in inventory declaration order
  return finish(MapRule::inventory_order);
}

MapSequenceResult map_sequence(const SegmentSequence& seq,
                               const PhonemeInventory& inv,
                               const FeatureTable& table,
                               const LanguageWeights& w, bool strict) {
  MapSequenceResult out;
  for (size_t i = 0; i < seq.size(); ++i) {
    try {
      MappingTrace t = map_phone(seq[i], inv, table, w);
      out.mapped.push_back(t.winner);
      out.traces.push_back(std::move(t));
    } catch (const UnknownSegmentError& e) {
      if (strict)
        throw DataError("unresolvable token '" + seq[i] + "' at index " +
                        std::to_string(i));
      out.mapped.push_back(kUnresolvedSentinel);
      out.failures.push_back(std::to_string(i) + ":" + seq[i]);
    }
  }
  return out;
}

}  // namespace phoncontrast
