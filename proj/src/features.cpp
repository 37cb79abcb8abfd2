#include "phoncontrast/features.hpp"

#include <fstream>
#include <sstream>

#include "phoncontrast/utf8.hpp"

namespace phoncontrast {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  for (char c : line) {
    if (c == ',') {
      out.push_back(field);
      field.clear();
    } else if (c != '\r') {
      field += c;
    }
  }
  out.push_back(field);
  return out;
}

int8_t parse_ternary(const std::string& s, const std::string& where) {
  if (s == "+") return 1;
  if (s == "-") return -1;
  if (s == "0") return 0;
  throw DataError("non-ternary value '" + s + "' in " + where);
}

}  // namespace

FeatureTable FeatureTable::load(const std::string& csv_path,
                                const std::string& rules_path) {
  std::ifstream in(csv_path);
  if (!in) throw ConfigError("cannot open feature table: " + csv_path);

  FeatureTable t;
  std::string line;
  if (!std::getline(in, line)) throw DataError("empty feature table");
  auto header = split_csv_line(line);
  if (header.size() != kNumFeatures + 1 || header[0] != "ipa")
    throw DataError("feature table header must be 'ipa' plus " +
                    std::to_string(kNumFeatures) + " feature names");
  t.names_.assign(header.begin() + 1, header.end());
  t.syl_index_ = t.feature_index("syl");
  if (t.syl_index_ < 0) throw DataError("feature table lacks 'syl' column");

  size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    auto fields = split_csv_line(line);
    if (fields.size() != kNumFeatures + 1)
      throw DataError("row " + std::to_string(row) + " has " +
                      std::to_string(fields.size()) + " columns, expected " +
                      std::to_string(kNumFeatures + 1));
    FeatureVector v{};
    for (int i = 0; i < kNumFeatures; ++i)
      v[i] = parse_ternary(fields[i + 1],
                           "row " + std::to_string(row) + " ('" + fields[0] + "')");
    if (!t.entries_.emplace(fields[0], v).second)
      throw DataError("duplicate segment key '" + fields[0] + "' at row " +
                      std::to_string(row));
  }
  if (t.entries_.empty()) throw DataError("feature table has no segments");

  if (!rules_path.empty()) {
    std::ifstream rin(rules_path);
    if (!rin) throw ConfigError("cannot open diacritic rules: " + rules_path);
    if (!std::getline(rin, line) ||
        split_csv_line(line) !=
            std::vector<std::string>{"diacritic", "feature", "value"})
      throw DataError("diacritic rules header must be diacritic,feature,value");
    row = 1;
    while (std::getline(rin, line)) {
      ++row;
      if (line.empty()) continue;
      auto fields = split_csv_line(line);
      if (fields.size() != 3)
        throw DataError("diacritic rule row " + std::to_string(row) +
                        " needs 3 columns");
      DiacriticRule r;
      r.diacritic = fields[0];
      r.feature = t.feature_index(fields[1]);
      if (r.feature < 0)
        throw ConfigError("diacritic rule names unknown feature '" +
                          fields[1] + "'");
      r.value = parse_ternary(fields[2], "diacritic rule row " +
                                             std::to_string(row));
      t.rules_.push_back(std::move(r));
    }
  }
  return t;
}

int FeatureTable::feature_index(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

const FeatureVector* FeatureTable::find(const std::string& segment) const {
  auto it = entries_.find(segment);
  return it == entries_.end() ? nullptr : &it->second;
}

FeatureVector FeatureTable::lookup(const std::string& segment) const {
  if (const FeatureVector* hit = find(segment)) return *hit;

  const auto cps = utf8::decode(segment);
  // Trailing attachable marks, innermost first once reversed.
  size_t n_marks = 0;
  while (n_marks < cps.size() &&
         utf8::is_attaching(cps[cps.size() - 1 - n_marks]))
    ++n_marks;
  if (n_marks == 0 || n_marks == cps.size())
    throw UnknownSegmentError(segment);

  std::vector<char32_t> prefix(cps);
  std::vector<char32_t> stripped;  // rightmost first
  const FeatureVector* base = nullptr;
  for (size_t k = 0; k < n_marks; ++k) {
    stripped.push_back(prefix.back());
    prefix.pop_back();
    if ((base = find(utf8::encode(prefix))) != nullptr) break;
  }
  if (!base) throw UnknownSegmentError(segment);

  FeatureVector v = *base;
  // Re-apply rules in the marks' original left-to-right order.
  for (auto it = stripped.rbegin(); it != stripped.rend(); ++it) {
    const std::string mark = utf8::encode(*it);
    for (const DiacriticRule& r : rules_)
      if (r.diacritic == mark) v[r.feature] = r.value;
  }
  return v;
}

std::unordered_set<char32_t> FeatureTable::vowel_bases() const {
  std::unordered_set<char32_t> out;
  for (const auto& [key, v] : entries_) {
    if (v[syl_index_] != 1) continue;
    const auto cps = utf8::decode(key);
    if (cps.size() == 1) out.insert(cps[0]);
  }
  return out;
}

}  // namespace phoncontrast
