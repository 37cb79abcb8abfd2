#include "phoncontrast/tokenize.hpp"

#include <unordered_set>

#include "phoncontrast/utf8.hpp"

namespace phoncontrast {

namespace {

// Notation variants folded before scanning. Affricate ligatures expand to
// base pairs joined by a tie bar so they come out as single tokens.
void normalize_cp(char32_t cp, std::vector<char32_t>* out) {
  switch (cp) {
    case U'g':
      out->push_back(0x0261);  // script g
      return;
    case U':':
      out->push_back(0x02D0);  // length mark
      return;
    case 0x01DD:               // turned e
      out->push_back(0x0259);  // schwa
      return;
    case 0x02A6:  // ts ligature
      out->insert(out->end(), {U't', 0x0361, U's'});
      return;
    case 0x02A7:  // tesh ligature
      out->insert(out->end(), {U't', 0x0361, 0x0283});
      return;
    case 0x02A3:  // dz ligature
      out->insert(out->end(), {U'd', 0x0361, U'z'});
      return;
    case 0x02A4:  // dezh ligature
      out->insert(out->end(), {U'd', 0x0361, 0x0292});
      return;
    case 0x00E3:  // precomposed nasalized vowels
      out->insert(out->end(), {U'a', 0x0303});
      return;
    case 0x1EBD:
      out->insert(out->end(), {U'e', 0x0303});
      return;
    case 0x0129:
      out->insert(out->end(), {U'i', 0x0303});
      return;
    case 0x00F5:
      out->insert(out->end(), {U'o', 0x0303});
      return;
    case 0x0169:
      out->insert(out->end(), {U'u', 0x0303});
      return;
    default:
      out->push_back(cp);
  }
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' ||
         cp == 0x00A0;
}

}  // namespace

TokenizeResult tokenize(const std::string& raw,
                        const std::vector<std::string>& cluster_whitelist) {
  std::vector<size_t> offsets;
  const auto decoded = utf8::decode_with_offsets(raw, &offsets);

  std::vector<char32_t> cps;
  std::vector<size_t> cp_offset;
  cps.reserve(decoded.size());
  for (size_t i = 0; i < decoded.size(); ++i) {
    const size_t before = cps.size();
    normalize_cp(decoded[i], &cps);
    for (size_t k = before; k < cps.size(); ++k)
      cp_offset.push_back(offsets[i]);
  }

  TokenizeResult result;
  std::string current;
  bool pending_tie = false;
  auto flush = [&] {
    if (!current.empty()) result.tokens.push_back(std::move(current));
    current.clear();
  };

  for (size_t i = 0; i < cps.size(); ++i) {
    const char32_t cp = cps[i];
    if (is_space(cp)) {
      flush();
      pending_tie = false;
      continue;
    }
    if (utf8::is_suprasegmental(cp)) {
      result.discarded.push_back(utf8::encode(cp));
      continue;
    }
    if (utf8::is_tie_bar(cp)) {
      if (current.empty())
        throw DataError("tie bar with no preceding base at byte offset " +
                        std::to_string(cp_offset[i]));
      pending_tie = true;
      continue;
    }
    if (utf8::is_attaching(cp)) {
      if (current.empty())
        throw DataError("combining mark with no base at byte offset " +
                        std::to_string(cp_offset[i]));
      current += utf8::encode(cp);
      continue;
    }
    // Base character.
    if (pending_tie) {
      current += utf8::encode(cp);
      pending_tie = false;
      continue;
    }
    flush();
    current = utf8::encode(cp);
  }
  flush();

  if (!cluster_whitelist.empty()) {
    const std::unordered_set<std::string> merge(cluster_whitelist.begin(),
                                                cluster_whitelist.end());
    SegmentSequence merged;
    for (size_t i = 0; i < result.tokens.size(); ++i) {
      if (i + 1 < result.tokens.size() &&
          merge.count(result.tokens[i] + result.tokens[i + 1])) {
        merged.push_back(result.tokens[i] + result.tokens[i + 1]);
        ++i;
      } else {
        merged.push_back(result.tokens[i]);
      }
    }
    result.tokens = std::move(merged);
  }
  return result;
}

SegmentSequence split_diphthongs(
    const SegmentSequence& seq,
    const std::unordered_set<char32_t>& vowel_bases) {
  SegmentSequence out;
  for (const std::string& tok : seq) {
    const auto cps = utf8::decode(tok);
    // Cluster boundaries: each non-attaching codepoint starts a cluster.
    std::vector<std::vector<char32_t>> clusters;
    for (char32_t cp : cps) {
      if (clusters.empty() || !utf8::is_attaching(cp)) clusters.push_back({});
      clusters.back().push_back(cp);
    }
    if (clusters.size() == 2 && vowel_bases.count(clusters[0][0]) &&
        vowel_bases.count(clusters[1][0])) {
      out.push_back(utf8::encode(clusters[0]));
      out.push_back(utf8::encode(clusters[1]));
    } else {
      out.push_back(tok);
    }
  }
  return out;
}

}  // namespace phoncontrast
