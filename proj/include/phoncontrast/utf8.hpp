// Minimal UTF-8 codec plus codepoint classification for IPA strings.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "phoncontrast/errors.hpp"

namespace phoncontrast::utf8 {

// Decodes a UTF-8 string into codepoints. Throws DataError on malformed
// input, reporting the byte offset of the offending sequence.
std::vector<char32_t> decode(const std::string& s);

// Decodes and additionally records the starting byte offset of each
// codepoint (same length as the returned vector).
std::vector<char32_t> decode_with_offsets(const std::string& s,
                                          std::vector<size_t>* offsets);

std::string encode(char32_t cp);
std::string encode(const std::vector<char32_t>& cps);

inline bool is_tie_bar(char32_t cp) { return cp == 0x0361 || cp == 0x035C; }

inline bool is_combining(char32_t cp) {
  return (cp >= 0x0300 && cp <= 0x036F) || (cp >= 0x1AB0 && cp <= 0x1AFF) ||
         (cp >= 0x1DC0 && cp <= 0x1DFF);
}

inline bool is_modifier_letter(char32_t cp) {
  return cp >= 0x02B0 && cp <= 0x02FF;
}

// Suprasegmental marks that the tokenizer strips to the discard log:
// stress, syllable break, prosodic breaks, linking tie, tone letters,
// up/down steps.
inline bool is_suprasegmental(char32_t cp) {
  switch (cp) {
    case 0x02C8:  // primary stress
    case 0x02CC:  // secondary stress
    case 0x002E:  // syllable break
    case 0x007C:  // minor break
    case 0x2016:  // major break
    case 0x203F:  // linking tie
    case 0x2191:  // upstep
    case 0x2193:  // downstep
    case 0xA71B:  // modifier upstep
    case 0xA71C:  // modifier downstep
      return true;
    default:
      return cp >= 0x02E5 && cp <= 0x02E9;  // tone letters
  }
}

// True for codepoints that attach to the preceding base segment.
inline bool is_attaching(char32_t cp) {
  if (is_tie_bar(cp)) return false;
  if (is_combining(cp)) return true;
  return is_modifier_letter(cp) && !is_suprasegmental(cp);
}

}  // namespace phoncontrast::utf8
