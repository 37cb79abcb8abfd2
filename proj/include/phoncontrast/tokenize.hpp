// IPA tokenizer: segments a transcription into base+diacritic tokens,
// handling tie bars, affricate clusters, suprasegmentals, and common
// notation variants.
#pragma once

#include <string>
#include <unordered_set>
#include <vector>

#include "phoncontrast/errors.hpp"

namespace phoncontrast {

using SegmentSequence = std::vector<std::string>;

struct TokenizeResult {
  SegmentSequence tokens;
  // Suprasegmental marks removed from the input, in order of appearance.
  std::vector<std::string> discarded;
};

// Tokenizes a raw IPA string. A token is a base character plus any trailing
// combining marks and modifier letters. Tie bars merge the two joined bases
// into one token and are themselves dropped. Adjacent tokens whose
// concatenation appears in `cluster_whitelist` (tie-bar-less affricates such
// as "ts") are merged. Whitespace separates words and is discarded silently;
// suprasegmentals are stripped into the discard log. A combining mark with
// no preceding base is a DataError reporting the byte offset.
TokenizeResult tokenize(const std::string& raw,
                        const std::vector<std::string>& cluster_whitelist = {});

// Replaces every token consisting of exactly two vowel bases (each with any
// attached marks) by its two halves. `vowel_bases` holds the single
// codepoints that count as vowel qualities.
SegmentSequence split_diphthongs(const SegmentSequence& seq,
                                 const std::unordered_set<char32_t>& vowel_bases);

}  // namespace phoncontrast
