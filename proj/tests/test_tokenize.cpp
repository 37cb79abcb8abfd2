#include <doctest.h>

#include <numeric>

#include "phoncontrast/tokenize.hpp"
#include "support.hpp"

using namespace phoncontrast;

TEST_SUITE_BEGIN("tokenize");

TEST_CASE("bases absorb trailing marks") {
  const auto r = tokenize("pʰæt̪");
  CHECK(r.tokens == SegmentSequence{"pʰ", "æ", "t̪"});
  CHECK(r.discarded.empty());
}

TEST_CASE("whitespace separates words silently") {
  const auto r = tokenize("pa  ta\tka");
  CHECK(r.tokens == SegmentSequence{"p", "a", "t", "a", "k", "a"});
  CHECK(r.discarded.empty());
}

TEST_CASE("tie bars merge the joined bases and disappear") {
  const auto r = tokenize("t͡ʃad͜za");
  CHECK(r.tokens == SegmentSequence{"tʃ", "a", "dz", "a"});
}

TEST_CASE("tie bar plus trailing mark stays one token") {
  const auto r = tokenize("t͡sʰa");
  CHECK(r.tokens == SegmentSequence{"tsʰ", "a"});
}

TEST_CASE("notation variants are folded") {
  CHECK(tokenize("ga:").tokens == SegmentSequence{"ɡ", "aː"});
  CHECK(tokenize("ʦaʧiʤuʣo").tokens ==
        SegmentSequence{"ts", "a", "tʃ", "i", "dʒ", "u", "dz", "o"});
  CHECK(tokenize("ã").tokens == SegmentSequence{"ã"});
}

TEST_CASE("cluster whitelist merges tie-bar-less affricates") {
  CHECK(tokenize("tʃatsa").tokens ==
        SegmentSequence{"t", "ʃ", "a", "t", "s", "a"});
  CHECK(tokenize("tʃatsa", {"tʃ", "ts"}).tokens ==
        SegmentSequence{"tʃ", "a", "ts", "a"});
  // A merged token does not chain into the next one.
  CHECK(tokenize("tss", {"ts"}).tokens == SegmentSequence{"ts", "s"});
}

TEST_CASE("suprasegmentals go to the discard log") {
  const auto r = tokenize("ˈpæt.kætˌa˥");
  CHECK(r.tokens == SegmentSequence{"p", "æ", "t", "k", "æ", "t", "a"});
  CHECK(r.discarded == std::vector<std::string>{"ˈ", ".", "ˌ", "˥"});
}

TEST_CASE("lone combining mark reports its byte offset") {
  CHECK_THROWS_WITH_AS(tokenize("̃a"),
                       "combining mark with no base at byte offset 0",
                       DataError);
  // After a space the pending base is cleared.
  CHECK_THROWS_AS(tokenize("pa ̃a"), DataError);
}

TEST_CASE("concatenation reproduces the normalized input") {
  const std::string raw = "ˈt͡ʃaː pa";
  const auto r = tokenize(raw);
  const std::string joined = std::accumulate(
      r.tokens.begin(), r.tokens.end(), std::string());
  CHECK(joined == "tʃaːpa");
}

TEST_CASE("malformed UTF-8 is a data error") {
  CHECK_THROWS_AS(tokenize(std::string("\xC3")), DataError);
  CHECK_THROWS_AS(tokenize(std::string("\xFF\xFE")), DataError);
}

TEST_CASE("diphthong splitting needs exactly two vowel qualities") {
  const auto bases = testsupport::table().vowel_bases();
  CHECK(split_diphthongs({"aɪ"}, bases) == SegmentSequence{"a", "ɪ"});
  CHECK(split_diphthongs({"aɪ̯"}, bases) == SegmentSequence{"a", "ɪ̯"});
  CHECK(split_diphthongs({"aːi"}, bases) == SegmentSequence{"aː", "i"});
  CHECK(split_diphthongs({"ts"}, bases) == SegmentSequence{"ts"});
  CHECK(split_diphthongs({"aː"}, bases) == SegmentSequence{"aː"});
  CHECK(split_diphthongs({"a", "pʰ"}, bases) == SegmentSequence{"a", "pʰ"});
}

TEST_SUITE_END();
