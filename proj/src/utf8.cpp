#include "phoncontrast/utf8.hpp"

namespace phoncontrast::utf8 {

namespace {

[[noreturn]] void bad(size_t offset) {
  throw DataError("malformed UTF-8 at byte offset " + std::to_string(offset));
}

}  // namespace

std::vector<char32_t> decode_with_offsets(const std::string& s,
                                          std::vector<size_t>* offsets) {
  std::vector<char32_t> out;
  out.reserve(s.size());
  if (offsets) offsets->clear();
  size_t i = 0;
  while (i < s.size()) {
    const unsigned char c0 = static_cast<unsigned char>(s[i]);
    char32_t cp = 0;
    size_t len = 0;
    if (c0 < 0x80) {
      cp = c0;
      len = 1;
    } else if ((c0 & 0xE0) == 0xC0) {
      cp = c0 & 0x1F;
      len = 2;
    } else if ((c0 & 0xF0) == 0xE0) {
      cp = c0 & 0x0F;
      len = 3;
    } else if ((c0 & 0xF8) == 0xF0) {
      cp = c0 & 0x07;
      len = 4;
    } else {
      bad(i);
    }
    if (i + len > s.size()) bad(i);
    for (size_t k = 1; k < len; ++k) {
      const unsigned char c = static_cast<unsigned char>(s[i + k]);
      if ((c & 0xC0) != 0x80) bad(i);
      cp = (cp << 6) | (c & 0x3F);
    }
    if (len == 2 && cp < 0x80) bad(i);
    if (len == 3 && cp < 0x800) bad(i);
    if (len == 4 && cp < 0x10000) bad(i);
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) bad(i);
    if (offsets) offsets->push_back(i);
    out.push_back(cp);
    i += len;
  }
  return out;
}

std::vector<char32_t> decode(const std::string& s) {
  return decode_with_offsets(s, nullptr);
}

std::string encode(char32_t cp) {
  std::string out;
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
  return out;
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  for (char32_t cp : cps) out += encode(cp);
  return out;
}

}  // namespace phoncontrast::utf8
