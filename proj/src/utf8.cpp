#include "cepseval/utf8.hpp"

#include <string>

#include "cepseval/error.hpp"

namespace cepseval::utf8 {

namespace {

[[noreturn]] void bad(std::size_t offset) {
  throw Utf8Error("invalid UTF-8 sequence at byte offset " + std::to_string(offset));
}

}  // namespace

std::vector<char32_t> decode(std::string_view text) {
  std::vector<char32_t> out;
  out.reserve(text.size());
  std::size_t i = 0;
  const auto* p = reinterpret_cast<const unsigned char*>(text.data());
  const std::size_t n = text.size();
  while (i < n) {
    unsigned char b0 = p[i];
    if (b0 < 0x80) {
      out.push_back(b0);
      ++i;
      continue;
    }
    std::size_t len;
    char32_t cp;
    char32_t min;
    if ((b0 & 0xE0) == 0xC0) {
      len = 2;
      cp = b0 & 0x1F;
      min = 0x80;
    } else if ((b0 & 0xF0) == 0xE0) {
      len = 3;
      cp = b0 & 0x0F;
      min = 0x800;
    } else if ((b0 & 0xF8) == 0xF0) {
      len = 4;
      cp = b0 & 0x07;
      min = 0x10000;
    } else {
      bad(i);
    }
    if (i + len > n) bad(i);
    for (std::size_t k = 1; k < len; ++k) {
      unsigned char bk = p[i + k];
      if ((bk & 0xC0) != 0x80) bad(i);
      cp = (cp << 6) | (bk & 0x3F);
    }
    if (cp < min) bad(i);                       // overlong
    if (cp > 0x10FFFF) bad(i);                  // out of range
    if (cp >= 0xD800 && cp <= 0xDFFF) bad(i);   // surrogate
    out.push_back(cp);
    i += len;
  }
  return out;
}

bool is_valid(std::string_view text) {
  try {
    decode(text);
    return true;
  } catch (const Utf8Error&) {
    return false;
  }
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

std::string encode(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 3);
  for (char32_t cp : cps) append(out, cp);
  return out;
}

}  // namespace cepseval::utf8
