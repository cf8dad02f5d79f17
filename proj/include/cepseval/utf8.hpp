#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cepseval::utf8 {

// Strict decoder: rejects overlong encodings, surrogates and values past
// U+10FFFF. Throws Utf8Error with the byte offset of the first bad sequence.
std::vector<char32_t> decode(std::string_view text);

bool is_valid(std::string_view text);

void append(std::string& out, char32_t cp);

std::string encode(const std::vector<char32_t>& cps);

}  // namespace cepseval::utf8
