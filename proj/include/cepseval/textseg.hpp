#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace cepseval {

enum class SliceKind { GraphemeCluster, Codepoint, Word };

// Canonical normalization applied before slicing. Composed = NFC,
// Decomposed = NFD.
enum class NormForm { None, Composed, Decomposed };

struct SegmentationScheme {
  SliceKind kind = SliceKind::GraphemeCluster;
  NormForm norm = NormForm::Composed;
  // Character modes only: whether whitespace slices are kept. Word mode
  // always consumes whitespace as separators.
  bool keep_whitespace = true;

  bool operator==(const SegmentationScheme&) const = default;
};

// Tag used in reports, e.g. "grapheme|nfc" or "word|none|strip-ws".
std::string scheme_tag(const SegmentationScheme& scheme);

struct SliceSequence {
  std::vector<std::string> slices;
  SegmentationScheme scheme;

  std::size_t size() const { return slices.size(); }
  bool empty() const { return slices.empty(); }
};

// Applies the canonical normalization form (ICU). None returns the input
// unchanged (still UTF-8 validated).
std::string normalize(std::string_view text, NormForm form);

// Splits text into slices per the scheme: extended grapheme clusters
// (UAX #29), codepoints, or whitespace-delimited words. Total: empty text
// yields an empty sequence. Throws Utf8Error on invalid input.
SliceSequence segment(std::string_view text, const SegmentationScheme& scheme);

// Replaces every precomposed Hangul syllable (U+AC00..U+D7A3) with its 2 or
// 3 conjoining jamo (lead, vowel, optional tail); everything else passes
// through.
std::string hangul_decompose(std::string_view text);

// Recomposes maximal lead+vowel(+tail) jamo runs into precomposed syllables.
// Accepts conjoining jamo (U+1100/U+1161/U+11A8 blocks) and compatibility
// jamo (U+3131..U+3163), where a consonant counts as a tail unless the next
// character is a vowel. Unpairable jamo are left as-is.
std::string hangul_compose(std::string_view text);

// Removes characters in the Unicode punctuation categories (P*).
std::string strip_punctuation(std::string_view text);

bool is_unicode_whitespace(char32_t cp);

}  // namespace cepseval
