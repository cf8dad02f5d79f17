#include "cepseval/textseg.hpp"

#include <array>
#include <memory>

#include <unicode/brkiter.h>
#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include "cepseval/error.hpp"
#include "cepseval/utf8.hpp"

namespace cepseval {

namespace {

// Hangul syllable arithmetic (Unicode ch. 3.12): every syllable in
// U+AC00..U+D7A3 is s_base + (lead*21 + vowel)*28 + tail with 19 leads,
// 21 vowels and 28 tails (tail 0 = none).
constexpr char32_t kSyllableBase = 0xAC00;
constexpr char32_t kLeadBase = 0x1100;
constexpr char32_t kVowelBase = 0x1161;
constexpr char32_t kTailBase = 0x11A7;  // tail index 1 => U+11A8
constexpr int kLeadCount = 19;
constexpr int kVowelCount = 21;
constexpr int kTailCount = 28;
constexpr int kSyllableCount = 11172;

bool is_syllable(char32_t cp) {
  return cp >= kSyllableBase && cp < kSyllableBase + kSyllableCount;
}

// Compatibility jamo (U+3131..U+3163) mapped onto conjoining indices.
// lead/vowel are -1 when the letter has no such role; tail 0 means none.
struct CompatJamo {
  int lead;
  int vowel;
  int tail;
};

constexpr std::array<CompatJamo, 0x3164 - 0x3131> kCompatJamo = {{
    {0, -1, 1},    // U+3131 kiyeok
    {1, -1, 2},    // ssangkiyeok
    {-1, -1, 3},   // kiyeok-sios
    {2, -1, 4},    // nieun
    {-1, -1, 5},   // nieun-cieuc
    {-1, -1, 6},   // nieun-hieuh
    {3, -1, 7},    // tikeut
    {4, -1, 0},    // ssangtikeut (no tail form)
    {5, -1, 8},    // rieul
    {-1, -1, 9},   // rieul-kiyeok
    {-1, -1, 10},  // rieul-mieum
    {-1, -1, 11},  // rieul-pieup
    {-1, -1, 12},  // rieul-sios
    {-1, -1, 13},  // rieul-thieuth
    {-1, -1, 14},  // rieul-phieuph
    {-1, -1, 15},  // rieul-hieuh
    {6, -1, 16},   // mieum
    {7, -1, 17},   // pieup
    {8, -1, 0},    // ssangpieup (no tail form)
    {-1, -1, 18},  // pieup-sios
    {9, -1, 19},   // sios
    {10, -1, 20},  // ssangsios
    {11, -1, 21},  // ieung
    {12, -1, 22},  // cieuc
    {13, -1, 0},   // ssangcieuc (no tail form)
    {14, -1, 23},  // chieuch
    {15, -1, 24},  // khieukh
    {16, -1, 25},  // thieuth
    {17, -1, 26},  // phieuph
    {18, -1, 27},  // hieuh
    {-1, 0, 0},    // U+314F a
    {-1, 1, 0},   {-1, 2, 0},  {-1, 3, 0},  {-1, 4, 0},  {-1, 5, 0},
    {-1, 6, 0},   {-1, 7, 0},  {-1, 8, 0},  {-1, 9, 0},  {-1, 10, 0},
    {-1, 11, 0},  {-1, 12, 0}, {-1, 13, 0}, {-1, 14, 0}, {-1, 15, 0},
    {-1, 16, 0},  {-1, 17, 0}, {-1, 18, 0}, {-1, 19, 0},
    {-1, 20, 0},  // U+3163 i
}};

const CompatJamo* compat_lookup(char32_t cp) {
  if (cp < 0x3131 || cp > 0x3163) return nullptr;
  return &kCompatJamo[cp - 0x3131];
}

// Jamo roles as seen by the composer. Conjoining jamo are unambiguous;
// compatibility consonants can act as lead or tail.
struct JamoRole {
  int lead = -1;
  int vowel = -1;
  int tail = 0;  // 0 = cannot act as tail
};

JamoRole classify_jamo(char32_t cp) {
  JamoRole r;
  if (cp >= kLeadBase && cp < kLeadBase + kLeadCount) {
    r.lead = static_cast<int>(cp - kLeadBase);
  } else if (cp >= kVowelBase && cp < kVowelBase + kVowelCount) {
    r.vowel = static_cast<int>(cp - kVowelBase);
  } else if (cp > kTailBase && cp <= kTailBase + kTailCount - 1) {
    r.tail = static_cast<int>(cp - kTailBase);
  } else if (const CompatJamo* c = compat_lookup(cp)) {
    r.lead = c->lead;
    r.vowel = c->vowel;
    r.tail = c->tail;
  }
  return r;
}

bool is_vowel_jamo(char32_t cp) { return classify_jamo(cp).vowel >= 0; }

const icu::Normalizer2* normalizer(NormForm form) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* n = form == NormForm::Composed
                                  ? icu::Normalizer2::getNFCInstance(status)
                                  : icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status) || n == nullptr) {
    throw Error("ICU normalizer unavailable");
  }
  return n;
}

std::string to_utf8(const icu::UnicodeString& us) {
  std::string out;
  us.toUTF8String(out);
  return out;
}

}  // namespace

bool is_unicode_whitespace(char32_t cp) {
  return u_isUWhiteSpace(static_cast<UChar32>(cp)) != 0;
}

std::string scheme_tag(const SegmentationScheme& scheme) {
  std::string tag;
  switch (scheme.kind) {
    case SliceKind::GraphemeCluster: tag = "grapheme"; break;
    case SliceKind::Codepoint: tag = "codepoint"; break;
    case SliceKind::Word: tag = "word"; break;
  }
  switch (scheme.norm) {
    case NormForm::None: tag += "|none"; break;
    case NormForm::Composed: tag += "|nfc"; break;
    case NormForm::Decomposed: tag += "|nfd"; break;
  }
  if (!scheme.keep_whitespace && scheme.kind != SliceKind::Word) {
    tag += "|strip-ws";
  }
  return tag;
}

std::string normalize(std::string_view text, NormForm form) {
  // Validate first: ICU would silently substitute U+FFFD.
  (void)utf8::decode(text);
  if (form == NormForm::None) return std::string(text);
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString out = normalizer(form)->normalize(us, status);
  if (U_FAILURE(status)) throw Error("Unicode normalization failed");
  return to_utf8(out);
}

namespace {

std::vector<std::string> split_graphemes(const std::string& text) {
  std::vector<std::string> slices;
  icu::UnicodeString us = icu::UnicodeString::fromUTF8(text);
  UErrorCode status = U_ZERO_ERROR;
  std::unique_ptr<icu::BreakIterator> bi(
      icu::BreakIterator::createCharacterInstance(icu::Locale::getRoot(), status));
  if (U_FAILURE(status) || !bi) throw Error("ICU break iterator unavailable");
  bi->setText(us);
  int32_t start = bi->first();
  for (int32_t end = bi->next(); end != icu::BreakIterator::DONE;
       start = end, end = bi->next()) {
    slices.push_back(to_utf8(us.tempSubStringBetween(start, end)));
  }
  return slices;
}

std::vector<std::string> split_codepoints(const std::string& text) {
  std::vector<std::string> slices;
  for (char32_t cp : utf8::decode(text)) {
    std::string s;
    utf8::append(s, cp);
    slices.push_back(std::move(s));
  }
  return slices;
}

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> slices;
  std::string current;
  for (char32_t cp : utf8::decode(text)) {
    if (is_unicode_whitespace(cp)) {
      if (!current.empty()) slices.push_back(std::move(current));
      current.clear();
    } else {
      utf8::append(current, cp);
    }
  }
  if (!current.empty()) slices.push_back(std::move(current));
  return slices;
}

bool is_whitespace_slice(const std::string& slice) {
  for (char32_t cp : utf8::decode(slice)) {
    if (!is_unicode_whitespace(cp)) return false;
  }
  return !slice.empty();
}

}  // namespace

SliceSequence segment(std::string_view text, const SegmentationScheme& scheme) {
  std::string normalized = normalize(text, scheme.norm);
  SliceSequence seq;
  seq.scheme = scheme;
  switch (scheme.kind) {
    case SliceKind::GraphemeCluster: seq.slices = split_graphemes(normalized); break;
    case SliceKind::Codepoint: seq.slices = split_codepoints(normalized); break;
    case SliceKind::Word: seq.slices = split_words(normalized); break;
  }
  if (!scheme.keep_whitespace && scheme.kind != SliceKind::Word) {
    std::erase_if(seq.slices, is_whitespace_slice);
  }
  return seq;
}

std::string hangul_decompose(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    if (!is_syllable(cp)) {
      utf8::append(out, cp);
      continue;
    }
    char32_t index = cp - kSyllableBase;
    char32_t lead = index / (kVowelCount * kTailCount);
    char32_t vowel = (index / kTailCount) % kVowelCount;
    char32_t tail = index % kTailCount;
    utf8::append(out, kLeadBase + lead);
    utf8::append(out, kVowelBase + vowel);
    if (tail != 0) utf8::append(out, kTailBase + tail);
  }
  return out;
}

std::string hangul_compose(std::string_view text) {
  std::vector<char32_t> cps = utf8::decode(text);
  std::string out;
  out.reserve(text.size());
  std::size_t i = 0;
  while (i < cps.size()) {
    JamoRole lead = classify_jamo(cps[i]);
    if (lead.lead < 0 || i + 1 >= cps.size()) {
      utf8::append(out, cps[i]);
      ++i;
      continue;
    }
    JamoRole vowel = classify_jamo(cps[i + 1]);
    if (vowel.vowel < 0) {
      utf8::append(out, cps[i]);
      ++i;
      continue;
    }
    int tail = 0;
    std::size_t consumed = 2;
    if (i + 2 < cps.size()) {
      JamoRole t = classify_jamo(cps[i + 2]);
      // A consonant that could open the next syllable stays a lead when a
      // vowel follows it (input-method rule); otherwise it is this
      // syllable's tail.
      bool next_is_vowel = i + 3 < cps.size() && is_vowel_jamo(cps[i + 3]);
      if (t.tail > 0 && !(t.lead >= 0 && next_is_vowel)) {
        tail = t.tail;
        consumed = 3;
      }
    }
    char32_t syllable = kSyllableBase +
                        (static_cast<char32_t>(lead.lead) * kVowelCount +
                         static_cast<char32_t>(vowel.vowel)) *
                            kTailCount +
                        static_cast<char32_t>(tail);
    utf8::append(out, syllable);
    i += consumed;
  }
  return out;
}

std::string strip_punctuation(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char32_t cp : utf8::decode(text)) {
    if (!u_ispunct(static_cast<UChar32>(cp))) utf8::append(out, cp);
  }
  return out;
}

}  // namespace cepseval
