#include "cepseval/editdist.hpp"

#include <algorithm>
#include <string_view>
#include <unordered_map>

#include "cepseval/error.hpp"

namespace cepseval {

namespace {

void check_schemes(const SliceSequence& ref, const SliceSequence& hyp) {
  if (!(ref.scheme == hyp.scheme)) {
    throw Error("segmentation scheme mismatch between reference ('" +
                scheme_tag(ref.scheme) + "') and hypothesis ('" +
                scheme_tag(hyp.scheme) + "')");
  }
}

// Slices compared by exact string equality; map them to dense ids once so
// the DP and the bit-vector path compare integers.
struct IdSequences {
  std::vector<std::uint32_t> ref;
  std::vector<std::uint32_t> hyp;
};

IdSequences to_ids(const SliceSequence& ref, const SliceSequence& hyp) {
  IdSequences out;
  out.ref.reserve(ref.size());
  out.hyp.reserve(hyp.size());
  std::unordered_map<std::string_view, std::uint32_t> ids;
  ids.reserve(ref.size() + hyp.size());
  auto lookup = [&ids](const std::string& s) {
    return ids.try_emplace(std::string_view(s), static_cast<std::uint32_t>(ids.size()))
        .first->second;
  };
  for (const auto& s : ref.slices) out.ref.push_back(lookup(s));
  for (const auto& s : hyp.slices) out.hyp.push_back(lookup(s));
  return out;
}

// Guard for the quadratic paths; the bit-parallel distance has no such cap.
constexpr std::size_t kMaxDpCells = std::size_t{1} << 28;

struct DpResult {
  EditSummary summary;
  Alignment alignment;
};

DpResult dp_levenshtein(const std::vector<std::uint32_t>& a,
                        const std::vector<std::uint32_t>& b, bool want_steps) {
  const std::size_t m = a.size(), n = b.size();
  if ((m + 1) * (n + 1) > kMaxDpCells) {
    throw Error("sequences too long for the exact S/D/I breakdown (" +
                std::to_string(m) + " x " + std::to_string(n) +
                "); use levenshtein_distance for distance only");
  }
  const std::size_t stride = n + 1;
  std::vector<std::uint32_t> d((m + 1) * stride);
  for (std::size_t j = 0; j <= n; ++j) d[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    d[i * stride] = static_cast<std::uint32_t>(i);
    const std::uint32_t ai = a[i - 1];
    const std::uint32_t* prev = &d[(i - 1) * stride];
    std::uint32_t* cur = &d[i * stride];
    for (std::size_t j = 1; j <= n; ++j) {
      std::uint32_t best = prev[j - 1] + (ai != b[j - 1]);
      best = std::min(best, prev[j] + 1);
      best = std::min(best, cur[j - 1] + 1);
      cur[j] = best;
    }
  }

  DpResult res;
  res.summary.ref_len = m;
  res.summary.hyp_len = n;
  res.summary.distance = d[m * stride + n];

  // Backtrace from (m, n) with the fixed tie-break
  // match > substitution > deletion > insertion.
  std::size_t i = m, j = n;
  while (i > 0 || j > 0) {
    const std::uint32_t cur = d[i * stride + j];
    if (i > 0 && j > 0 && a[i - 1] == b[j - 1] && d[(i - 1) * stride + j - 1] == cur) {
      --i;
      --j;
      if (want_steps) res.alignment.steps.push_back({EditOp::Match, i, j});
    } else if (i > 0 && j > 0 && d[(i - 1) * stride + j - 1] + 1 == cur) {
      ++res.summary.substitutions;
      --i;
      --j;
      if (want_steps) res.alignment.steps.push_back({EditOp::Substitute, i, j});
    } else if (i > 0 && d[(i - 1) * stride + j] + 1 == cur) {
      ++res.summary.deletions;
      --i;
      if (want_steps) res.alignment.steps.push_back({EditOp::Delete, i, kNoIndex});
    } else {
      ++res.summary.insertions;
      --j;
      if (want_steps) res.alignment.steps.push_back({EditOp::Insert, kNoIndex, j});
    }
  }
  if (want_steps) std::reverse(res.alignment.steps.begin(), res.alignment.steps.end());
  return res;
}

// Myers/Hyyro bit-parallel Levenshtein over 64-bit blocks of the pattern.
// Score is tracked at the pattern's last row; per-block carries chain
// through bit 63. Padding bits in the last block cannot influence lower
// bits (every operation's bit k depends only on bits <= k).
std::size_t myers_distance(const std::vector<std::uint32_t>& pat,
                           const std::vector<std::uint32_t>& txt) {
  const std::size_t m = pat.size(), n = txt.size();
  if (m == 0) return n;
  if (n == 0) return m;
  const std::size_t words = (m + 63) / 64;
  std::vector<std::unordered_map<std::uint32_t, std::uint64_t>> peq(words);
  for (std::size_t i = 0; i < m; ++i) {
    peq[i >> 6][pat[i]] |= std::uint64_t{1} << (i & 63);
  }
  std::vector<std::uint64_t> vp(words, ~std::uint64_t{0});
  std::vector<std::uint64_t> vn(words, 0);
  std::int64_t score = static_cast<std::int64_t>(m);
  const std::uint64_t last_mask = std::uint64_t{1} << ((m - 1) & 63);
  const std::uint64_t high = std::uint64_t{1} << 63;

  for (std::size_t j = 0; j < n; ++j) {
    const std::uint32_t c = txt[j];
    int hin = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t eq = 0;
      const auto& block = peq[w];
      if (auto it = block.find(c); it != block.end()) eq = it->second;
      const std::uint64_t pv = vp[w];
      const std::uint64_t mv = vn[w];
      const std::uint64_t xv = eq | mv;
      if (hin < 0) eq |= 1;
      const std::uint64_t xh = (((eq & pv) + pv) ^ pv) | eq;
      std::uint64_t ph = mv | ~(xh | pv);
      std::uint64_t mh = pv & xh;
      if (w == words - 1) {
        if (ph & last_mask) {
          ++score;
        } else if (mh & last_mask) {
          --score;
        }
      }
      int hout = 0;
      if (ph & high) {
        hout = 1;
      } else if (mh & high) {
        hout = -1;
      }
      ph <<= 1;
      mh <<= 1;
      if (hin < 0) mh |= 1;
      if (hin > 0) ph |= 1;
      vp[w] = mh | ~(xv | ph);
      vn[w] = ph & xv;
      hin = hout;
    }
  }
  return static_cast<std::size_t>(score);
}

std::size_t common_prefix(const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b) {
  const std::size_t lim = std::min(a.size(), b.size());
  std::size_t k = 0;
  while (k < lim && a[k] == b[k]) ++k;
  return k;
}

std::size_t common_suffix(const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& b, std::size_t skip) {
  std::size_t k = 0;
  const std::size_t lim = std::min(a.size(), b.size()) - skip;
  while (k < lim && a[a.size() - 1 - k] == b[b.size() - 1 - k]) ++k;
  return k;
}

std::size_t trimmed_distance(const std::vector<std::uint32_t>& a,
                             const std::vector<std::uint32_t>& b) {
  // Shared prefixes/suffixes never change the distance; identical
  // sequences resolve in O(n) here.
  const std::size_t pre = common_prefix(a, b);
  const std::size_t suf = common_suffix(a, b, pre);
  std::vector<std::uint32_t> core_a(a.begin() + pre, a.end() - suf);
  std::vector<std::uint32_t> core_b(b.begin() + pre, b.end() - suf);
  if (core_a.empty()) return core_b.size();
  if (core_b.empty()) return core_a.size();
  return myers_distance(core_a, core_b);
}

}  // namespace

std::size_t Alignment::cost() const {
  std::size_t c = 0;
  for (const auto& s : steps) c += s.op != EditOp::Match;
  return c;
}

EditSummary levenshtein(const SliceSequence& ref, const SliceSequence& hyp) {
  check_schemes(ref, hyp);
  IdSequences ids = to_ids(ref, hyp);
  return dp_levenshtein(ids.ref, ids.hyp, /*want_steps=*/false).summary;
}

std::size_t levenshtein_distance(const SliceSequence& ref, const SliceSequence& hyp) {
  check_schemes(ref, hyp);
  IdSequences ids = to_ids(ref, hyp);
  return trimmed_distance(ids.ref, ids.hyp);
}

EditSummary levenshtein_fast(const SliceSequence& ref, const SliceSequence& hyp) {
  check_schemes(ref, hyp);
  IdSequences ids = to_ids(ref, hyp);
  const std::size_t m = ids.ref.size(), n = ids.hyp.size();
  const std::size_t d = trimmed_distance(ids.ref, ids.hyp);

  EditSummary out;
  out.ref_len = m;
  out.hyp_len = n;
  out.distance = d;
  const std::size_t len_gap = m > n ? m - n : n - m;
  if (d == len_gap) {
    // Forced: deletions - insertions = m - n holds for every alignment, so
    // d = S + 2*min(D,I) + |m-n| pins S = min(D,I) = 0.
    out.deletions = m > n ? m - n : 0;
    out.insertions = n > m ? n - m : 0;
    return out;
  }
  EditSummary exact = dp_levenshtein(ids.ref, ids.hyp, /*want_steps=*/false).summary;
  return exact;
}

Alignment align(const SliceSequence& ref, const SliceSequence& hyp) {
  check_schemes(ref, hyp);
  IdSequences ids = to_ids(ref, hyp);
  return dp_levenshtein(ids.ref, ids.hyp, /*want_steps=*/true).alignment;
}

std::vector<std::string> replay(const Alignment& alignment, const SliceSequence& ref,
                                const SliceSequence& hyp) {
  std::vector<std::string> out;
  for (const auto& step : alignment.steps) {
    switch (step.op) {
      case EditOp::Match:
        if (step.ref_index >= ref.size() || step.hyp_index >= hyp.size() ||
            ref.slices[step.ref_index] != hyp.slices[step.hyp_index]) {
          throw Error("alignment replay: match step on unequal slices");
        }
        out.push_back(ref.slices[step.ref_index]);
        break;
      case EditOp::Substitute:
      case EditOp::Insert:
        if (step.hyp_index >= hyp.size()) {
          throw Error("alignment replay: step past hypothesis end");
        }
        out.push_back(hyp.slices[step.hyp_index]);
        break;
      case EditOp::Delete:
        break;
    }
  }
  return out;
}

}  // namespace cepseval
