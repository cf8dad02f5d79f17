#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cepseval {

// One word occurrence: attention matrix A (rows = output positions,
// columns = input positions) plus the block to mask — the first
// target_pron_len rows crossed with the inclusive column span
// [span_begin, span_end] of the target word.
struct AttentionCase {
  std::string word_id;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> matrix;  // row-major, rows * cols, entries >= 0
  std::size_t target_pron_len = 0;
  std::size_t span_begin = 0;
  std::size_t span_end = 0;

  double at(std::size_t i, std::size_t j) const { return matrix[i * cols + j]; }
};

// Attention spread S_w = sum(M o A) / sum(A) where M zeroes the target
// block. 0 = all mass on the target (phonographic), 1 = none.
double spread(const AttentionCase& attention);

struct SpreadResult {
  std::vector<std::pair<std::string, double>> per_word;  // (word_id, S_w)
  double s_token = 0.0;                                  // unweighted mean
};

SpreadResult spread_corpus(std::span<const AttentionCase> cases);

// JSONL, one case per line:
//   {"word_id": "...", "matrix": [[...], ...], "k": 2, "span": [m, n]}
// With transpose=true the matrix axes are swapped on load (for dumps whose
// rows are input positions).
std::vector<AttentionCase> read_attention_cases(const std::filesystem::path& path,
                                                bool transpose = false);

}  // namespace cepseval
