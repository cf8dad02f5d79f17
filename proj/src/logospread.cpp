#include "cepseval/logospread.hpp"

#include <fstream>

#include <json.hpp>

#include "cepseval/error.hpp"

namespace cepseval {

namespace {

void validate(const AttentionCase& c) {
  const std::string tag = "attention case '" + c.word_id + "': ";
  if (c.rows == 0 || c.cols == 0) throw Error(tag + "empty matrix");
  if (c.matrix.size() != c.rows * c.cols) throw Error(tag + "matrix size mismatch");
  if (c.target_pron_len == 0 || c.target_pron_len > c.rows) {
    throw Error(tag + "target pronunciation length k must be in [1, rows]");
  }
  if (c.span_begin > c.span_end || c.span_end >= c.cols) {
    throw Error(tag + "target span [" + std::to_string(c.span_begin) + ", " +
                std::to_string(c.span_end) + "] out of bounds for " +
                std::to_string(c.cols) + " columns");
  }
  for (double v : c.matrix) {
    if (!(v >= 0.0)) throw Error(tag + "attention entries must be >= 0");
  }
}

}  // namespace

double spread(const AttentionCase& attention) {
  validate(attention);
  double total = 0.0;
  for (double v : attention.matrix) total += v;
  if (total <= 0.0) {
    throw Error("attention case '" + attention.word_id + "': attention mass is zero");
  }
  double masked = 0.0;  // mass inside the zeroed block
  for (std::size_t i = 0; i < attention.target_pron_len; ++i) {
    for (std::size_t j = attention.span_begin; j <= attention.span_end; ++j) {
      masked += attention.at(i, j);
    }
  }
  return (total - masked) / total;
}

SpreadResult spread_corpus(std::span<const AttentionCase> cases) {
  if (cases.empty()) throw Error("spread_corpus: no attention cases");
  SpreadResult result;
  result.per_word.reserve(cases.size());
  double sum = 0.0;
  for (const auto& c : cases) {
    const double s = spread(c);
    result.per_word.emplace_back(c.word_id, s);
    sum += s;
  }
  result.s_token = sum / static_cast<double>(cases.size());
  return result;
}

std::vector<AttentionCase> read_attention_cases(const std::filesystem::path& path,
                                                bool transpose) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open attention cases: " + path.string());

  std::vector<AttentionCase> cases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    nlohmann::json obj;
    try {
      obj = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw IoError(path.string() + ":" + std::to_string(line_no) +
                    ": malformed record: " + e.what());
    }
    const std::string where = path.string() + ":" + std::to_string(line_no) + ": ";
    AttentionCase c;
    try {
      c.word_id = obj.at("word_id").get<std::string>();
      const auto& m = obj.at("matrix");
      c.rows = m.size();
      for (const auto& row : m) {
        if (c.cols == 0) c.cols = row.size();
        if (row.size() != c.cols) throw IoError(where + "ragged matrix rows");
        for (const auto& v : row) c.matrix.push_back(v.get<double>());
      }
      c.target_pron_len = obj.at("k").get<std::size_t>();
      const auto& span = obj.at("span");
      if (!span.is_array() || span.size() != 2) throw IoError(where + "span must be [m, n]");
      c.span_begin = span[0].get<std::size_t>();
      c.span_end = span[1].get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
      throw IoError(where + e.what());
    }
    if (transpose) {
      AttentionCase t = c;
      t.rows = c.cols;
      t.cols = c.rows;
      for (std::size_t i = 0; i < c.rows; ++i) {
        for (std::size_t j = 0; j < c.cols; ++j) {
          t.matrix[j * t.cols + i] = c.matrix[i * c.cols + j];
        }
      }
      c = std::move(t);
    }
    validate(c);
    cases.push_back(std::move(c));
  }
  return cases;
}

}  // namespace cepseval
