#include "cepseval/manifest.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "json_writer.hpp"

#include "cepseval/error.hpp"

namespace cepseval {

namespace {

using nlohmann::json;

[[noreturn]] void line_error(const std::filesystem::path& path, std::size_t line,
                             const std::string& what) {
  throw IoError(path.string() + ":" + std::to_string(line) + ": " + what);
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

std::string require_string(const json& obj, const char* key,
                           const std::filesystem::path& path, std::size_t line) {
  if (!obj.contains(key)) line_error(path, line, std::string("missing required field '") + key + "'");
  if (!obj[key].is_string()) line_error(path, line, std::string("field '") + key + "' must be a string");
  return obj[key].get<std::string>();
}

using detail::JsonWriter;
using detail::quote;

void write_estimate(JsonWriter& w, const std::string& key, const CepsEstimate& est) {
  w.open_object(key);
  w.real_field("lambda", est.lambda);
  w.real_field("tau", est.tau);
  w.real_field("p", est.p);
  w.count_field("n", est.n);
  w.real_field("total_duration_s", est.total_duration_s);
  w.count_field("total_errors", est.total_errors);
  w.bool_field("saturated", est.saturated);
  w.bool_field("clamped", est.clamped);
  w.close_object();
}

CepsEstimate parse_estimate(const json& e) {
  CepsEstimate est;
  est.lambda = e["lambda"].is_null() ? std::nan("") : e["lambda"].get<double>();
  est.tau = e["tau"].is_null() ? std::nan("") : e["tau"].get<double>();
  est.p = e["p"].get<double>();
  est.n = e["n"].get<std::size_t>();
  est.total_duration_s = e["total_duration_s"].get<double>();
  est.total_errors = e["total_errors"].get<std::size_t>();
  est.saturated = e["saturated"].get<bool>();
  est.clamped = e["clamped"].get<bool>();
  return est;
}

}  // namespace

std::vector<Utterance> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest: " + path.string());

  std::vector<Utterance> utts;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank(line)) continue;

    json obj;
    try {
      obj = json::parse(line);  // also rejects invalid UTF-8
    } catch (const json::parse_error& e) {
      line_error(path, line_no, std::string("malformed record: ") + e.what());
    }
    if (!obj.is_object()) line_error(path, line_no, "record is not a JSON object");

    Utterance utt;
    utt.id = require_string(obj, "id", path, line_no);
    utt.reference = require_string(obj, "reference", path, line_no);
    utt.hypothesis = require_string(obj, "hypothesis", path, line_no);
    if (!obj.contains("duration_s")) {
      line_error(path, line_no, "missing required field 'duration_s'");
    }
    if (!obj["duration_s"].is_number()) {
      line_error(path, line_no, "field 'duration_s' must be a number");
    }
    utt.duration_s = obj["duration_s"].get<double>();
    if (utt.duration_s < 0.0) {
      line_error(path, line_no,
                 "utterance '" + utt.id + "': duration_s must be >= 0 (got " +
                     std::to_string(utt.duration_s) + ")");
    }
    if (obj.contains("language") && !obj["language"].is_null()) {
      if (!obj["language"].is_string()) line_error(path, line_no, "field 'language' must be a string");
      utt.language = obj["language"].get<std::string>();
    }
    if (obj.contains("script") && !obj["script"].is_null()) {
      if (!obj["script"].is_string()) line_error(path, line_no, "field 'script' must be a string");
      utt.script = obj["script"].get<std::string>();
    }
    if (!seen_ids.insert(utt.id).second) {
      line_error(path, line_no, "duplicate utterance id '" + utt.id + "'");
    }
    utts.push_back(std::move(utt));
  }
  return utts;
}

void write_manifest(std::span<const Utterance> utts, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open manifest for writing: " + path.string());
  char duration[64];
  for (const auto& utt : utts) {
    std::snprintf(duration, sizeof(duration), "%.6f", utt.duration_s);
    out << "{\"id\": " << quote(utt.id) << ", \"reference\": " << quote(utt.reference)
        << ", \"hypothesis\": " << quote(utt.hypothesis) << ", \"duration_s\": " << duration;
    if (utt.language) out << ", \"language\": " << quote(*utt.language);
    if (utt.script) out << ", \"script\": " << quote(*utt.script);
    out << "}\n";
  }
  if (!out) throw IoError("failed writing manifest: " + path.string());
}

std::string report_to_json(const EvalReport& report) {
  JsonWriter w;
  w.open_object();
  w.string_field("segmentation", report.segmentation);
  w.real_field("cer", report.cer);
  if (report.pooled) {
    write_estimate(w, "pooled", *report.pooled);
  } else {
    w.field("pooled", "null");
  }
  if (report.macro) {
    w.real_field("macro", *report.macro);
  } else {
    w.field("macro", "null");
  }
  w.open_array("per_utterance");
  for (const auto& r : report.per_utterance) {
    w.array_object_open();
    w.string_field("id", r.id);
    w.open_object("edit");
    w.count_field("substitutions", r.edit.substitutions);
    w.count_field("deletions", r.edit.deletions);
    w.count_field("insertions", r.edit.insertions);
    w.count_field("distance", r.edit.distance);
    w.count_field("ref_len", r.edit.ref_len);
    w.count_field("hyp_len", r.edit.hyp_len);
    w.close_object();
    write_estimate(w, "ceps", r.estimate);
    w.close_object();
  }
  w.close_array();
  w.open_array("warnings");
  for (const auto& warning : report.warnings) w.array_string(warning);
  w.close_array();
  w.close_object();
  return w.str() + "\n";
}

void write_report(const EvalReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open report for writing: " + path.string());
  out << report_to_json(report);
  if (!out) throw IoError("failed writing report: " + path.string());
}

EvalReport read_report(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open report: " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw IoError("malformed report " + path.string() + ": " + e.what());
  }
  EvalReport report;
  report.segmentation = doc["segmentation"].get<std::string>();
  report.cer = doc["cer"].get<double>();
  if (!doc["pooled"].is_null()) report.pooled = parse_estimate(doc["pooled"]);
  if (!doc["macro"].is_null()) report.macro = doc["macro"].get<double>();
  for (const auto& r : doc["per_utterance"]) {
    UtteranceResult res;
    res.id = r["id"].get<std::string>();
    const auto& e = r["edit"];
    res.edit.substitutions = e["substitutions"].get<std::size_t>();
    res.edit.deletions = e["deletions"].get<std::size_t>();
    res.edit.insertions = e["insertions"].get<std::size_t>();
    res.edit.distance = e["distance"].get<std::size_t>();
    res.edit.ref_len = e["ref_len"].get<std::size_t>();
    res.edit.hyp_len = e["hyp_len"].get<std::size_t>();
    res.estimate = parse_estimate(r["ceps"]);
    report.per_utterance.push_back(std::move(res));
  }
  for (const auto& warning : doc["warnings"]) {
    report.warnings.push_back(warning.get<std::string>());
  }
  return report;
}

}  // namespace cepseval
