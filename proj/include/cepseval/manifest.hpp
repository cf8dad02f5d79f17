#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cepseval/editdist.hpp"
#include "cepseval/metrics.hpp"
#include "cepseval/utterance.hpp"

namespace cepseval {

struct UtteranceResult {
  std::string id;
  EditSummary edit;
  CepsEstimate estimate;
};

// The machine-readable evaluation report. Serialized with a fixed key order
// and 6-decimal reals so identical reports are byte-identical on disk.
struct EvalReport {
  std::string segmentation;  // scheme tag, e.g. "grapheme|nfc"
  double cer = 0.0;          // pooled normalized distance (WER under word slices)
  std::optional<CepsEstimate> pooled;
  std::optional<double> macro;
  std::vector<UtteranceResult> per_utterance;
  std::vector<std::string> warnings;
};

// Reads a JSONL manifest: one object per line with keys `id`, `reference`,
// `hypothesis`, `duration_s` and optional `language`, `script`. Returns
// utterances in file order; text is preserved byte-for-byte after UTF-8
// validation. Errors carry the line number and, where known, the id.
std::vector<Utterance> read_manifest(const std::filesystem::path& path);

// Writes a manifest readable by read_manifest. duration_s is written with
// 6 decimals, so round-trips are exact for durations quantized to 1e-6 s.
void write_manifest(std::span<const Utterance> utts, const std::filesystem::path& path);

// Deterministic serialization: the same report yields byte-identical output.
std::string report_to_json(const EvalReport& report);
void write_report(const EvalReport& report, const std::filesystem::path& path);

// Parses a report written by write_report (tooling and round-trip tests).
EvalReport read_report(const std::filesystem::path& path);

}  // namespace cepseval
