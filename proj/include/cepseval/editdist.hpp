#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "cepseval/textseg.hpp"

namespace cepseval {

// Substitution/deletion/insertion counts from one optimal alignment.
// distance == substitutions + deletions + insertions always holds.
struct EditSummary {
  std::size_t substitutions = 0;
  std::size_t deletions = 0;
  std::size_t insertions = 0;
  std::size_t distance = 0;
  std::size_t ref_len = 0;
  std::size_t hyp_len = 0;
};

enum class EditOp : std::uint8_t { Match, Substitute, Delete, Insert };

inline constexpr std::size_t kNoIndex = std::numeric_limits<std::size_t>::max();

struct AlignmentStep {
  EditOp op;
  std::size_t ref_index;  // kNoIndex when the step consumes no reference slice
  std::size_t hyp_index;  // kNoIndex when the step consumes no hypothesis slice
};

struct Alignment {
  std::vector<AlignmentStep> steps;
  std::size_t cost() const;
};

// Full dynamic-programming Levenshtein with unit costs. The S/D/I breakdown
// comes from the backtrace with the fixed tie-break
// match > substitution > deletion > insertion, scanning from the end.
// Throws Error on scheme mismatch.
EditSummary levenshtein(const SliceSequence& ref, const SliceSequence& hyp);

// Bit-parallel (Myers/Hyyro block) distance with common prefix/suffix
// trimming. Always agrees with levenshtein().distance. The breakdown is
// derived directly when the optimal alignment is forced (d = 0 or
// d = |ref_len - hyp_len|) and falls back to the full DP otherwise.
EditSummary levenshtein_fast(const SliceSequence& ref, const SliceSequence& hyp);

// Distance only, bit-parallel. The cheap entry point for callers that do
// not need the breakdown (the simulator, equivalence tests).
std::size_t levenshtein_distance(const SliceSequence& ref, const SliceSequence& hyp);

// Optimal alignment under the same tie-break as levenshtein().
Alignment align(const SliceSequence& ref, const SliceSequence& hyp);

// Applies the alignment to the reference, yielding the hypothesis slices.
// Used to check that an alignment really transforms ref into hyp.
std::vector<std::string> replay(const Alignment& alignment, const SliceSequence& ref,
                                const SliceSequence& hyp);

}  // namespace cepseval
