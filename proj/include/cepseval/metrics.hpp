#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cepseval/editdist.hpp"
#include "cepseval/textseg.hpp"
#include "cepseval/utterance.hpp"

namespace cepseval {

// A CEPS estimate together with the quantities that produced it:
// lambda = (1/tau) * ln(1/(1-p)), tau = total_duration_s / n (pooled case,
// reference tau source), p = total_errors / n.
struct CepsEstimate {
  double lambda = 0.0;
  double tau = 0.0;
  double p = 0.0;
  std::size_t n = 0;  // reference slice count backing p
  double total_duration_s = 0.0;
  std::size_t total_errors = 0;
  // p reached 1; lambda is NaN unless clamping produced a finite value.
  bool saturated = false;
  bool clamped = false;
};

struct ScoringOptions {
  // Cap p at 1 - 1e-6 instead of raising SaturationError; flagged in the
  // estimate and in report warnings.
  bool clamp = false;
  // Which side's slice count divides the duration when computing tau.
  // Reference is the default (p is already reference-normalized);
  // Hypothesis is exposed for experimentation.
  enum class TauSource { Reference, Hypothesis } tau_source = TauSource::Reference;
  unsigned threads = 1;  // utterance-level parallelism for scoring
};

// P(k; lambda, tau) = (lambda*tau)^k e^{-lambda*tau} / k!
double poisson_pmf(std::int64_t k, double lambda, double tau);

// L(lambda) = p*n*log(1 - e^{-lambda*tau}) - (1-p)*n*lambda*tau.
// Requires 0 < p < 1, lambda > 0, tau > 0, n > 0.
double log_likelihood(double lambda, double tau, double p, double n);

// The calibrated-errors-per-second estimator. Throws SaturationError when
// p >= 1 and a domain Error for tau <= 0 or p < 0.
double ceps(double tau, double p);

// distance / ref_len. May legitimately exceed 1; ref_len = 0 is an error.
double cer(const EditSummary& summary);

struct ScoredUtterance {
  std::string id;
  EditSummary edit;
  CepsEstimate estimate;   // per-utterance lambda_i, tau_i, p_i
  std::size_t tau_slices;  // slice count dividing this utterance's duration
};

// Segments and scores each utterance (parallel across utterances when
// opts.threads > 1; output order is manifest order regardless).
// Throws on non-positive durations or empty references, naming the id.
std::vector<ScoredUtterance> score_utterances(std::span<const Utterance> utts,
                                              const SegmentationScheme& scheme,
                                              const ScoringOptions& opts = {});

// "Compute from the sum": tau = sum(l_i)/sum(n_i), p = sum(d_i)/sum(n_i),
// lambda from the closed form. The default aggregation.
CepsEstimate pool(std::span<const ScoredUtterance> scored,
                  const ScoringOptions& opts = {});

// "Compute from each sample": mean of per-utterance lambda_i. Throws
// SaturationError listing ids when any utterance has e_i >= n_i (macro has
// no pooling escape), unless clamping was applied during scoring.
double macro_mean(std::span<const ScoredUtterance> scored);

CepsEstimate score_pooled(std::span<const Utterance> utts,
                          const SegmentationScheme& scheme,
                          const ScoringOptions& opts = {});

double score_macro(std::span<const Utterance> utts, const SegmentationScheme& scheme,
                   const ScoringOptions& opts = {});

}  // namespace cepseval
