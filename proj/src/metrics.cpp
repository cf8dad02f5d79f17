#include "cepseval/metrics.hpp"

#include <cmath>
#include <limits>
#include <thread>

#include "cepseval/error.hpp"

namespace cepseval {

namespace {

constexpr double kClampP = 1.0 - 1e-6;

double nan_value() { return std::numeric_limits<double>::quiet_NaN(); }

}  // namespace

double poisson_pmf(std::int64_t k, double lambda, double tau) {
  if (k < 0) throw Error("poisson_pmf: k must be >= 0");
  if (!(lambda >= 0.0)) throw Error("poisson_pmf: lambda must be >= 0");
  if (!(tau > 0.0)) throw Error("poisson_pmf: tau must be > 0");
  const double rate = lambda * tau;
  if (rate == 0.0) return k == 0 ? 1.0 : 0.0;
  return std::exp(static_cast<double>(k) * std::log(rate) - rate -
                  std::lgamma(static_cast<double>(k) + 1.0));
}

double log_likelihood(double lambda, double tau, double p, double n) {
  if (!(p > 0.0 && p < 1.0)) throw Error("log_likelihood: requires 0 < p < 1");
  if (!(lambda > 0.0)) throw Error("log_likelihood: requires lambda > 0");
  if (!(tau > 0.0)) throw Error("log_likelihood: requires tau > 0");
  if (!(n > 0.0)) throw Error("log_likelihood: requires n > 0");
  const double rate = lambda * tau;
  // log(1 - e^{-x}) via log1p for small-x accuracy.
  const double log_p_err = std::log1p(-std::exp(-rate));
  return p * n * log_p_err - (1.0 - p) * n * rate;
}

double ceps(double tau, double p) {
  if (!(tau > 0.0)) throw Error("ceps: tau must be > 0");
  if (!(p >= 0.0)) throw Error("ceps: p must be >= 0");
  if (p >= 1.0) {
    throw SaturationError("ceps: normalized distance p = " + std::to_string(p) +
                              " >= 1; lambda is undefined (use clamping to force "
                              "a finite value)",
                          p);
  }
  if (p == 0.0) return 0.0;
  return -std::log1p(-p) / tau;
}

double cer(const EditSummary& summary) {
  if (summary.ref_len == 0) throw Error("cer: reference length is zero");
  return static_cast<double>(summary.distance) / static_cast<double>(summary.ref_len);
}

namespace {

ScoredUtterance score_one(const Utterance& utt, const SegmentationScheme& scheme,
                          const ScoringOptions& opts) {
  if (!(utt.duration_s > 0.0)) {
    throw Error("utterance '" + utt.id + "': duration_s must be > 0 for CEPS (got " +
                std::to_string(utt.duration_s) + ")");
  }
  SliceSequence ref = segment(utt.reference, scheme);
  SliceSequence hyp = segment(utt.hypothesis, scheme);
  if (ref.empty()) {
    throw Error("utterance '" + utt.id + "': reference has no slices");
  }

  ScoredUtterance out;
  out.id = utt.id;
  out.edit = levenshtein_fast(ref, hyp);
  out.tau_slices = opts.tau_source == ScoringOptions::TauSource::Reference
                       ? out.edit.ref_len
                       : out.edit.hyp_len;

  CepsEstimate& est = out.estimate;
  est.n = out.edit.ref_len;
  est.total_duration_s = utt.duration_s;
  est.total_errors = out.edit.distance;
  est.p = static_cast<double>(est.total_errors) / static_cast<double>(est.n);
  if (out.tau_slices == 0) {
    // Only possible with the hypothesis tau source and an empty hypothesis.
    est.tau = nan_value();
    est.lambda = nan_value();
    return out;
  }
  est.tau = utt.duration_s / static_cast<double>(out.tau_slices);
  if (est.p >= 1.0) {
    est.saturated = true;
    if (opts.clamp) {
      est.clamped = true;
      est.lambda = ceps(est.tau, kClampP);
    } else {
      est.lambda = nan_value();
    }
  } else {
    est.lambda = ceps(est.tau, est.p);
  }
  return out;
}

}  // namespace

std::vector<ScoredUtterance> score_utterances(std::span<const Utterance> utts,
                                              const SegmentationScheme& scheme,
                                              const ScoringOptions& opts) {
  std::vector<ScoredUtterance> results(utts.size());
  unsigned threads = opts.threads == 0 ? std::thread::hardware_concurrency() : opts.threads;
  if (threads <= 1 || utts.size() < 2) {
    for (std::size_t i = 0; i < utts.size(); ++i) {
      results[i] = score_one(utts[i], scheme, opts);
    }
    return results;
  }

  threads = std::min<std::size_t>(threads, utts.size());
  std::vector<std::thread> pool_threads;
  std::vector<std::exception_ptr> errors(threads);
  for (unsigned t = 0; t < threads; ++t) {
    pool_threads.emplace_back([&, t]() {
      try {
        for (std::size_t i = t; i < utts.size(); i += threads) {
          results[i] = score_one(utts[i], scheme, opts);
        }
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool_threads) th.join();
  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  return results;
}

CepsEstimate pool(std::span<const ScoredUtterance> scored, const ScoringOptions& opts) {
  std::size_t total_slices = 0;     // T
  std::size_t total_errors = 0;     // E
  std::size_t tau_slices = 0;       // denominator slices for tau
  double total_duration = 0.0;      // L
  for (const auto& s : scored) {
    total_slices += s.edit.ref_len;
    total_errors += s.edit.distance;
    tau_slices += s.tau_slices;
    total_duration += s.estimate.total_duration_s;
  }
  if (total_slices == 0) throw Error("pooled estimate: no reference slices");
  if (tau_slices == 0) throw Error("pooled estimate: no slices for the tau denominator");
  if (!(total_duration > 0.0)) throw Error("pooled estimate: total duration is zero");

  CepsEstimate est;
  est.n = total_slices;
  est.total_errors = total_errors;
  est.total_duration_s = total_duration;
  est.tau = total_duration / static_cast<double>(tau_slices);
  est.p = static_cast<double>(total_errors) / static_cast<double>(total_slices);
  if (est.p >= 1.0) {
    est.saturated = true;
    if (!opts.clamp) {
      throw SaturationError(
          "pooled estimate: total errors / total slices = " + std::to_string(est.p) +
              " >= 1; lambda is undefined (rerun with clamping to force a finite value)",
          est.p);
    }
    est.clamped = true;
    est.lambda = ceps(est.tau, kClampP);
  } else {
    est.lambda = ceps(est.tau, est.p);
  }
  return est;
}

double macro_mean(std::span<const ScoredUtterance> scored) {
  if (scored.empty()) throw Error("macro estimate: no utterances");
  std::string saturated_ids;
  double sum = 0.0;
  for (const auto& s : scored) {
    if (s.estimate.saturated && !s.estimate.clamped) {
      if (!saturated_ids.empty()) saturated_ids += ", ";
      saturated_ids += s.id;
      continue;
    }
    if (std::isnan(s.estimate.lambda)) {
      throw Error("macro estimate: utterance '" + s.id +
                  "' has no tau (empty hypothesis with the hypothesis tau source)");
    }
    sum += s.estimate.lambda;
  }
  if (!saturated_ids.empty()) {
    throw SaturationError("macro estimate: per-utterance lambda undefined (p >= 1) for: " +
                              saturated_ids,
                          1.0);
  }
  return sum / static_cast<double>(scored.size());
}

CepsEstimate score_pooled(std::span<const Utterance> utts, const SegmentationScheme& scheme,
                          const ScoringOptions& opts) {
  auto scored = score_utterances(utts, scheme, opts);
  return pool(scored, opts);
}

double score_macro(std::span<const Utterance> utts, const SegmentationScheme& scheme,
                   const ScoringOptions& opts) {
  auto scored = score_utterances(utts, scheme, opts);
  return macro_mean(scored);
}

}  // namespace cepseval
