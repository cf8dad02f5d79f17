#include "cepseval/corpstats.hpp"

#include <cmath>

#include "cepseval/error.hpp"
#include "cepseval/utf8.hpp"

namespace cepseval {

namespace {

bool all_whitespace(const std::string& slice) {
  bool any = false;
  for (char32_t cp : utf8::decode(slice)) {
    if (!is_unicode_whitespace(cp)) return false;
    any = true;
  }
  return any;
}

// Continued-fraction for the incomplete beta (Numerical Recipes form),
// evaluated with the modified Lentz algorithm.
double beta_cf(double x, double a, double b) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-15;
  constexpr int kMaxIter = 300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace

double regularized_incomplete_beta(double x, double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw Error("incomplete beta: a and b must be > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw Error("incomplete beta: x must be in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  // The continued fraction converges fast for x below the distribution bulk;
  // otherwise use the symmetry I_x(a,b) = 1 - I_{1-x}(b,a).
  if (x < (a + 1.0) / (a + b + 2.0)) {
    return front * beta_cf(x, a, b) / a;
  }
  return 1.0 - front * beta_cf(1.0 - x, b, a) / b;
}

double student_t_two_tailed_p(double t, double dof) {
  if (!(dof > 0.0)) throw Error("student t: dof must be > 0");
  if (std::isinf(t)) return 0.0;
  return regularized_incomplete_beta(dof / (dof + t * t), dof / 2.0, 0.5);
}

InventoryStats inventory(std::span<const std::string> texts, const SegmentationScheme& scheme,
                         bool include_whitespace) {
  InventoryStats stats;
  std::size_t total = 0;
  for (const auto& text : texts) {
    SliceSequence seq = segment(text, scheme);
    for (auto& slice : seq.slices) {
      if (!include_whitespace && all_whitespace(slice)) continue;
      ++stats.counts[std::move(slice)];
      ++total;
    }
  }
  stats.inventory_size = stats.counts.size();
  if (total == 0) return stats;
  double entropy = 0.0;
  for (const auto& [slice, count] : stats.counts) {
    const double prob = static_cast<double>(count) / static_cast<double>(total);
    entropy -= prob * std::log2(prob);
  }
  stats.entropy_bits = entropy < 0.0 ? 0.0 : entropy;
  return stats;
}

Correlation pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw Error("pearson: input lengths differ");
  const std::size_t n = x.size();
  if (n < 3) throw Error("pearson: needs at least 3 samples");

  double mean_x = 0.0, mean_y = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mean_x += x[i];
    mean_y += y[i];
  }
  mean_x /= static_cast<double>(n);
  mean_y /= static_cast<double>(n);

  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mean_x;
    const double dy = y[i] - mean_y;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx == 0.0 || syy == 0.0) {
    throw Error("pearson: correlation undefined for a constant input");
  }

  double r = sxy / std::sqrt(sxx * syy);
  if (r > 1.0) r = 1.0;
  if (r < -1.0) r = -1.0;

  const double dof = static_cast<double>(n - 2);
  double p;
  if (std::fabs(r) == 1.0) {
    p = 0.0;
  } else {
    const double t = r * std::sqrt(dof / (1.0 - r * r));
    p = student_t_two_tailed_p(t, dof);
  }
  return {r, p};
}

CorrMatrix corr_matrix(std::span<const Column> columns) {
  if (columns.size() < 2) throw Error("corr_matrix: needs at least 2 columns");
  const std::size_t rows = columns.front().values.size();
  if (rows < 3) throw Error("corr_matrix: needs at least 3 rows");
  for (const auto& col : columns) {
    if (col.values.size() != rows) {
      throw Error("corr_matrix: column '" + col.name + "' has " +
                  std::to_string(col.values.size()) + " rows, expected " +
                  std::to_string(rows));
    }
  }

  const std::size_t k = columns.size();
  CorrMatrix out;
  out.n = rows;
  out.variables.reserve(k);
  for (const auto& col : columns) out.variables.push_back(col.name);
  out.r.assign(k, std::vector<double>(k, 1.0));
  out.p_values.assign(k, std::vector<double>(k, 0.0));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      Correlation c;
      try {
        c = pearson(columns[i].values, columns[j].values);
      } catch (const Error& e) {
        throw Error("corr_matrix: columns '" + columns[i].name + "' x '" +
                    columns[j].name + "': " + e.what());
      }
      out.r[i][j] = out.r[j][i] = c.r;
      out.p_values[i][j] = out.p_values[j][i] = c.p;
    }
  }
  return out;
}

}  // namespace cepseval
