#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "cepseval/textseg.hpp"

namespace cepseval {

// Grapheme inventory and unigram entropy of a corpus under a segmentation
// scheme. Entropy is Shannon entropy in bits (base-2 log), 0*log(0) = 0.
struct InventoryStats {
  std::size_t inventory_size = 0;
  double entropy_bits = 0.0;
  std::map<std::string, std::size_t> counts;  // slice -> occurrences
};

// Whitespace slices are excluded from the inventory by default, matching how
// published grapheme counts treat word separators.
InventoryStats inventory(std::span<const std::string> texts, const SegmentationScheme& scheme,
                         bool include_whitespace = false);

struct Correlation {
  double r;  // sample Pearson coefficient
  double p;  // two-tailed significance from Student's t with n-2 dof
};

// Requires equal lengths >= 3 and both inputs nonconstant.
Correlation pearson(std::span<const double> x, std::span<const double> y);

struct Column {
  std::string name;
  std::vector<double> values;
};

struct CorrMatrix {
  std::vector<std::string> variables;
  std::vector<std::vector<double>> r;
  std::vector<std::vector<double>> p_values;
  std::size_t n = 0;          // sample count (rows)
  double alpha = 0.05;        // significance annotation threshold
};

CorrMatrix corr_matrix(std::span<const Column> columns);

// I_x(a, b), continued-fraction evaluation (modified Lentz).
double regularized_incomplete_beta(double x, double a, double b);

// Two-tailed p for Student's t: p = I_{v/(v+t^2)}(v/2, 1/2).
double student_t_two_tailed_p(double t, double dof);

}  // namespace cepseval
