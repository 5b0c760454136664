#pragma once

#include <array>
#include <string>

#include "refclass/classification.hpp"
#include "refclass/weight_vector.hpp"

namespace refclass {

inline constexpr std::array<double, 3> kPruneThresholds = {0.5, 0.67, 0.8};
inline constexpr int kMaxCategories = 5;
// Relative slack on the ratio test so a ratio sitting exactly on the threshold
// survives renormalization rounding.
inline constexpr double kRatioSlack = 1e-12;

struct PruneConfig {
  double threshold = 0.8;  // in (0, 1]
  int max_categories = kMaxCategories;

  // Throws Error when threshold is outside (0, 1] or max_categories < 1.
  void validate() const;
};

// Bounded multi-assignment. Entries are ranked by descending weight (ties by
// ascending category index); the first is always kept and each following one
// is kept while it weighs at least `threshold` times its predecessor and the
// cap allows. Kept weights are renormalized to sum 1.
// Throws Error on an empty vector.
WeightVector prune(const WeightVector& vector, const PruneConfig& config);

// Applies prune to every paper and appends the threshold to the label,
// e.g. "U1-F" -> "U1-F-0.8".
Classification prune_classification(const Classification& c, const PruneConfig& config);

// Text used in labels: 0.5 -> "0.5", 0.67 -> "0.67".
std::string threshold_label(double threshold);

}  // namespace refclass
