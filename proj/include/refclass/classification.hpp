#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "refclass/weight_vector.hpp"

namespace refclass {

// Per-paper category vectors under one named variant, e.g. "JL-F" or
// "U1-NF-0.8". paper_ids is ascending and parallel to vectors.
struct Classification {
  std::string label;
  std::vector<std::string> paper_ids;
  std::vector<WeightVector> vectors;
  // Papers left out (too few references), ascending.
  std::vector<std::string> unreclassified;

  int iterations_run = 0;
  std::vector<double> residual_trace;
  bool converged = true;
  std::size_t stalled = 0;

  std::size_t size() const { return paper_ids.size(); }
  // nullptr when the paper is not classified.
  const WeightVector* find(std::string_view paper_id) const;
};

// A copy restricted to the given paper ids (any order; unknown ids ignored).
Classification restrict_to(const Classification& c, const std::vector<std::string>& paper_ids);

}  // namespace refclass
