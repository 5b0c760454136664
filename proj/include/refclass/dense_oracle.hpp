#pragma once

// Independent dense implementation of the propagation loop, written as a
// literal loop-by-loop version of the algorithm: full category-length
// vectors, linear searches over reference identifiers, no shared code with
// the sparse kernels. Only meant for small corpora.

#include <cstddef>
#include <string>
#include <vector>

#include "refclass/classification.hpp"
#include "refclass/corpus.hpp"

namespace refclass::oracle {

inline constexpr std::size_t kMaxPapers = 100;

struct DenseConfig {
  bool fractional = false;
  double threshold = 0.0;  // total squared-difference stop level
  int max_iterations = 50;
  bool include_ineligible_citers = true;
};

struct DenseResult {
  std::vector<std::vector<double>> jl;  // [paper][category], corpus paper order
  std::vector<std::vector<double>> u1;
  int iterations = 0;
  std::vector<double> trace;
};

// Throws Error if the corpus exceeds kMaxPapers papers.
DenseResult run_dense(const Corpus& corpus, const DenseConfig& config);

struct Difference {
  double max_abs = 0.0;
  std::string paper_id;  // where max_abs occurs
  int category = -1;
};

// Largest component gap between the dense rows of eligible papers and a
// classification; papers missing from the classification count as all-zero.
Difference compare(const Corpus& corpus, const std::vector<std::vector<double>>& dense,
                   const Classification& c);

}  // namespace refclass::oracle
