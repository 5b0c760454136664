#pragma once

#include <cstddef>
#include <functional>
#include <string>

#include "refclass/classification.hpp"
#include "refclass/corpus.hpp"
#include "refclass/kernels.hpp"

namespace refclass {

// Stopping constant and corpus size of the original full-scale run; the
// default per-paper threshold is their ratio.
inline constexpr double kReferenceThreshold = 3000.0;
inline constexpr double kReferenceCorpusPapers = 3246022.0;

enum class ThresholdMode { absolute, per_paper };

struct EngineConfig {
  // Divide each citing paper's contribution by its reference count.
  bool fractional = false;
  ThresholdMode threshold_mode = ThresholdMode::per_paper;
  // Absolute mode: stop once the total squared difference is below this.
  double convergence_threshold = kReferenceThreshold;
  // Per-paper mode: the stop level is this times the eligible paper count.
  double per_paper_threshold = kReferenceThreshold / kReferenceCorpusPapers;
  int max_iterations = 50;
  // Papers below min_refs still lend their (frozen) vectors to references.
  bool include_ineligible_citers = true;
  // Unmasked passes after the limited loop; 1 yields U1.
  int unlimited_passes = 1;
  kernels::ExecPolicy exec;

  double total_threshold(std::size_t eligible_papers) const;
  // Throws Error on a non-positive threshold, max_iterations < 1 or
  // unlimited_passes < 1.
  void validate() const;
};

// Snapshot handed to an observer after every propagation step.
struct IterationView {
  int iteration;  // 1-based across the limited loop and unlimited passes
  bool limited;
  const VectorStore& papers;
  const VectorStore& references;
  double residual;
};
using IterationObserver = std::function<void(const IterationView&)>;

struct RunResult {
  Classification jl;
  Classification u1;
};

// Iterates limited propagation until the squared difference drops below the
// configured threshold (or max_iterations), snapshots the journal-limited
// result, then applies the unlimited pass(es). JL carries the limited loop's
// residual trace; U1 extends it with the unlimited passes.
RunResult run(const Corpus& corpus, const EngineConfig& config,
              const IterationObserver& observer = {});

// "JL-F", "U1-NF", ...
std::string variant_label(bool unlimited, bool fractional);

// Starting vectors of every paper, one row per paper.
VectorStore initial_vectors(const Corpus& corpus);

// Builds a Classification over the corpus' eligible papers from per-paper rows.
Classification make_classification(const Corpus& corpus, const VectorStore& papers,
                                   std::string label);

}  // namespace refclass
