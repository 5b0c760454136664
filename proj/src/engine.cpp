#include "refclass/engine.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "refclass/error.hpp"

namespace refclass {

double EngineConfig::total_threshold(std::size_t eligible_papers) const {
  return threshold_mode == ThresholdMode::absolute
             ? convergence_threshold
             : per_paper_threshold * static_cast<double>(eligible_papers);
}

void EngineConfig::validate() const {
  const double t =
      threshold_mode == ThresholdMode::absolute ? convergence_threshold : per_paper_threshold;
  if (!(t >= 0.0) || !std::isfinite(t)) throw Error("convergence threshold must be finite and non-negative");
  if (max_iterations < 1) throw Error("max_iterations must be at least 1");
  if (unlimited_passes < 1) throw Error("unlimited_passes must be at least 1");
}

std::string variant_label(bool unlimited, bool fractional) {
  return std::string(unlimited ? "U1" : "JL") + (fractional ? "-F" : "-NF");
}

VectorStore initial_vectors(const Corpus& corpus) {
  VectorStore store;
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    store.append_row(corpus.initial_vector(p).entries());
  }
  return store;
}

Classification make_classification(const Corpus& corpus, const VectorStore& papers,
                                   std::string label) {
  Classification c;
  c.label = std::move(label);
  c.paper_ids.reserve(corpus.eligible_count());
  c.vectors.reserve(corpus.eligible_count());
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    if (corpus.eligible(p)) {
      c.paper_ids.push_back(corpus.paper_id(p));
      c.vectors.push_back(papers.vector(p));
    } else {
      c.unreclassified.push_back(corpus.paper_id(p));
    }
  }
  return c;
}

namespace {

// Journal-limited vectors may only shrink their support.
void check_support(const Corpus& corpus, const VectorStore& papers) {
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    const auto& start = corpus.initial_vector(p);
    for (const auto& e : papers.row(p)) {
      if (!start.contains(e.index)) {
        throw std::logic_error("limited propagation left the journal support of paper '" +
                               corpus.paper_id(p) + "'");
      }
    }
  }
}

}  // namespace

RunResult run(const Corpus& corpus, const EngineConfig& config, const IterationObserver& observer) {
  config.validate();
  const auto update_mask = corpus.eligibility_mask();
  const std::vector<std::uint8_t> all_papers(corpus.paper_count(), 1);
  const std::span<const std::uint8_t> citer_mask =
      config.include_ineligible_citers ? std::span<const std::uint8_t>(all_papers) : update_mask;
  const double threshold = config.total_threshold(corpus.eligible_count());

  VectorStore papers = initial_vectors(corpus);
  std::vector<double> trace;
  std::size_t stalled = 0;
  bool converged = false;
  int iteration = 0;

  while (iteration < config.max_iterations) {
    ++iteration;
    const auto refs = kernels::accumulate_references(corpus, papers, citer_mask,
                                                     config.fractional, config.exec);
    auto step = kernels::propagate(corpus, refs, papers, update_mask, true, config.exec);
    const double residual = kernels::squared_difference(step.papers, papers, config.exec);
    papers = std::move(step.papers);
    stalled = step.stalled;
    trace.push_back(residual);
    check_support(corpus, papers);
    if (observer) observer({iteration, true, papers, refs, residual});
    if (residual < threshold) {
      converged = true;
      break;
    }
  }

  RunResult result;
  result.jl = make_classification(corpus, papers, variant_label(false, config.fractional));
  result.jl.iterations_run = iteration;
  result.jl.residual_trace = trace;
  result.jl.converged = converged;
  result.jl.stalled = stalled;

  for (int pass = 0; pass < config.unlimited_passes; ++pass) {
    ++iteration;
    const auto refs = kernels::accumulate_references(corpus, papers, citer_mask,
                                                     config.fractional, config.exec);
    auto step = kernels::propagate(corpus, refs, papers, update_mask, false, config.exec);
    const double residual = kernels::squared_difference(step.papers, papers, config.exec);
    papers = std::move(step.papers);
    stalled = step.stalled;
    trace.push_back(residual);
    if (observer) observer({iteration, false, papers, refs, residual});
  }

  std::string u_label = variant_label(true, config.fractional);
  if (config.unlimited_passes != 1) u_label.replace(1, 1, std::to_string(config.unlimited_passes));
  result.u1 = make_classification(corpus, papers, std::move(u_label));
  result.u1.iterations_run = iteration;
  result.u1.residual_trace = std::move(trace);
  result.u1.converged = converged;
  result.u1.stalled = stalled;
  return result;
}

}  // namespace refclass
