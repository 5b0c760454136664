#include "refclass/assign.hpp"

#include <algorithm>
#include <cstdio>

#include "refclass/error.hpp"

namespace refclass {

void PruneConfig::validate() const {
  if (!(threshold > 0.0 && threshold <= 1.0)) throw Error("prune threshold must lie in (0, 1]");
  if (max_categories < 1) throw Error("max_categories must be at least 1");
}

WeightVector prune(const WeightVector& vector, const PruneConfig& config) {
  config.validate();
  if (vector.empty()) throw Error("cannot prune an empty weight vector");

  std::vector<Entry> ranked(vector.entries().begin(), vector.entries().end());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const Entry& a, const Entry& b) { return a.weight > b.weight; });

  std::size_t keep = 1;
  const auto cap = static_cast<std::size_t>(config.max_categories);
  while (keep < ranked.size() && keep < cap &&
         ranked[keep].weight >= config.threshold * ranked[keep - 1].weight * (1.0 - kRatioSlack)) {
    ++keep;
  }
  ranked.resize(keep);
  return WeightVector::from_entries(std::move(ranked)).normalized();
}

Classification prune_classification(const Classification& c, const PruneConfig& config) {
  config.validate();
  Classification out;
  out.label = c.label + "-" + threshold_label(config.threshold);
  out.paper_ids = c.paper_ids;
  out.unreclassified = c.unreclassified;
  out.iterations_run = c.iterations_run;
  out.residual_trace = c.residual_trace;
  out.converged = c.converged;
  out.stalled = c.stalled;
  out.vectors.reserve(c.vectors.size());
  for (const auto& v : c.vectors) out.vectors.push_back(prune(v, config));
  return out;
}

std::string threshold_label(double threshold) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", threshold);
  return buf;
}

}  // namespace refclass
