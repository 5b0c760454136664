#include "refclass/classification.hpp"

#include <algorithm>

namespace refclass {

const WeightVector* Classification::find(std::string_view paper_id) const {
  const auto it = std::lower_bound(paper_ids.begin(), paper_ids.end(), paper_id,
                                   [](const std::string& a, std::string_view b) { return a < b; });
  if (it == paper_ids.end() || *it != paper_id) return nullptr;
  return &vectors[static_cast<std::size_t>(it - paper_ids.begin())];
}

Classification restrict_to(const Classification& c, const std::vector<std::string>& paper_ids) {
  std::vector<std::string> wanted = paper_ids;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  Classification out;
  out.label = c.label;
  out.iterations_run = c.iterations_run;
  out.residual_trace = c.residual_trace;
  out.converged = c.converged;
  out.stalled = c.stalled;
  for (const auto& id : wanted) {
    if (const auto* v = c.find(id)) {
      out.paper_ids.push_back(id);
      out.vectors.push_back(*v);
    }
  }
  return out;
}

}  // namespace refclass
