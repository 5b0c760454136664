#pragma once

#include <iosfwd>
#include <string>

#include "refclass/classification.hpp"
#include "refclass/scheme.hpp"

namespace refclass {

// Tab-separated (paper_id, category_code, weight), ordered by paper_id, then
// descending weight, then ascending code. Weights use the shortest decimal
// form that round-trips exactly.
void write_classification(std::ostream& out, const Classification& c, const CategoryScheme& scheme);
void save_classification(const std::string& path, const Classification& c,
                         const CategoryScheme& scheme);

// Reads a table in the format above (any supported delimiter). Repeated
// (paper, code) rows are summed and each paper's vector is normalized to sum
// 1; papers whose weights are all zero are skipped. Throws Error on a code
// that is not a regular category of `scheme`.
Classification read_classification(std::istream& in, const std::string& source,
                                   const CategoryScheme& scheme, std::string label);
Classification load_classification(const std::string& path, const CategoryScheme& scheme,
                                   std::string label);

// Run metadata sidecar: label, iterations, convergence flag, stalled count,
// residual trace and unreclassified count, as pretty-printed JSON.
void write_run_metadata(std::ostream& out, const Classification& c);

}  // namespace refclass
