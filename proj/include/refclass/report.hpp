#pragma once

// Writes the indicator tables for a set of classifications into a directory:
//   structure.tsv      size/uniformity of categories
//   assignments.tsv    categories per paper
//   refs_acv.tsv       average CV of references per paper (needs a corpus)
//   coincidence.tsv    agreement with each comparison classification
//   correlations.tsv   category-size correlation matrix
//   areas.tsv          weight share per area
//   areas_multidisciplinary.tsv  same, papers of multidisciplinary journals
//   retention.tsv      same-area retention of misc-journal papers
//   flow.tsv           area-to-area weight flow, origin -> flow target
//   metadata.json      inputs and definition versions

#include <optional>
#include <string>
#include <vector>

#include "refclass/classification.hpp"
#include "refclass/corpus.hpp"
#include "refclass/metrics.hpp"
#include "refclass/scheme.hpp"

namespace refclass {

struct ReportInputs {
  const CategoryScheme* scheme = nullptr;
  // Classifications to describe, in column order.
  std::vector<const Classification*> classifications;
  // External references (e.g. an author-assigned collection) compared
  // against every classification in coincidence.tsv.
  std::vector<const Classification*> comparisons;
  // Enables refs_acv, retention, areas_multidisciplinary and flow.
  const Corpus* corpus = nullptr;
  const ReferenceAttributes* reference_attributes = nullptr;
  int publication_year = 0;
  // Correlation and area tables are restricted to this classification's papers.
  std::optional<std::string> common_papers_from;
  // Flow origin and target labels; origin defaults to the journal baseline.
  std::string flow_origin = "ASJC";
  std::optional<std::string> flow_target;
};

// Journal-based starting vectors of the eligible papers, labelled "ASJC".
Classification journal_baseline(const Corpus& corpus);

void write_report(const ReportInputs& inputs, const std::string& dir);

}  // namespace refclass
