#pragma once

// Scientometric indicators over one or more classifications. Everything here
// is a pure function of its inputs; reductions run in paper-id or category
// order so results are reproducible.

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "refclass/classification.hpp"
#include "refclass/corpus.hpp"
#include "refclass/scheme.hpp"

namespace refclass {

// size[c] = sum over papers of the paper's weight in c.
std::vector<double> category_sizes(const Classification& c, std::size_t categories);

// papers / sum of squared category sizes. Throws Error when empty.
double granularity(const Classification& c, std::size_t categories);

// Population standard deviation over mean of the non-empty category sizes.
double size_cv(const Classification& c, std::size_t categories);

struct StructureMetrics {
  std::size_t papers = 0;
  std::size_t non_empty_categories = 0;
  double max_size = 0.0;
  double min_size = 0.0;  // smallest non-empty category
  double cv = 0.0;
  double granularity = 0.0;
};
StructureMetrics structure_metrics(const Classification& c, std::size_t categories);

// Per-reference attributes used to filter reference counts.
struct ReferenceAttributes {
  struct Attr {
    bool indexed = false;
    std::optional<int> year;
  };
  std::vector<std::pair<std::string, Attr>> by_id;  // ascending id

  const Attr* find(const std::string& reference_id) const;
};
// Columns: reference_id, indexed (0/1/true/false), year (may be empty).
ReferenceAttributes load_reference_attributes(const std::string& path);

struct RefFilter {
  const ReferenceAttributes* attributes = nullptr;
  bool indexed_only = false;
  // Keep references whose year lies in [publication_year - window, publication_year].
  std::optional<int> window_years;
  int publication_year = 0;
};

// Filtered reference counts for each paper of `c`, aligned with c.paper_ids.
// Throws Error if a paper is not in the corpus, or if a filter is requested
// without attributes.
std::vector<double> reference_counts(const Corpus& corpus, const Classification& c,
                                     const RefFilter& filter = {});

// Average over non-empty categories of the membership-weighted coefficient of
// variation of the per-paper counts (aligned with c.paper_ids).
double refs_per_paper_acv(const Classification& c, std::span<const double> counts,
                          std::size_t categories);

// Mean over common papers of 100 * sum_c min(a_c, b_c). Throws Error when
// the two share no paper.
double coincidence_percentage(const Classification& a, const Classification& b);

struct RankMetrics {
  std::size_t common_papers = 0;
  // Winner of a located in b's ranking (1-based); missing winners excluded
  // from the average and counted separately. NaN average when all missing.
  double a_winner_avg_rank = 0.0;
  std::size_t a_winner_missing = 0;
  double b_winner_avg_rank = 0.0;
  std::size_t b_winner_missing = 0;
};
RankMetrics rank_metrics(const Classification& a, const Classification& b);

struct AssignmentHistogram {
  std::size_t papers = 0;
  std::size_t total_assignments = 0;
  double average = 0.0;
  std::array<std::size_t, 5> counts{};  // 1, 2, 3, 4, 5+
  std::array<double, 5> percent{};
};
AssignmentHistogram assignment_histogram(const Classification& c);

// Population Pearson correlation of the two category-size vectors (all
// categories, empty ones as zeros). NaN when either has zero variance.
double category_correlation(const Classification& a, const Classification& b,
                            std::size_t categories);

// Percent of the total weight per area, indexed like scheme.areas().
std::vector<double> area_aggregate(const Classification& c, const CategoryScheme& scheme);

// flow[i][j] = sum over common papers of origin-area mass i times
// result-area mass j. Row sums equal the origin area masses.
std::vector<std::vector<double>> area_flow(const Classification& origin,
                                           const Classification& result,
                                           const CategoryScheme& scheme);

struct RetentionRow {
  int area_code = 0;
  std::size_t papers = 0;
  double percent = 0.0;
};
struct Retention {
  std::vector<RetentionRow> areas;  // ascending area code, areas with papers only
  std::size_t total_papers = 0;
  double total_percent = 0.0;
};
// For each (paper_id, origin area) pair, the share of the paper's result
// weight that stays in the origin area, averaged per area (in percent).
// Papers absent from `result` are ignored.
Retention same_area_retention(const std::vector<std::pair<std::string, int>>& origin_papers,
                              const Classification& result, const CategoryScheme& scheme);

}  // namespace refclass
