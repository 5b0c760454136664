#include "refclass/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Calls fn(va, vb) for each paper id present in both, ascending.
template <typename Fn>
std::size_t for_common(const Classification& a, const Classification& b, Fn fn) {
  std::size_t i = 0, j = 0, n = 0;
  while (i < a.size() && j < b.size()) {
    const int cmp = a.paper_ids[i].compare(b.paper_ids[j]);
    if (cmp < 0) {
      ++i;
    } else if (cmp > 0) {
      ++j;
    } else {
      fn(a.vectors[i], b.vectors[j]);
      ++i;
      ++j;
      ++n;
    }
  }
  return n;
}

// Descending weight, ties by ascending index.
std::vector<Entry> ranked(const WeightVector& v) {
  std::vector<Entry> r(v.entries().begin(), v.entries().end());
  std::stable_sort(r.begin(), r.end(), [](const Entry& x, const Entry& y) { return x.weight > y.weight; });
  return r;
}

std::optional<CategoryIndex> winner(const WeightVector& v) {
  if (v.empty()) return std::nullopt;
  const Entry* best = &v.entries()[0];
  for (const auto& e : v.entries()) {
    if (e.weight > best->weight) best = &e;
  }
  return best->index;
}

std::vector<double> area_masses(const WeightVector& v, const CategoryScheme& scheme) {
  std::vector<double> m(scheme.area_count(), 0.0);
  for (const auto& e : v.entries()) m[scheme.area_slot(e.index)] += e.weight;
  return m;
}

}  // namespace

std::vector<double> category_sizes(const Classification& c, std::size_t categories) {
  std::vector<double> sizes(categories, 0.0);
  for (const auto& v : c.vectors) {
    for (const auto& e : v.entries()) {
      if (e.index >= categories) throw Error("classification index outside the category range");
      sizes[e.index] += e.weight;
    }
  }
  return sizes;
}

double granularity(const Classification& c, std::size_t categories) {
  if (c.size() == 0) throw Error("granularity of an empty classification");
  double squares = 0.0;
  for (const double s : category_sizes(c, categories)) squares += s * s;
  return static_cast<double>(c.size()) / squares;
}

double size_cv(const Classification& c, std::size_t categories) {
  std::vector<double> sizes = category_sizes(c, categories);
  std::erase_if(sizes, [](double s) { return s <= 0.0; });
  if (sizes.empty()) throw Error("size CV of an empty classification");
  double mean = 0.0;
  for (const double s : sizes) mean += s;
  mean /= static_cast<double>(sizes.size());
  double var = 0.0;
  for (const double s : sizes) var += (s - mean) * (s - mean);
  var /= static_cast<double>(sizes.size());
  return std::sqrt(var) / mean;
}

StructureMetrics structure_metrics(const Classification& c, std::size_t categories) {
  StructureMetrics m;
  m.papers = c.size();
  const auto sizes = category_sizes(c, categories);
  m.min_size = std::numeric_limits<double>::infinity();
  for (const double s : sizes) {
    if (s <= 0.0) continue;
    ++m.non_empty_categories;
    m.max_size = std::max(m.max_size, s);
    m.min_size = std::min(m.min_size, s);
  }
  if (m.non_empty_categories == 0) throw Error("structure metrics of an empty classification");
  m.cv = size_cv(c, categories);
  m.granularity = granularity(c, categories);
  return m;
}

const ReferenceAttributes::Attr* ReferenceAttributes::find(const std::string& reference_id) const {
  const auto it = std::lower_bound(by_id.begin(), by_id.end(), reference_id,
                                   [](const auto& a, const std::string& id) { return a.first < id; });
  if (it == by_id.end() || it->first != reference_id) return nullptr;
  return &it->second;
}

ReferenceAttributes load_reference_attributes(const std::string& path) {
  TableReader t(path);
  const auto rcol = t.column("reference_id");
  const auto icol = t.find_column("indexed");
  const auto ycol = t.find_column("year");
  ReferenceAttributes attrs;
  while (t.next()) {
    const std::string where = t.source() + ":" + std::to_string(t.line_number());
    ReferenceAttributes::Attr a;
    if (icol) {
      const auto& f = t.field(*icol);
      if (f == "1" || f == "true" || f == "yes") {
        a.indexed = true;
      } else if (f == "0" || f == "false" || f == "no" || f.empty()) {
        a.indexed = false;
      } else {
        throw Error(where + ": invalid indexed flag '" + f + "'");
      }
    }
    if (ycol && !t.field(*ycol).empty()) {
      a.year = static_cast<int>(parse_integer(t.field(*ycol), where + " year"));
    }
    attrs.by_id.emplace_back(t.field(rcol), a);
  }
  std::sort(attrs.by_id.begin(), attrs.by_id.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  for (std::size_t i = 1; i < attrs.by_id.size(); ++i) {
    if (attrs.by_id[i].first == attrs.by_id[i - 1].first) {
      throw Error(path + ": duplicate reference_id '" + attrs.by_id[i].first + "'");
    }
  }
  return attrs;
}

std::vector<double> reference_counts(const Corpus& corpus, const Classification& c,
                                     const RefFilter& filter) {
  const bool filtering = filter.indexed_only || filter.window_years.has_value();
  if (filtering && filter.attributes == nullptr) {
    throw Error("reference filter requires a reference attributes table");
  }
  // Per-reference pass flag, computed once.
  std::vector<std::uint8_t> pass(corpus.reference_count(), 1);
  if (filtering) {
    for (ReferenceIndex r = 0; r < corpus.reference_count(); ++r) {
      const auto* a = filter.attributes->find(corpus.reference_id(r));
      bool ok = a != nullptr;
      if (ok && filter.indexed_only) ok = a->indexed;
      if (ok && filter.window_years) {
        ok = a->year && *a->year <= filter.publication_year &&
             *a->year >= filter.publication_year - *filter.window_years;
      }
      pass[r] = ok;
    }
  }
  std::vector<double> counts;
  counts.reserve(c.size());
  for (const auto& id : c.paper_ids) {
    const auto p = corpus.find_paper(id);
    if (!p) throw Error("paper '" + id + "' is not in the corpus");
    std::size_t n = 0;
    for (const auto r : corpus.references_of(*p)) n += pass[r];
    counts.push_back(static_cast<double>(n));
  }
  return counts;
}

double refs_per_paper_acv(const Classification& c, std::span<const double> counts,
                          std::size_t categories) {
  if (counts.size() != c.size()) throw Error("reference counts are not aligned with the classification");
  std::vector<double> weight(categories, 0.0), first(categories, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& e : c.vectors[i].entries()) {
      weight[e.index] += e.weight;
      first[e.index] += e.weight * counts[i];
    }
  }
  std::vector<double> mean(categories, 0.0), second(categories, 0.0);
  for (std::size_t k = 0; k < categories; ++k) {
    if (weight[k] > 0.0) mean[k] = first[k] / weight[k];
  }
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (const auto& e : c.vectors[i].entries()) {
      const double d = counts[i] - mean[e.index];
      second[e.index] += e.weight * d * d;
    }
  }
  double total = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < categories; ++k) {
    if (weight[k] <= 0.0 || mean[k] <= 0.0) continue;
    total += std::sqrt(second[k] / weight[k]) / mean[k];
    ++used;
  }
  return used == 0 ? kNaN : total / static_cast<double>(used);
}

double coincidence_percentage(const Classification& a, const Classification& b) {
  double total = 0.0;
  const auto n = for_common(a, b, [&](const WeightVector& va, const WeightVector& vb) {
    double overlap = 0.0;
    const auto ea = va.entries();
    const auto eb = vb.entries();
    std::size_t i = 0, j = 0;
    while (i < ea.size() && j < eb.size()) {
      if (ea[i].index < eb[j].index) {
        ++i;
      } else if (eb[j].index < ea[i].index) {
        ++j;
      } else {
        overlap += std::min(ea[i++].weight, eb[j++].weight);
      }
    }
    total += 100.0 * overlap;
  });
  if (n == 0) throw Error("classifications '" + a.label + "' and '" + b.label + "' share no paper");
  return total / static_cast<double>(n);
}

RankMetrics rank_metrics(const Classification& a, const Classification& b) {
  RankMetrics m;
  double rank_a = 0.0, rank_b = 0.0;
  const auto locate = [](CategoryIndex target, const WeightVector& v) -> std::optional<std::size_t> {
    const auto order = ranked(v);
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (order[k].index == target) return k + 1;
    }
    return std::nullopt;
  };
  m.common_papers = for_common(a, b, [&](const WeightVector& va, const WeightVector& vb) {
    if (const auto w = winner(va)) {
      if (const auto r = locate(*w, vb)) {
        rank_a += static_cast<double>(*r);
      } else {
        ++m.a_winner_missing;
      }
    }
    if (const auto w = winner(vb)) {
      if (const auto r = locate(*w, va)) {
        rank_b += static_cast<double>(*r);
      } else {
        ++m.b_winner_missing;
      }
    }
  });
  const auto found_a = m.common_papers - m.a_winner_missing;
  const auto found_b = m.common_papers - m.b_winner_missing;
  m.a_winner_avg_rank = found_a ? rank_a / static_cast<double>(found_a) : kNaN;
  m.b_winner_avg_rank = found_b ? rank_b / static_cast<double>(found_b) : kNaN;
  return m;
}

AssignmentHistogram assignment_histogram(const Classification& c) {
  AssignmentHistogram h;
  h.papers = c.size();
  for (const auto& v : c.vectors) {
    h.total_assignments += v.size();
    if (v.empty()) continue;
    ++h.counts[std::min<std::size_t>(v.size(), 5) - 1];
  }
  if (h.papers > 0) {
    h.average = static_cast<double>(h.total_assignments) / static_cast<double>(h.papers);
    for (std::size_t k = 0; k < 5; ++k) {
      h.percent[k] = 100.0 * static_cast<double>(h.counts[k]) / static_cast<double>(h.papers);
    }
  }
  return h;
}

double category_correlation(const Classification& a, const Classification& b,
                            std::size_t categories) {
  const auto x = category_sizes(a, categories);
  const auto y = category_sizes(b, categories);
  const auto n = static_cast<double>(categories);
  double mx = 0.0, my = 0.0;
  for (std::size_t k = 0; k < categories; ++k) {
    mx += x[k];
    my += y[k];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t k = 0; k < categories; ++k) {
    sxy += (x[k] - mx) * (y[k] - my);
    sxx += (x[k] - mx) * (x[k] - mx);
    syy += (y[k] - my) * (y[k] - my);
  }
  if (sxx <= 0.0 || syy <= 0.0) return kNaN;
  return sxy / std::sqrt(sxx * syy);
}

std::vector<double> area_aggregate(const Classification& c, const CategoryScheme& scheme) {
  std::vector<double> areas(scheme.area_count(), 0.0);
  const auto sizes = category_sizes(c, scheme.size());
  double total = 0.0;
  for (std::size_t k = 0; k < sizes.size(); ++k) {
    areas[scheme.area_slot(static_cast<CategoryIndex>(k))] += sizes[k];
    total += sizes[k];
  }
  if (total > 0.0) {
    for (auto& a : areas) a = 100.0 * a / total;
  }
  return areas;
}

std::vector<std::vector<double>> area_flow(const Classification& origin,
                                           const Classification& result,
                                           const CategoryScheme& scheme) {
  const auto n = scheme.area_count();
  std::vector<std::vector<double>> flow(n, std::vector<double>(n, 0.0));
  for_common(origin, result, [&](const WeightVector& vo, const WeightVector& vr) {
    const auto mo = area_masses(vo, scheme);
    const auto mr = area_masses(vr, scheme);
    for (std::size_t i = 0; i < n; ++i) {
      if (mo[i] == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) flow[i][j] += mo[i] * mr[j];
    }
  });
  return flow;
}

Retention same_area_retention(const std::vector<std::pair<std::string, int>>& origin_papers,
                              const Classification& result, const CategoryScheme& scheme) {
  std::vector<std::size_t> papers(scheme.area_count(), 0);
  std::vector<double> kept(scheme.area_count(), 0.0);
  Retention out;
  double total_kept = 0.0;
  for (const auto& [id, area] : origin_papers) {
    const auto* v = result.find(id);
    const auto slot = scheme.area_slot_of(area);
    if (v == nullptr || !slot) continue;
    double share = 0.0;
    for (const auto& e : v->entries()) {
      if (scheme.area_slot(e.index) == *slot) share += e.weight;
    }
    share /= v->sum();
    ++papers[*slot];
    kept[*slot] += share;
    ++out.total_papers;
    total_kept += share;
  }
  for (std::size_t s = 0; s < papers.size(); ++s) {
    if (papers[s] == 0) continue;
    out.areas.push_back({scheme.areas()[s], papers[s],
                         100.0 * kept[s] / static_cast<double>(papers[s])});
  }
  out.total_percent =
      out.total_papers ? 100.0 * total_kept / static_cast<double>(out.total_papers) : kNaN;
  return out;
}

}  // namespace refclass
