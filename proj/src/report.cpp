#include "refclass/report.hpp"

#include <filesystem>
#include <limits>
#include <fstream>
#include <json.hpp>

#include "refclass/engine.hpp"
#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

namespace fs = std::filesystem;

namespace {

std::ofstream open_out(const std::string& dir, const char* name) {
  std::ofstream f(fs::path(dir) / name, std::ios::binary);
  if (!f) throw Error("cannot write '" + (fs::path(dir) / name).string() + "'");
  return f;
}

const Classification* find_label(const std::vector<const Classification*>& all,
                                 const std::string& label) {
  for (const auto* c : all) {
    if (c->label == label) return c;
  }
  return nullptr;
}

std::vector<std::string> eligible_ids(const Corpus& corpus) {
  std::vector<std::string> ids;
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    if (corpus.eligible(p)) ids.push_back(corpus.paper_id(p));
  }
  return ids;
}

}  // namespace

Classification journal_baseline(const Corpus& corpus) {
  return make_classification(corpus, initial_vectors(corpus), "ASJC");
}

void write_report(const ReportInputs& in, const std::string& dir) {
  if (in.scheme == nullptr) throw Error("report needs a category scheme");
  if (in.classifications.empty()) throw Error("report needs at least one classification");
  const auto& scheme = *in.scheme;
  const auto K = scheme.size();
  fs::create_directories(dir);

  std::vector<const Classification*> all = in.classifications;
  all.insert(all.end(), in.comparisons.begin(), in.comparisons.end());

  // Optional common-paper restriction for correlation and area tables.
  std::vector<Classification> restricted;
  std::vector<const Classification*> scoped = all;
  if (in.common_papers_from) {
    const auto* base = find_label(all, *in.common_papers_from);
    if (!base) throw Error("unknown classification '" + *in.common_papers_from + "'");
    restricted.reserve(all.size());
    for (const auto* c : all) restricted.push_back(restrict_to(*c, base->paper_ids));
    for (std::size_t i = 0; i < all.size(); ++i) scoped[i] = &restricted[i];
  }

  {
    auto f = open_out(dir, "structure.tsv");
    TableWriter t(f, {"classification", "papers", "categories", "max_size", "min_size", "cv",
                      "granularity"});
    for (const auto* c : all) {
      const auto m = structure_metrics(*c, K);
      t.cell(c->label).cell(m.papers).cell(m.non_empty_categories).cell(m.max_size)
          .cell(m.min_size).cell(m.cv).cell(m.granularity).end_row();
    }
  }
  {
    auto f = open_out(dir, "assignments.tsv");
    TableWriter t(f, {"classification", "papers", "assignments", "average", "pct_1", "pct_2",
                      "pct_3", "pct_4", "pct_5plus"});
    for (const auto* c : all) {
      const auto h = assignment_histogram(*c);
      t.cell(c->label).cell(h.papers).cell(h.total_assignments).cell(h.average);
      for (const double p : h.percent) t.cell(p);
      t.end_row();
    }
  }
  if (!in.comparisons.empty()) {
    auto f = open_out(dir, "coincidence.tsv");
    TableWriter t(f, {"reference", "classification", "common_papers", "coincidence_pct",
                      "ref_winner_avg_rank", "ref_winner_missing", "class_winner_avg_rank",
                      "class_winner_missing"});
    for (const auto* ref : in.comparisons) {
      for (const auto* c : all) {
        if (c == ref) continue;
        const auto r = rank_metrics(*ref, *c);
        if (r.common_papers == 0) continue;
        t.cell(ref->label).cell(c->label).cell(r.common_papers)
            .cell(coincidence_percentage(*ref, *c)).cell(r.a_winner_avg_rank)
            .cell(r.a_winner_missing).cell(r.b_winner_avg_rank).cell(r.b_winner_missing).end_row();
      }
    }
  }
  {
    auto f = open_out(dir, "correlations.tsv");
    std::vector<std::string> cols{"classification"};
    for (const auto* c : scoped) cols.push_back(c->label);
    TableWriter t(f, cols);
    for (const auto* a : scoped) {
      t.cell(a->label);
      for (const auto* b : scoped) t.cell(category_correlation(*a, *b, K));
      t.end_row();
    }
  }
  const auto write_areas = [&](const char* name, const std::vector<const Classification*>& cs) {
    auto f = open_out(dir, name);
    std::vector<std::string> cols{"area_code"};
    for (const auto* c : cs) cols.push_back(c->label);
    TableWriter t(f, cols);
    std::vector<std::vector<double>> shares;
    for (const auto* c : cs) shares.push_back(area_aggregate(*c, scheme));
    for (std::size_t a = 0; a < scheme.area_count(); ++a) {
      t.cell(scheme.areas()[a]);
      for (const auto& s : shares) t.cell(s[a]);
      t.end_row();
    }
  };
  write_areas("areas.tsv", scoped);

  nlohmann::ordered_json meta;
  meta["classifications"] = nlohmann::json::array();
  for (const auto* c : in.classifications) meta["classifications"].push_back(c->label);
  meta["comparisons"] = nlohmann::json::array();
  for (const auto* c : in.comparisons) meta["comparisons"].push_back(c->label);
  if (in.common_papers_from) meta["common_papers_from"] = *in.common_papers_from;
  meta["definitions"] = {
      {"granularity", "papers / sum of squared category sizes"},
      {"size_cv", "population sd / mean over non-empty categories"},
      {"acv", "unweighted mean over categories of membership-weighted CV of reference counts"},
      {"coincidence", "min-overlap-v1: mean of 100 * sum_c min(a_c, b_c)"},
      {"rank", "exclude-missing-v1: 1-based rank of the winner, missing winners counted apart"},
      {"correlation", "population Pearson over category sizes, empty categories as zeros"},
      {"flow", "product-coupling-v1: sum_p origin_area_p x result_area_p"},
      {"retention", "mean share of result weight in the origin misc area"},
      {"pruning", "consecutive-ratio-v1, max 5 categories, renormalized"}};

  if (in.corpus != nullptr) {
    const auto& corpus = *in.corpus;
    const auto in_corpus = eligible_ids(corpus);
    {
      auto f = open_out(dir, "refs_acv.tsv");
      const bool attrs = in.reference_attributes != nullptr;
      const bool years = attrs && in.publication_year > 0;
      struct Column {
        const char* name;
        RefFilter filter;
      };
      std::vector<Column> columns;
      if (attrs) columns.push_back({"acv_s", {in.reference_attributes, true, std::nullopt, in.publication_year}});
      if (years) {
        columns.push_back({"acv_s3", {in.reference_attributes, true, 3, in.publication_year}});
        columns.push_back({"acv_s2", {in.reference_attributes, true, 2, in.publication_year}});
      }
      columns.push_back({"acv", {}});
      if (years) {
        columns.push_back({"acv_3", {in.reference_attributes, false, 3, in.publication_year}});
        columns.push_back({"acv_2", {in.reference_attributes, false, 2, in.publication_year}});
      }
      std::vector<std::string> names{"classification"};
      for (const auto& col : columns) names.emplace_back(col.name);
      TableWriter t(f, names);
      for (const auto* c : all) {
        const auto local = restrict_to(*c, in_corpus);
        if (local.size() == 0) continue;
        t.cell(c->label);
        for (const auto& col : columns) {
          t.cell(refs_per_paper_acv(local, reference_counts(corpus, local, col.filter), K));
        }
        t.end_row();
      }
      meta["publication_year"] = in.publication_year;
      meta["reference_attributes"] = attrs;
    }
    {
      std::vector<std::string> multi_ids;
      for (const auto p : corpus.multidisciplinary_exclusive_papers(scheme)) {
        if (corpus.eligible(p)) multi_ids.push_back(corpus.paper_id(p));
      }
      std::vector<Classification> multi;
      multi.reserve(all.size());
      std::vector<const Classification*> multi_ptrs;
      for (const auto* c : all) {
        multi.push_back(restrict_to(*c, multi_ids));
        multi_ptrs.push_back(&multi.back());
      }
      write_areas("areas_multidisciplinary.tsv", multi_ptrs);
      meta["multidisciplinary_papers"] = multi_ids.size();
    }
    {
      std::vector<std::pair<std::string, int>> origin;
      for (const auto& [p, area] : corpus.misc_exclusive_papers(scheme)) {
        if (corpus.eligible(p)) origin.emplace_back(corpus.paper_id(p), area);
      }
      std::vector<Retention> per;
      for (const auto* c : all) per.push_back(same_area_retention(origin, *c, scheme));
      std::vector<std::size_t> counts(scheme.area_count(), 0);
      for (const auto& o : origin) {
        if (const auto slot = scheme.area_slot_of(o.second)) ++counts[*slot];
      }
      auto f = open_out(dir, "retention.tsv");
      std::vector<std::string> cols{"area_code", "papers"};
      for (const auto* c : all) cols.push_back(c->label);
      TableWriter t(f, cols);
      for (std::size_t a = 0; a < scheme.area_count(); ++a) {
        if (counts[a] == 0) continue;
        t.cell(scheme.areas()[a]).cell(counts[a]);
        for (const auto& r : per) {
          double pct = std::numeric_limits<double>::quiet_NaN();
          for (const auto& row : r.areas) {
            if (row.area_code == scheme.areas()[a]) pct = row.percent;
          }
          t.cell(pct);
        }
        t.end_row();
      }
      t.cell(std::string_view("total")).cell(origin.size());
      for (const auto& r : per) t.cell(r.total_percent);
      t.end_row();
      meta["misc_exclusive_papers"] = origin.size();
    }
    {
      const auto* origin = find_label(all, in.flow_origin);
      const Classification* target = nullptr;
      if (in.flow_target) {
        target = find_label(all, *in.flow_target);
        if (!target) throw Error("unknown flow target '" + *in.flow_target + "'");
      } else {
        target = find_label(all, "U1-F-0.8");
        if (!target) target = in.classifications.back();
      }
      if (origin != nullptr) {
        const auto flow = area_flow(*origin, *target, scheme);
        auto f = open_out(dir, "flow.tsv");
        std::vector<std::string> cols{"origin_area"};
        for (const int a : scheme.areas()) cols.push_back(std::to_string(a));
        TableWriter t(f, cols);
        for (std::size_t i = 0; i < flow.size(); ++i) {
          t.cell(scheme.areas()[i]);
          for (const double v : flow[i]) t.cell(v);
          t.end_row();
        }
        meta["flow"] = {{"origin", origin->label}, {"target", target->label}};
      }
    }
  }

  auto f = open_out(dir, "metadata.json");
  f << meta.dump(2) << '\n';
}

}  // namespace refclass
