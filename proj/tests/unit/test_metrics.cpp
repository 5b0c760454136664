#include <doctest.h>

#include <cmath>
#include <random>

#include "refclass/assign.hpp"
#include "refclass/engine.hpp"
#include "refclass/error.hpp"
#include "refclass/metrics.hpp"
#include "refclass/report.hpp"
#include "support/brute_metrics.hpp"
#include "support/fixtures.hpp"
#include "support/random_corpus.hpp"

using namespace refclass;
namespace brute = refclass::testing::brute;

namespace {

Classification make(std::vector<std::vector<double>> rows, std::string label = "x") {
  Classification c;
  c.label = std::move(label);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.paper_ids.push_back("p" + std::to_string(i));
    c.vectors.push_back(WeightVector::from_dense(rows[i]).normalized());
  }
  return c;
}

}  // namespace

TEST_CASE("category sizes and granularity") {
  CHECK(category_sizes(make({{1, 0}, {1, 0}, {1, 0}, {1, 0}}), 2) == std::vector<double>{4, 0});
  CHECK(category_sizes(make({{0.5, 0.5}, {0.5, 0.5}}), 2) == std::vector<double>{1, 1});
  CHECK(granularity(make({{1, 0}, {1, 0}, {1, 0}, {1, 0}}), 2) == 0.25);
  // Eight papers spread uniformly over four categories: K/N.
  CHECK(granularity(make(std::vector<std::vector<double>>(8, {1, 1, 1, 1})), 4) == 0.5);
}

TEST_CASE("size CV") {
  CHECK(size_cv(make({{1, 0}, {0, 1}}), 2) == 0.0);
  CHECK(size_cv(make({{1, 0}, {0, 1}, {0, 1}, {0, 1}}), 3) == 0.5);
  const auto m = structure_metrics(make({{1, 0}, {0, 1}, {0, 1}, {0, 1}}), 3);
  CHECK(m.non_empty_categories == 2);
  CHECK(m.max_size == 3);
  CHECK(m.min_size == 1);
}

TEST_CASE("refs-per-paper ACV") {
  const auto c = make({{1}, {1}});
  const std::vector<double> same{5, 5}, spread{2, 4};
  CHECK(refs_per_paper_acv(c, same, 1) == 0.0);
  CHECK(refs_per_paper_acv(c, spread, 1) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK_THROWS_AS(refs_per_paper_acv(c, std::vector<double>{1}, 1), Error);
}

TEST_CASE("coincidence") {
  const auto a = make({{0.5, 0.5}});
  CHECK(coincidence_percentage(a, a) == 100.0);
  CHECK(coincidence_percentage(make({{1, 0}}), make({{0, 1}})) == 0.0);
  CHECK(coincidence_percentage(a, make({{1, 0}})) == 50.0);
  Classification other = make({{1, 0}});
  other.paper_ids = {"elsewhere"};
  CHECK_THROWS_AS(coincidence_percentage(a, other), Error);
}

TEST_CASE("rank metrics") {
  const auto a = make({{1, 0, 0}, {0, 1, 0}});
  const auto same = rank_metrics(a, a);
  CHECK(same.a_winner_avg_rank == 1.0);
  CHECK(same.a_winner_missing == 0);
  const auto disjoint = rank_metrics(a, make({{0, 0, 1}, {0, 0, 1}}));
  CHECK(disjoint.a_winner_missing == 2);
  CHECK(std::isnan(disjoint.a_winner_avg_rank));
  const auto second = rank_metrics(make({{1, 0, 0}}), make({{0.3, 0.7, 0}}));
  CHECK(second.a_winner_avg_rank == 2.0);
  CHECK(second.b_winner_missing == 1);
  const auto both = rank_metrics(make({{0.6, 0.4, 0}}), make({{0.3, 0.7, 0}}));
  CHECK(both.a_winner_avg_rank == 2.0);
  CHECK(both.b_winner_avg_rank == 2.0);
}

TEST_CASE("assignment histogram") {
  const auto singles = assignment_histogram(make({{1, 0}, {0, 1}}));
  CHECK(singles.average == 1.0);
  CHECK(singles.percent[0] == 100.0);
  const auto mixed = assignment_histogram(make({{1, 0, 0}, {1, 1, 1}}));
  CHECK(mixed.average == 2.0);
  CHECK(mixed.counts[2] == 1);
}

TEST_CASE("correlation") {
  const auto a = make({{1, 0, 0}, {0, 1, 0}, {0, 1, 0}});
  CHECK(category_correlation(a, a, 3) == doctest::Approx(1.0));
  auto doubled = a;
  for (const auto& v : a.vectors) doubled.vectors.push_back(v);
  doubled.paper_ids = {"a", "b", "c", "d", "e", "f"};
  CHECK(category_correlation(a, doubled, 3) == doctest::Approx(1.0));
  CHECK(std::isnan(category_correlation(make({{1, 1, 1}}), a, 3)));
}

TEST_CASE("area aggregate, flow and retention") {
  const auto s = refclass::testing::tiny_scheme();  // c1, c2 in area 1100; c3 in 1200
  const auto one_area = make({{1, 0, 0}, {0, 1, 0}});
  CHECK(area_aggregate(one_area, s) == std::vector<double>{100.0, 0.0});
  CHECK(area_aggregate(make({{1, 0, 1}}), s) == std::vector<double>{50.0, 50.0});

  const auto diag = area_flow(one_area, one_area, s);
  CHECK(diag[0][0] == 2.0);
  CHECK(diag[0][1] == 0.0);
  const auto moved = area_flow(make({{1, 0, 0}}), make({{0, 0, 1}}), s);
  CHECK(moved[0][1] == 1.0);
  CHECK(moved[0][0] == 0.0);

  const std::vector<std::pair<std::string, int>> origin{{"p0", 1100}, {"p1", 1100}};
  const auto kept = same_area_retention(origin, one_area, s);
  CHECK(kept.total_percent == 100.0);
  REQUIRE(kept.areas.size() == 1);
  CHECK(kept.areas[0].papers == 2);
  CHECK(same_area_retention(origin, make({{0, 0, 1}, {0, 0, 1}}), s).total_percent == 0.0);
}

TEST_CASE("reference filters") {
  const auto s = refclass::testing::tiny_scheme();
  CorpusInput in;
  in.journals = {refclass::testing::journal("J", {1102})};
  in.papers = {{"p", "J"}};
  in.references = {{"p", "old"}, {"p", "new"}, {"p", "unindexed"}, {"p", "unknown"}};
  const auto corpus = Corpus::build(in, s);
  ReferenceAttributes attrs;
  attrs.by_id = {{"new", {true, 2019}}, {"old", {true, 2001}}, {"unindexed", {false, 2020}}};
  const auto c = journal_baseline(corpus);
  CHECK(reference_counts(corpus, c) == std::vector<double>{4});
  CHECK(reference_counts(corpus, c, {&attrs, true, std::nullopt, 0}) == std::vector<double>{2});
  CHECK(reference_counts(corpus, c, {&attrs, false, 3, 2020}) == std::vector<double>{2});
  CHECK(reference_counts(corpus, c, {&attrs, true, 3, 2020}) == std::vector<double>{1});
  CHECK_THROWS_AS(reference_counts(corpus, c, {nullptr, true, std::nullopt, 0}), Error);
}

TEST_CASE("metrics match brute-force recomputation on engine output") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sc = refclass::testing::random_small_corpus(rng);
    const auto& corpus = sc.corpus;
    const auto k = sc.scheme.size();
    if (corpus.eligible_count() == 0) continue;
    EngineConfig e;
    e.fractional = trial % 2 == 1;
    const auto r = run(corpus, e);
    const auto base = journal_baseline(corpus);
    const auto pruned = prune_classification(r.u1, {0.67, 5});
    const auto db = brute::dense(base, k), du = brute::dense(r.u1, k), dp = brute::dense(pruned, k);

    CHECK(granularity(r.u1, k) == doctest::Approx(brute::granularity(du, k)).epsilon(1e-9));
    CHECK(size_cv(pruned, k) == doctest::Approx(brute::size_cv(dp, k)).epsilon(1e-9));

    const auto counts = reference_counts(corpus, r.u1);
    std::map<std::string, double> by_id;
    for (std::size_t i = 0; i < counts.size(); ++i) by_id[r.u1.paper_ids[i]] = counts[i];
    CHECK(refs_per_paper_acv(r.u1, counts, k) == doctest::Approx(brute::acv(du, by_id, k)).epsilon(1e-9));

    CHECK(coincidence_percentage(base, pruned) == doctest::Approx(brute::coincidence(db, dp, k)).epsilon(1e-9));
    const auto rm = rank_metrics(base, r.u1);
    const auto br = brute::ranks(db, du);
    CHECK(rm.a_winner_missing == static_cast<std::size_t>(br.a_missing));
    CHECK(rm.b_winner_missing == static_cast<std::size_t>(br.b_missing));
    if (br.a_missing < static_cast<int>(rm.common_papers)) {
      CHECK(rm.a_winner_avg_rank == doctest::Approx(br.a_avg).epsilon(1e-9));
    }
    if (br.b_missing < static_cast<int>(rm.common_papers)) {
      CHECK(rm.b_winner_avg_rank == doctest::Approx(br.b_avg).epsilon(1e-9));
    }
    const double rho = category_correlation(base, r.u1, k);
    const double brho = brute::pearson(brute::sizes(db, k), brute::sizes(du, k));
    if (!std::isnan(rho)) CHECK(rho == doctest::Approx(brho).epsilon(1e-9));

    const auto areas = area_aggregate(r.u1, sc.scheme);
    const auto bareas = brute::area_percent(du, sc.scheme);
    for (std::size_t a = 0; a < areas.size(); ++a) CHECK(areas[a] == doctest::Approx(bareas[a]).epsilon(1e-9));

    const auto f = area_flow(base, r.u1, sc.scheme);
    const auto bf = brute::flow(db, du, sc.scheme);
    for (std::size_t i = 0; i < f.size(); ++i) {
      for (std::size_t j = 0; j < f.size(); ++j) CHECK(f[i][j] == doctest::Approx(bf[i][j]).epsilon(1e-9));
    }

    std::vector<std::pair<std::string, int>> misc;
    for (const auto& [p, area] : corpus.misc_exclusive_papers(sc.scheme)) misc.emplace_back(corpus.paper_id(p), area);
    const auto ret = same_area_retention(misc, r.u1, sc.scheme);
    if (ret.total_papers > 0) {
      CHECK(ret.total_percent == doctest::Approx(brute::retention(misc, du, sc.scheme)).epsilon(1e-9));
      CHECK(same_area_retention(misc, r.jl, sc.scheme).total_percent == 100.0);
    }
  }
}
