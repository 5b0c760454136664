#include <doctest.h>

#include <random>

#include "refclass/engine.hpp"
#include "refclass/kernels.hpp"
#include "refclass/synth.hpp"
#include "support/fixtures.hpp"
#include "support/random_corpus.hpp"

using namespace refclass;
using refclass::testing::journal;
using refclass::testing::tiny_scheme;

namespace {

std::vector<std::uint8_t> all_ones(std::size_t n) { return std::vector<std::uint8_t>(n, 1); }

// Dense view of one store row over three categories.
std::vector<double> row3(const VectorStore& s, std::size_t i) { return s.vector(i).to_dense(3); }

}  // namespace

TEST_CASE("accumulate: single citer is a fixed point") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J", {1102, 1202})};
  in.papers = {{"a", "J"}};
  in.references = {{"a", "r"}};
  const auto c = Corpus::build(in, s, 0);
  const auto papers = initial_vectors(c);
  for (const bool fractional : {false, true}) {
    const auto refs = kernels::serial::accumulate_references(c, papers, all_ones(1), fractional);
    CHECK(refs.vector(0) == papers.vector(0));
  }
}

TEST_CASE("accumulate: symmetric and fractional weighting") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J1", {1102}), journal("J2", {1103})};
  in.papers = {{"A", "J1"}, {"B", "J2"}};
  in.references = {{"A", "r"}, {"B", "r"}, {"B", "x"}, {"B", "y"}, {"B", "z"}};
  const auto c = Corpus::build(in, s, 0);
  const auto papers = initial_vectors(c);
  const auto r = *c.find_reference("r");

  const auto nf = kernels::serial::accumulate_references(c, papers, all_ones(2), false);
  CHECK(row3(nf, r) == std::vector<double>{0.5, 0.5, 0.0});

  const auto f = kernels::serial::accumulate_references(c, papers, all_ones(2), true);
  const auto w = row3(f, r);
  CHECK(w[0] == doctest::Approx(0.8).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(0.2).epsilon(1e-15));

  // Excluding B as a citer leaves A alone.
  const std::vector<std::uint8_t> only_a{1, 0};
  CHECK(row3(kernels::serial::accumulate_references(c, papers, only_a, true), r) ==
        std::vector<double>{1.0, 0.0, 0.0});
  CHECK(kernels::serial::accumulate_references(c, papers, only_a, true).row(*c.find_reference("x")).empty());
}

namespace {

struct OnePaper {
  Corpus corpus;
  VectorStore previous;
};

OnePaper one_paper(std::vector<int> journal_codes, int refs) {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J", std::move(journal_codes))};
  in.papers = {{"p", "J"}};
  for (int r = 0; r < refs; ++r) in.references.emplace_back("p", "r" + std::to_string(r));
  auto c = Corpus::build(in, s, 0);
  auto prev = initial_vectors(c);
  return {std::move(c), std::move(prev)};
}

VectorStore refs_from(std::vector<std::vector<double>> dense) {
  std::vector<WeightVector> v;
  for (const auto& d : dense) v.push_back(WeightVector::from_dense(d));
  return VectorStore::from_vectors(v);
}

}  // namespace

TEST_CASE("propagate limited: masked sum") {
  const auto op = one_paper({1102, 1103}, 2);
  const auto refs = refs_from({{0.5, 0.0, 0.5}, {0.0, 1.0, 0.0}});
  const auto out = kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), true);
  const auto w = row3(out.papers, 0);
  CHECK(w[0] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(w[1] == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(w[2] == 0.0);
  CHECK(out.stalled == 0);
}

TEST_CASE("propagate limited: singleton support is a fixed point") {
  const auto op = one_paper({1102}, 2);
  const auto refs = refs_from({{0.2, 0.3, 0.5}, {0.0, 1.0, 0.0}});
  const auto out = kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), true);
  CHECK(row3(out.papers, 0) == std::vector<double>{1.0, 0.0, 0.0});
}

TEST_CASE("propagate limited: disjoint references stall") {
  const auto op = one_paper({1102, 1103}, 2);
  const auto refs = refs_from({{0.0, 0.0, 1.0}, {0.0, 0.0, 1.0}});
  const auto out = kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), true);
  CHECK(out.papers.vector(0) == op.previous.vector(0));
  CHECK(out.stalled == 1);
}

TEST_CASE("propagate unlimited") {
  SUBCASE("single reference") {
    const auto op = one_paper({1102}, 1);
    const auto refs = refs_from({{0.25, 0.25, 0.5}});
    CHECK(row3(kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), false).papers, 0) ==
          std::vector<double>{0.25, 0.25, 0.5});
  }
  SUBCASE("symmetric pair") {
    const auto op = one_paper({1102}, 2);
    const auto refs = refs_from({{1, 0, 0}, {0, 1, 0}});
    CHECK(row3(kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), false).papers, 0) ==
          std::vector<double>{0.5, 0.5, 0.0});
  }
  SUBCASE("three references") {
    const auto op = one_paper({1102}, 3);
    const auto refs = refs_from({{0.5, 0.5, 0}, {1, 0, 0}, {0, 0, 1}});
    const auto w = row3(kernels::serial::propagate(op.corpus, refs, op.previous, all_ones(1), false).papers, 0);
    CHECK(w[0] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(w[1] == doctest::Approx(1.0 / 6).epsilon(1e-15));
    CHECK(w[2] == doctest::Approx(1.0 / 3).epsilon(1e-15));
  }
}

TEST_CASE("rows outside the update mask are copied") {
  const auto op = one_paper({1102, 1103}, 2);
  const auto refs = refs_from({{0, 1, 0}, {0, 1, 0}});
  const std::vector<std::uint8_t> frozen{0};
  const auto out = kernels::serial::propagate(op.corpus, refs, op.previous, frozen, false);
  CHECK(out.papers == op.previous);
}

TEST_CASE("squared difference") {
  const auto a = refs_from({{1, 0, 0}});
  const auto b = refs_from({{0, 1, 0}});
  CHECK(kernels::serial::squared_difference(a, a) == 0.0);
  CHECK(kernels::serial::squared_difference(a, b) == 2.0);
  CHECK(kernels::parallel::squared_difference(a, b, 4) == 2.0);
  CHECK_THROWS(kernels::serial::squared_difference(a, refs_from({{1, 0, 0}, {1, 0, 0}})));
}

TEST_CASE("serial and parallel kernels agree bit for bit") {
  SynthParams p;
  p.seed = 9;
  p.papers = 5000;
  p.misc_journals = 0.1;
  p.multidisciplinary_journals = 0.05;
  p.low_ref_papers = 0.05;
  const auto sc = generate_corpus(p);
  const auto scheme = CategoryScheme::from_rows(sc.scheme);
  const auto c = Corpus::build(sc.input, scheme);
  const auto papers = initial_vectors(c);
  const auto mask = c.eligibility_mask();
  for (const bool fractional : {false, true}) {
    const auto ref_s = kernels::serial::accumulate_references(c, papers, all_ones(c.paper_count()), fractional);
    for (const int threads : {1, 2, 3, 8}) {
      const auto ref_p = kernels::parallel::accumulate_references(c, papers, all_ones(c.paper_count()), fractional, threads);
      CHECK(ref_p == ref_s);
      for (const bool limited : {true, false}) {
        const auto ps = kernels::serial::propagate(c, ref_s, papers, mask, limited);
        const auto pp = kernels::parallel::propagate(c, ref_p, papers, mask, limited, threads);
        CHECK(pp.papers == ps.papers);
        CHECK(pp.stalled == ps.stalled);
        CHECK(kernels::parallel::squared_difference(pp.papers, papers, threads) ==
              kernels::serial::squared_difference(ps.papers, papers));
      }
    }
  }
}
