#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "refclass/corpus.hpp"
#include "refclass/error.hpp"
#include "support/fixtures.hpp"
#include "support/random_corpus.hpp"

using namespace refclass;
using refclass::testing::journal;
using refclass::testing::tiny_scheme;

namespace {

CorpusInput counts_input(const std::vector<int>& counts) {
  CorpusInput in;
  in.journals.push_back(journal("J1", {1102}));
  for (std::size_t p = 0; p < counts.size(); ++p) {
    const auto pid = "P" + std::to_string(p);
    in.papers.emplace_back(pid, "J1");
    for (int r = 0; r < counts[p]; ++r) in.references.emplace_back(pid, "R" + std::to_string(r));
  }
  return in;
}

}  // namespace

TEST_CASE("small corpus structure") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J1", {1102}), journal("J2", {1103, 1202})};
  in.papers = {{"p1", "J1"}, {"p2", "J2"}, {"p3", "J1"}};
  in.references = {{"p1", "r1"}, {"p1", "r2"}, {"p2", "r1"}, {"p3", "r3"}, {"p3", "r4"}};
  const auto c = Corpus::build(in, s);
  CHECK(c.paper_count() == 3);
  CHECK(c.reference_count() <= 5);
  CHECK(c.reference_count() == 4);
  const auto r1 = *c.find_reference("r1");
  CHECK(c.citers_of(r1).size() == 2);
  CHECK(c.initial_vector(*c.find_paper("p2")).size() == 2);
  CHECK(c.initial_vector(*c.find_paper("p2")).sum() == doctest::Approx(1.0));
}

TEST_CASE("repeated reference rows count with multiplicity") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J1", {1102})};
  in.papers = {{"p1", "J1"}};
  in.references = {{"p1", "r1"}, {"p1", "r1"}};
  const auto c = Corpus::build(in, s);
  CHECK(c.ref_count(0) == 2);
  CHECK(c.reference_count() == 1);
  CHECK(c.citers_of(0).size() == 2);
}

TEST_CASE("eligibility filter") {
  const auto s = tiny_scheme();
  const auto c = Corpus::build(counts_input({0, 2, 3, 7}), s, 3);
  CHECK(c.eligible_count() == 2);
  CHECK(unreclassified_percentage(c) == 50.0);
  CHECK(eligible_papers(c, 3) == std::vector<std::string>{"P2", "P3"});
  const auto all = c.with_min_refs(0);
  CHECK(all.eligible_count() == 4);
  CHECK(unreclassified_percentage(all) == 0.0);
}

TEST_CASE("ingestion errors") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J1", {1102})};
  in.papers = {{"p1", "J1"}, {"p1", "J1"}};
  CHECK_THROWS_AS(Corpus::build(in, s), Error);
  in.papers = {{"p1", "J9"}};
  CHECK_THROWS_AS(Corpus::build(in, s), Error);
  in.papers = {{"p1", "J1"}};
  in.references = {{"p2", "r1"}};
  CHECK_THROWS_AS(Corpus::build(in, s), Error);
  in.journals.push_back(journal("J1", {1103}));
  in.references.clear();
  CHECK_THROWS_AS(Corpus::build(in, s), Error);
}

TEST_CASE("citer index is the transpose of the reference lists") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sc = refclass::testing::random_small_corpus(rng);
    const auto& c = sc.corpus;
    std::multiset<std::pair<std::string, std::string>> forward, backward, raw;
    for (PaperIndex p = 0; p < c.paper_count(); ++p) {
      for (const auto r : c.references_of(p)) forward.emplace(c.paper_id(p), c.reference_id(r));
    }
    for (ReferenceIndex r = 0; r < c.reference_count(); ++r) {
      const auto citers = c.citers_of(r);
      CHECK(std::is_sorted(citers.begin(), citers.end()));
      for (const auto p : citers) backward.emplace(c.paper_id(p), c.reference_id(r));
    }
    for (const auto& pr : sc.input.references) raw.insert(pr);
    CHECK(forward == backward);
    CHECK(forward == raw);
  }
}

TEST_CASE("binary cache round trip") {
  std::mt19937_64 rng(5);
  const auto sc = refclass::testing::random_small_corpus(rng);
  std::stringstream buf;
  sc.corpus.write_cache(buf);
  const auto back = Corpus::read_cache(buf, sc.scheme);
  REQUIRE(back.paper_count() == sc.corpus.paper_count());
  REQUIRE(back.slot_count() == sc.corpus.slot_count());
  for (PaperIndex p = 0; p < back.paper_count(); ++p) {
    CHECK(back.paper_id(p) == sc.corpus.paper_id(p));
    CHECK(back.initial_vector(p) == sc.corpus.initial_vector(p));
    CHECK(std::ranges::equal(back.references_of(p), sc.corpus.references_of(p)));
  }
  std::stringstream junk("not a cache");
  CHECK_THROWS_AS(Corpus::read_cache(junk, sc.scheme), Error);
}

TEST_CASE("misc-exclusive papers") {
  const auto s = tiny_scheme();
  CorpusInput in;
  in.journals = {journal("J1", {1101}), journal("J2", {1101, 1102}), journal("J3", {1000})};
  in.papers = {{"a", "J1"}, {"b", "J2"}, {"c", "J3"}};
  const auto c = Corpus::build(in, s, 0);
  const auto misc = c.misc_exclusive_papers(s);
  REQUIRE(misc.size() == 1);
  CHECK(c.paper_id(misc[0].first) == "a");
  CHECK(misc[0].second == 1100);
  const auto multi = c.multidisciplinary_exclusive_papers(s);
  REQUIRE(multi.size() == 1);
  CHECK(c.paper_id(multi[0]) == "c");
}
