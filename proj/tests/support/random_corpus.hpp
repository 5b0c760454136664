#pragma once

#include <random>
#include <string>
#include <vector>

#include "refclass/corpus.hpp"
#include "refclass/scheme.hpp"
#include "refclass/synth.hpp"

namespace refclass::testing {

struct SmallCorpus {
  CategoryScheme scheme;
  CorpusInput input;
  Corpus corpus;
};

inline int pick(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double unit(std::mt19937_64& rng) {
  return std::uniform_real_distribution<double>(0.0, 1.0)(rng);
}

inline std::string padded(const char* prefix, int n) {
  auto s = std::to_string(n);
  return prefix + std::string(s.size() < 4 ? 4 - s.size() : 0, '0') + s;
}

// A journal mixing regular, misc and multidisciplinary codes with assorted degrees.
inline JournalAssignment random_journal(std::mt19937_64& rng, const CategoryScheme& scheme,
                                        const std::string& id) {
  JournalAssignment j{id, {}};
  const auto regular = scheme.codes();
  const auto degree = [&] {
    switch (pick(rng, 0, 3)) {
      case 0: return 1.0;
      case 1: return 0.5;
      case 2: return 2.0;
      default: return 0.1 + unit(rng);
    }
  };
  const int kind = pick(rng, 0, 9);
  if (kind == 0 && scheme.multidisciplinary_code()) {
    j.raw.push_back({*scheme.multidisciplinary_code(), 1.0});
  } else if (kind <= 2 && !scheme.misc_codes().empty()) {
    auto it = scheme.misc_codes().begin();
    std::advance(it, pick(rng, 0, static_cast<int>(scheme.misc_codes().size()) - 1));
    j.raw.push_back({it->second, degree()});
    if (kind == 2) j.raw.push_back({regular[pick(rng, 0, static_cast<int>(regular.size()) - 1)], degree()});
  } else {
    const int n = pick(rng, 1, std::min<int>(3, static_cast<int>(regular.size())));
    for (int k = 0; k < n; ++k) {
      const int code = regular[pick(rng, 0, static_cast<int>(regular.size()) - 1)];
      bool seen = false;
      for (const auto& r : j.raw) seen |= r.code == code;
      if (!seen) j.raw.push_back({code, degree()});
    }
  }
  return j;
}

// Up to max_papers papers over up to max_categories categories. Reference lists may
// repeat a reference and some papers fall below the eligibility bound.
inline SmallCorpus random_small_corpus(std::mt19937_64& rng, int max_papers = 100,
                                       int max_categories = 16, int min_refs = kDefaultMinRefs) {
  const int k = pick(rng, 2, max_categories);
  const int areas = pick(rng, 1, std::min(4, k));
  auto scheme = CategoryScheme::from_rows(synthetic_scheme(k, areas));
  const int papers = pick(rng, 5, max_papers);
  const int journals = pick(rng, 1, std::max(1, papers / 3));
  const int pool = pick(rng, std::max(3, papers / 2), 3 * papers);

  CorpusInput in;
  for (int j = 0; j < journals; ++j) in.journals.push_back(random_journal(rng, scheme, padded("J", j)));
  for (int p = 0; p < papers; ++p) {
    const auto pid = padded("P", p);
    in.papers.emplace_back(pid, padded("J", pick(rng, 0, journals - 1)));
    const int refs = pick(rng, 0, 4) == 0 ? pick(rng, 0, 2) : pick(rng, 3, 12);
    for (int r = 0; r < refs; ++r) {
      const int ref = pick(rng, 0, pool - 1);
      in.references.emplace_back(pid, padded("R", ref));
      if (pick(rng, 0, 19) == 0) in.references.emplace_back(pid, padded("R", ref));
    }
  }
  auto corpus = Corpus::build(in, scheme, min_refs);
  return {std::move(scheme), std::move(in), std::move(corpus)};
}

}  // namespace refclass::testing
