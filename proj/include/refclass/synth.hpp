#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "refclass/corpus.hpp"
#include "refclass/scheme.hpp"

namespace refclass {

// Parameters of the planted-community corpus generator. Every paper has a
// planted category; references are drawn mostly from a pool of sources that
// belong to that category, so citation structure reveals the planted label.
struct SynthParams {
  std::uint64_t seed = 0;  // required by the CLI
  int papers = 10000;
  int categories = 16;
  int areas = 4;
  int papers_per_journal = 50;
  int min_refs = 5;
  int max_refs = 30;
  // Probability that a reference slot is drawn from the paper's own pool.
  double in_category = 0.85;
  // Average citing slots per pool source.
  double cites_per_source = 4.0;
  // Share of regular journals assigned to two categories of the same area.
  double two_category_journals = 0.2;
  // Share of journals whose assigned category is replaced by a wrong one.
  double noise = 0.0;
  // Share of journals assigned to their area's misc code.
  double misc_journals = 0.0;
  // Share of journals assigned to the multidisciplinary code.
  double multidisciplinary_journals = 0.0;
  // Exact share of papers given fewer than 3 references (0..2).
  double low_ref_papers = 0.0;

  // Throws Error on out-of-range values.
  void validate() const;
};

inline constexpr const char* kSynthGenerator = "std::mt19937_64";

struct SynthCorpus {
  std::vector<SchemeRow> scheme;
  CorpusInput input;
  // (paper_id, planted category code), ascending paper_id.
  std::vector<std::pair<std::string, int>> planted;
};

SynthCorpus generate_corpus(const SynthParams& params);

// Synthetic scheme: `areas` areas (codes 1100, 1200, ...), categories dealt
// round-robin with codes area+2, area+3, ..., a misc code area+1 per area and
// multidisciplinary code 1000.
std::vector<SchemeRow> synthetic_scheme(int categories, int areas);

// Writes scheme.tsv, journals.tsv, papers.tsv, references.tsv, planted.tsv
// and synth.json into `dir` (created if missing).
void write_synth_corpus(const SynthCorpus& corpus, const SynthParams& params,
                        const std::string& dir);

}  // namespace refclass
