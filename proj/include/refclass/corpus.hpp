#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "refclass/scheme.hpp"
#include "refclass/weight_vector.hpp"

namespace refclass {

using PaperIndex = std::uint32_t;
using ReferenceIndex = std::uint32_t;

inline constexpr int kDefaultMinRefs = 3;

// In-memory form of the three input tables.
struct CorpusInput {
  std::vector<JournalAssignment> journals;
  // (paper_id, journal_id)
  std::vector<std::pair<std::string, std::string>> papers;
  // (paper_id, reference_id); repeated pairs are distinct reference slots.
  std::vector<std::pair<std::string, std::string>> references;
};

// Papers, their journal-derived starting vectors and reference slots, plus
// the reference -> citing papers transpose. Immutable after construction.
//
// Papers are indexed in ascending paper_id order and references in ascending
// reference_id order (byte-wise). A paper's slots keep input row order; each
// reference's citer list is ascending by paper index, one entry per slot.
class Corpus {
 public:
  // Throws Error on an empty corpus, a duplicate paper id, a paper with an
  // unknown journal, or a reference row naming an unknown paper.
  static Corpus build(CorpusInput input, const CategoryScheme& scheme,
                      int min_refs = kDefaultMinRefs);

  std::size_t paper_count() const { return paper_ids_.size(); }
  std::size_t reference_count() const { return reference_ids_.size(); }
  std::size_t slot_count() const { return slot_refs_.size(); }
  std::size_t category_count() const { return categories_; }

  const std::string& paper_id(PaperIndex p) const { return paper_ids_[p]; }
  std::span<const std::string> paper_ids() const { return paper_ids_; }
  std::optional<PaperIndex> find_paper(std::string_view id) const;
  const JournalAssignment& journal_of(PaperIndex p) const { return journals_[paper_journal_[p]]; }
  const WeightVector& initial_vector(PaperIndex p) const {
    return journal_vectors_[paper_journal_[p]];
  }

  std::span<const ReferenceIndex> references_of(PaperIndex p) const {
    return {slot_refs_.data() + slot_offsets_[p], slot_refs_.data() + slot_offsets_[p + 1]};
  }
  std::uint32_t ref_count(PaperIndex p) const {
    return static_cast<std::uint32_t>(slot_offsets_[p + 1] - slot_offsets_[p]);
  }

  const std::string& reference_id(ReferenceIndex r) const { return reference_ids_[r]; }
  std::optional<ReferenceIndex> find_reference(std::string_view id) const;
  std::span<const PaperIndex> citers_of(ReferenceIndex r) const {
    return {citers_.data() + citer_offsets_[r], citers_.data() + citer_offsets_[r + 1]};
  }

  int min_refs() const { return min_refs_; }
  bool eligible(PaperIndex p) const { return eligible_[p] != 0; }
  std::span<const std::uint8_t> eligibility_mask() const { return eligible_; }
  std::size_t eligible_count() const { return eligible_count_; }
  // Same data, eligibility recomputed for another minimum reference count.
  Corpus with_min_refs(int min_refs) const;

  // Papers whose journal is assigned to exactly one misc code and nothing
  // else, paired with the area that misc code belongs to.
  std::vector<std::pair<PaperIndex, int>> misc_exclusive_papers(const CategoryScheme& scheme) const;
  // Papers whose journal is assigned only to the multidisciplinary code.
  std::vector<PaperIndex> multidisciplinary_exclusive_papers(const CategoryScheme& scheme) const;

  // Lossless binary cache. read_cache re-derives vectors from `scheme`.
  void write_cache(std::ostream& out) const;
  static Corpus read_cache(std::istream& in, const CategoryScheme& scheme);

 private:
  void compute_eligibility();

  std::size_t categories_ = 0;
  std::vector<std::string> paper_ids_;
  std::vector<std::uint32_t> paper_journal_;
  std::vector<JournalAssignment> journals_;
  std::vector<WeightVector> journal_vectors_;
  std::vector<std::size_t> slot_offsets_;
  std::vector<ReferenceIndex> slot_refs_;
  std::vector<std::string> reference_ids_;
  std::vector<std::size_t> citer_offsets_;
  std::vector<PaperIndex> citers_;
  int min_refs_ = kDefaultMinRefs;
  std::vector<std::uint8_t> eligible_;
  std::size_t eligible_count_ = 0;
};

struct CorpusPaths {
  std::string journals;
  std::string papers;
  std::string references;
};

// journals(journal_id, code, degree?), papers(paper_id, journal_id),
// references(paper_id, reference_id).
CorpusInput read_corpus_tables(const CorpusPaths& paths);
Corpus load_corpus(const CorpusPaths& paths, const CategoryScheme& scheme,
                   int min_refs = kDefaultMinRefs);

// Ids of the papers with at least `min_refs` references, ascending.
std::vector<std::string> eligible_papers(const Corpus& corpus, int min_refs = kDefaultMinRefs);
// Percentage of papers below the corpus' own min_refs.
double unreclassified_percentage(const Corpus& corpus);

}  // namespace refclass
