#include "refclass/corpus.hpp"

#include <algorithm>
#include <cstring>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

namespace {

template <typename Ids>
std::optional<std::uint32_t> find_sorted(const Ids& ids, std::string_view id) {
  const auto it = std::lower_bound(ids.begin(), ids.end(), id,
                                   [](const std::string& a, std::string_view b) { return a < b; });
  if (it == ids.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - ids.begin());
}

}  // namespace

Corpus Corpus::build(CorpusInput input, const CategoryScheme& scheme, int min_refs) {
  if (input.papers.empty()) throw Error("corpus has no papers");

  Corpus c;
  c.categories_ = scheme.size();
  c.min_refs_ = min_refs;

  std::sort(input.journals.begin(), input.journals.end(),
            [](const JournalAssignment& a, const JournalAssignment& b) {
              return a.journal_id < b.journal_id;
            });
  for (std::size_t i = 1; i < input.journals.size(); ++i) {
    if (input.journals[i].journal_id == input.journals[i - 1].journal_id) {
      throw Error("duplicate journal '" + input.journals[i].journal_id + "'");
    }
  }
  c.journals_ = std::move(input.journals);
  c.journal_vectors_.reserve(c.journals_.size());
  for (const auto& j : c.journals_) c.journal_vectors_.push_back(fractionalize_journal(j, scheme));

  std::sort(input.papers.begin(), input.papers.end());
  c.paper_ids_.reserve(input.papers.size());
  c.paper_journal_.reserve(input.papers.size());
  for (std::size_t i = 0; i < input.papers.size(); ++i) {
    const auto& [pid, jid] = input.papers[i];
    if (i > 0 && pid == input.papers[i - 1].first) throw Error("duplicate paper '" + pid + "'");
    const auto it = std::lower_bound(
        c.journals_.begin(), c.journals_.end(), jid,
        [](const JournalAssignment& j, const std::string& id) { return j.journal_id < id; });
    if (it == c.journals_.end() || it->journal_id != jid) {
      throw Error("paper '" + pid + "' references unknown journal '" + jid + "'");
    }
    c.paper_ids_.push_back(pid);
    c.paper_journal_.push_back(static_cast<std::uint32_t>(it - c.journals_.begin()));
  }
  input.papers.clear();

  // Distinct reference ids, ascending.
  {
    std::vector<std::string_view> views;
    views.reserve(input.references.size());
    for (const auto& row : input.references) views.push_back(row.second);
    std::sort(views.begin(), views.end());
    views.erase(std::unique(views.begin(), views.end()), views.end());
    c.reference_ids_.assign(views.begin(), views.end());
  }
  std::unordered_map<std::string_view, ReferenceIndex> ref_lookup;
  ref_lookup.reserve(c.reference_ids_.size());
  for (std::size_t r = 0; r < c.reference_ids_.size(); ++r) {
    ref_lookup.emplace(c.reference_ids_[r], static_cast<ReferenceIndex>(r));
  }

  // Counting sort of the reference rows by paper; row order within a paper is kept.
  const std::size_t n = c.paper_ids_.size();
  std::vector<PaperIndex> row_paper(input.references.size());
  c.slot_offsets_.assign(n + 1, 0);
  for (std::size_t i = 0; i < input.references.size(); ++i) {
    const auto p = c.find_paper(input.references[i].first);
    if (!p) {
      throw Error("reference row " + std::to_string(i + 1) + " names unknown paper '" +
                  input.references[i].first + "'");
    }
    row_paper[i] = *p;
    ++c.slot_offsets_[*p + 1];
  }
  std::partial_sum(c.slot_offsets_.begin(), c.slot_offsets_.end(), c.slot_offsets_.begin());
  c.slot_refs_.resize(input.references.size());
  {
    std::vector<std::size_t> cursor(c.slot_offsets_.begin(), c.slot_offsets_.end() - 1);
    for (std::size_t i = 0; i < input.references.size(); ++i) {
      c.slot_refs_[cursor[row_paper[i]]++] = ref_lookup.at(input.references[i].second);
    }
  }

  // Transpose: walk papers in ascending order so each citer list is sorted.
  c.citer_offsets_.assign(c.reference_ids_.size() + 1, 0);
  for (const auto r : c.slot_refs_) ++c.citer_offsets_[r + 1];
  std::partial_sum(c.citer_offsets_.begin(), c.citer_offsets_.end(), c.citer_offsets_.begin());
  c.citers_.resize(c.slot_refs_.size());
  {
    std::vector<std::size_t> cursor(c.citer_offsets_.begin(), c.citer_offsets_.end() - 1);
    for (PaperIndex p = 0; p < n; ++p) {
      for (const auto r : c.references_of(p)) c.citers_[cursor[r]++] = p;
    }
  }

  c.compute_eligibility();
  return c;
}

void Corpus::compute_eligibility() {
  eligible_.assign(paper_ids_.size(), 0);
  eligible_count_ = 0;
  for (PaperIndex p = 0; p < paper_ids_.size(); ++p) {
    if (static_cast<long long>(ref_count(p)) >= min_refs_) {
      eligible_[p] = 1;
      ++eligible_count_;
    }
  }
}

Corpus Corpus::with_min_refs(int min_refs) const {
  Corpus c = *this;
  c.min_refs_ = min_refs;
  c.compute_eligibility();
  return c;
}

std::optional<PaperIndex> Corpus::find_paper(std::string_view id) const {
  return find_sorted(paper_ids_, id);
}

std::optional<ReferenceIndex> Corpus::find_reference(std::string_view id) const {
  return find_sorted(reference_ids_, id);
}

std::vector<std::pair<PaperIndex, int>> Corpus::misc_exclusive_papers(
    const CategoryScheme& scheme) const {
  std::vector<std::optional<int>> journal_area(journals_.size());
  for (std::size_t j = 0; j < journals_.size(); ++j) {
    std::optional<int> code;
    bool exclusive = true;
    for (const auto& r : journals_[j].raw) {
      if (r.degree == 0.0) continue;
      if (code && *code != r.code) exclusive = false;
      code = r.code;
    }
    if (exclusive && code) journal_area[j] = scheme.misc_area(*code);
  }
  std::vector<std::pair<PaperIndex, int>> out;
  for (PaperIndex p = 0; p < paper_ids_.size(); ++p) {
    if (const auto& area = journal_area[paper_journal_[p]]) out.emplace_back(p, *area);
  }
  return out;
}

std::vector<PaperIndex> Corpus::multidisciplinary_exclusive_papers(
    const CategoryScheme& scheme) const {
  const auto multi = scheme.multidisciplinary_code();
  std::vector<PaperIndex> out;
  if (!multi) return out;
  std::vector<std::uint8_t> journal_multi(journals_.size(), 0);
  for (std::size_t j = 0; j < journals_.size(); ++j) {
    journal_multi[j] = std::all_of(journals_[j].raw.begin(), journals_[j].raw.end(),
                                   [&](const RawAssignment& r) {
                                     return r.degree == 0.0 || r.code == *multi;
                                   });
  }
  for (PaperIndex p = 0; p < paper_ids_.size(); ++p) {
    if (journal_multi[paper_journal_[p]]) out.push_back(p);
  }
  return out;
}

// Binary cache ------------------------------------------------------------

namespace {

constexpr char kMagic[8] = {'R', 'C', 'C', 'O', 'R', 'P', '0', '1'};

void put_u64(std::ostream& out, std::uint64_t v) {
  unsigned char b[8];
  for (int i = 0; i < 8; ++i) b[i] = static_cast<unsigned char>(v >> (8 * i));
  out.write(reinterpret_cast<const char*>(b), 8);
}

void put_f64(std::ostream& out, double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  put_u64(out, bits);
}

void put_str(std::ostream& out, const std::string& s) {
  put_u64(out, s.size());
  out.write(s.data(), static_cast<std::streamsize>(s.size()));
}

std::uint64_t get_u64(std::istream& in) {
  unsigned char b[8];
  if (!in.read(reinterpret_cast<char*>(b), 8)) throw Error("corpus cache is truncated");
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(b[i]) << (8 * i);
  return v;
}

double get_f64(std::istream& in) {
  const std::uint64_t bits = get_u64(in);
  double v;
  std::memcpy(&v, &bits, sizeof v);
  return v;
}

std::string get_str(std::istream& in) {
  const auto n = get_u64(in);
  if (n > (1ull << 32)) throw Error("corpus cache is corrupt");
  std::string s(n, '\0');
  if (!in.read(s.data(), static_cast<std::streamsize>(n))) throw Error("corpus cache is truncated");
  return s;
}

}  // namespace

void Corpus::write_cache(std::ostream& out) const {
  out.write(kMagic, sizeof kMagic);
  put_u64(out, static_cast<std::uint64_t>(static_cast<std::int64_t>(min_refs_)));
  put_u64(out, journals_.size());
  for (const auto& j : journals_) {
    put_str(out, j.journal_id);
    put_u64(out, j.raw.size());
    for (const auto& r : j.raw) {
      put_u64(out, static_cast<std::uint64_t>(static_cast<std::int64_t>(r.code)));
      put_f64(out, r.degree);
    }
  }
  put_u64(out, paper_ids_.size());
  for (std::size_t p = 0; p < paper_ids_.size(); ++p) {
    put_str(out, paper_ids_[p]);
    put_u64(out, paper_journal_[p]);
  }
  put_u64(out, reference_ids_.size());
  for (const auto& r : reference_ids_) put_str(out, r);
  put_u64(out, slot_refs_.size());
  for (std::size_t p = 0; p < paper_ids_.size(); ++p) {
    put_u64(out, ref_count(static_cast<PaperIndex>(p)));
    for (const auto r : references_of(static_cast<PaperIndex>(p))) put_u64(out, r);
  }
}

Corpus Corpus::read_cache(std::istream& in, const CategoryScheme& scheme) {
  char magic[sizeof kMagic];
  if (!in.read(magic, sizeof magic) || std::memcmp(magic, kMagic, sizeof kMagic) != 0) {
    throw Error("not a corpus cache");
  }
  CorpusInput input;
  const int min_refs = static_cast<int>(static_cast<std::int64_t>(get_u64(in)));
  const auto journals = get_u64(in);
  for (std::uint64_t j = 0; j < journals; ++j) {
    JournalAssignment ja;
    ja.journal_id = get_str(in);
    const auto raws = get_u64(in);
    for (std::uint64_t k = 0; k < raws; ++k) {
      const int code = static_cast<int>(static_cast<std::int64_t>(get_u64(in)));
      ja.raw.push_back({code, get_f64(in)});
    }
    input.journals.push_back(std::move(ja));
  }
  const auto papers = get_u64(in);
  std::vector<std::string> ids;
  for (std::uint64_t p = 0; p < papers; ++p) {
    auto id = get_str(in);
    const auto j = get_u64(in);
    if (j >= input.journals.size()) throw Error("corpus cache is corrupt");
    input.papers.emplace_back(id, input.journals[j].journal_id);
    ids.push_back(std::move(id));
  }
  const auto refs = get_u64(in);
  std::vector<std::string> ref_ids;
  for (std::uint64_t r = 0; r < refs; ++r) ref_ids.push_back(get_str(in));
  const auto slots = get_u64(in);
  input.references.reserve(slots);
  for (std::uint64_t p = 0; p < papers; ++p) {
    const auto count = get_u64(in);
    for (std::uint64_t k = 0; k < count; ++k) {
      const auto r = get_u64(in);
      if (r >= ref_ids.size()) throw Error("corpus cache is corrupt");
      input.references.emplace_back(ids[p], ref_ids[r]);
    }
  }
  if (input.references.size() != slots) throw Error("corpus cache is corrupt");
  return build(std::move(input), scheme, min_refs);
}

// Table ingestion ---------------------------------------------------------

CorpusInput read_corpus_tables(const CorpusPaths& paths) {
  CorpusInput input;
  {
    TableReader t(paths.journals);
    const auto jcol = t.column("journal_id");
    const auto ccol = t.column("code");
    const auto dcol = t.find_column("degree");
    std::map<std::string, std::size_t> slot;
    while (t.next()) {
      const std::string where = t.source() + ":" + std::to_string(t.line_number());
      const auto& jid = t.field(jcol);
      if (jid.empty()) throw Error(where + ": empty journal_id");
      RawAssignment raw{static_cast<int>(parse_integer(t.field(ccol), where + " code")), 1.0};
      if (dcol && !t.field(*dcol).empty()) raw.degree = parse_double(t.field(*dcol), where + " degree");
      auto [it, inserted] = slot.emplace(jid, input.journals.size());
      if (inserted) input.journals.push_back({jid, {}});
      input.journals[it->second].raw.push_back(raw);
    }
  }
  {
    TableReader t(paths.papers);
    const auto pcol = t.column("paper_id");
    const auto jcol = t.column("journal_id");
    while (t.next()) {
      if (t.field(pcol).empty()) {
        throw Error(t.source() + ":" + std::to_string(t.line_number()) + ": empty paper_id");
      }
      input.papers.emplace_back(t.field(pcol), t.field(jcol));
    }
  }
  {
    TableReader t(paths.references);
    const auto pcol = t.column("paper_id");
    const auto rcol = t.column("reference_id");
    while (t.next()) {
      if (t.field(rcol).empty()) {
        throw Error(t.source() + ":" + std::to_string(t.line_number()) + ": empty reference_id");
      }
      input.references.emplace_back(t.field(pcol), t.field(rcol));
    }
  }
  return input;
}

Corpus load_corpus(const CorpusPaths& paths, const CategoryScheme& scheme, int min_refs) {
  return Corpus::build(read_corpus_tables(paths), scheme, min_refs);
}

std::vector<std::string> eligible_papers(const Corpus& corpus, int min_refs) {
  std::vector<std::string> out;
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    if (static_cast<long long>(corpus.ref_count(p)) >= min_refs) out.push_back(corpus.paper_id(p));
  }
  return out;
}

double unreclassified_percentage(const Corpus& corpus) {
  const auto n = corpus.paper_count();
  return 100.0 * static_cast<double>(n - corpus.eligible_count()) / static_cast<double>(n);
}

}  // namespace refclass
