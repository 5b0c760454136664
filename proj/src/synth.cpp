#include "refclass/synth.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

namespace {

// Draws built directly on the engine's raw output so generated files do not
// depend on the standard library's distribution implementations.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : rng_(seed) {}

  double uniform() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }
  std::size_t index(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
  }
  int between(int lo, int hi) { return lo + static_cast<int>(index(static_cast<std::size_t>(hi - lo + 1))); }
  bool chance(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[index(i)]);
  }

 private:
  std::mt19937_64 rng_;
};

std::string padded(const char* prefix, std::size_t value, int width) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%s%0*zu", prefix, width, value);
  return buf;
}

void check_fraction(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw Error(std::string(name) + " must lie in [0, 1]");
}

}  // namespace

void SynthParams::validate() const {
  if (papers < 1) throw Error("papers must be positive");
  if (categories < 1) throw Error("categories must be positive");
  if (areas < 1 || areas > 26 || areas > categories) {
    throw Error("areas must lie in [1, min(26, categories)]");
  }
  if ((categories + areas - 1) / areas > 97) throw Error("too many categories per area");
  if (papers_per_journal < 1) throw Error("papers_per_journal must be positive");
  if (min_refs < 3 || max_refs < min_refs) throw Error("need 3 <= min_refs <= max_refs");
  if (!(cites_per_source > 0.0)) throw Error("cites_per_source must be positive");
  check_fraction(in_category, "in_category");
  check_fraction(two_category_journals, "two_category_journals");
  check_fraction(noise, "noise");
  check_fraction(misc_journals, "misc_journals");
  check_fraction(multidisciplinary_journals, "multidisciplinary_journals");
  check_fraction(low_ref_papers, "low_ref_papers");
  if (misc_journals + multidisciplinary_journals > 1.0) {
    throw Error("misc_journals + multidisciplinary_journals must not exceed 1");
  }
}

std::vector<SchemeRow> synthetic_scheme(int categories, int areas) {
  std::vector<SchemeRow> rows;
  rows.push_back({1000, 1000, CodeKind::multidisciplinary});
  for (int a = 0; a < areas; ++a) {
    const int area = 1100 + 100 * a;
    rows.push_back({area + 1, area, CodeKind::misc});
  }
  for (int k = 0; k < categories; ++k) {
    const int area = 1100 + 100 * (k % areas);
    rows.push_back({area + 2 + k / areas, area, CodeKind::regular});
  }
  return rows;
}

SynthCorpus generate_corpus(const SynthParams& params) {
  params.validate();
  Draw draw(params.seed);
  SynthCorpus out;
  out.scheme = synthetic_scheme(params.categories, params.areas);

  const auto K = static_cast<std::size_t>(params.categories);
  const auto A = static_cast<std::size_t>(params.areas);
  // Category k sits in area k % A with code 1100 + 100*(k%A) + 2 + k/A.
  const auto code_of = [&](std::size_t k) {
    return static_cast<int>(1100 + 100 * (k % A) + 2 + k / A);
  };
  std::vector<std::vector<std::size_t>> area_members(A);
  for (std::size_t k = 0; k < K; ++k) area_members[k % A].push_back(k);

  enum class Kind { regular, misc, multi };
  struct Journal {
    Kind kind;
    std::vector<std::size_t> planted;   // categories its papers truly belong to
    std::vector<std::size_t> assigned;  // regular categories it is listed under
  };
  const std::size_t J =
      (static_cast<std::size_t>(params.papers) + params.papers_per_journal - 1) / params.papers_per_journal;
  std::vector<Journal> journals(J);
  for (std::size_t j = 0; j < J; ++j) {
    auto& jr = journals[j];
    const std::size_t primary = j % K;
    const std::size_t area = primary % A;
    const double u = draw.uniform();
    if (u < params.multidisciplinary_journals) {
      jr.kind = Kind::multi;
      for (std::size_t k = 0; k < K; ++k) jr.planted.push_back(k);
    } else if (u < params.multidisciplinary_journals + params.misc_journals) {
      jr.kind = Kind::misc;
      jr.planted = area_members[area];
    } else {
      jr.kind = Kind::regular;
      jr.planted.push_back(primary);
      const auto& peers = area_members[area];
      if (peers.size() > 1 && draw.chance(params.two_category_journals)) {
        std::size_t second;
        do {
          second = peers[draw.index(peers.size())];
        } while (second == primary);
        jr.planted.push_back(second);
      }
      jr.assigned = jr.planted;
      if (K > jr.planted.size() && draw.chance(params.noise)) {
        for (auto& k : jr.assigned) {
          std::size_t wrong;
          do {
            wrong = draw.index(K);
          } while (std::find(jr.planted.begin(), jr.planted.end(), wrong) != jr.planted.end());
          k = wrong;
        }
        std::sort(jr.assigned.begin(), jr.assigned.end());
        jr.assigned.erase(std::unique(jr.assigned.begin(), jr.assigned.end()), jr.assigned.end());
      }
    }
  }

  for (std::size_t j = 0; j < J; ++j) {
    JournalAssignment ja{padded("J", j, 6), {}};
    const auto& jr = journals[j];
    switch (jr.kind) {
      case Kind::multi:
        ja.raw.push_back({1000, 1.0});
        break;
      case Kind::misc:
        ja.raw.push_back({static_cast<int>(1100 + 100 * (jr.planted.front() % A) + 1), 1.0});
        break;
      case Kind::regular:
        for (const auto k : jr.assigned) ja.raw.push_back({code_of(k), 1.0});
        break;
    }
    out.input.journals.push_back(std::move(ja));
  }

  const auto N = static_cast<std::size_t>(params.papers);
  std::vector<std::size_t> paper_journal(N), planted(N), nrefs(N);
  std::vector<std::size_t> per_category(K, 0);
  for (std::size_t p = 0; p < N; ++p) {
    paper_journal[p] = draw.index(J);
    const auto& options = journals[paper_journal[p]].planted;
    planted[p] = options[draw.index(options.size())];
    ++per_category[planted[p]];
  }
  std::vector<std::size_t> order(N);
  for (std::size_t p = 0; p < N; ++p) order[p] = p;
  draw.shuffle(order);
  const auto low = static_cast<std::size_t>(std::llround(params.low_ref_papers * static_cast<double>(N)));
  std::vector<std::uint8_t> is_low(N, 0);
  for (std::size_t i = 0; i < low; ++i) is_low[order[i]] = 1;
  for (std::size_t p = 0; p < N; ++p) {
    nrefs[p] = is_low[p] ? static_cast<std::size_t>(draw.between(0, 2))
                         : static_cast<std::size_t>(draw.between(params.min_refs, params.max_refs));
  }

  const double mean_refs = 0.5 * (params.min_refs + params.max_refs);
  std::vector<std::size_t> pool(K);
  for (std::size_t k = 0; k < K; ++k) {
    const double expected = static_cast<double>(per_category[k]) * mean_refs / params.cites_per_source;
    pool[k] = std::max<std::size_t>(8, static_cast<std::size_t>(std::llround(expected)));
  }

  for (std::size_t p = 0; p < N; ++p) {
    const auto pid = padded("P", p, 7);
    out.input.papers.emplace_back(pid, out.input.journals[paper_journal[p]].journal_id);
    out.planted.emplace_back(pid, code_of(planted[p]));
    for (std::size_t s = 0; s < nrefs[p]; ++s) {
      const std::size_t k = draw.chance(params.in_category) ? planted[p] : draw.index(K);
      const std::size_t item = draw.index(pool[k]);
      out.input.references.emplace_back(pid, padded(("S" + padded("", k, 3) + "-").c_str(), item, 6));
    }
  }
  return out;
}

void write_synth_corpus(const SynthCorpus& corpus, const SynthParams& params,
                        const std::string& dir) {
  namespace fs = std::filesystem;
  fs::create_directories(dir);
  const auto open = [&](const char* name) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    if (!f) throw Error("cannot write '" + (fs::path(dir) / name).string() + "'");
    return f;
  };
  {
    auto f = open("scheme.tsv");
    TableWriter t(f, {"code", "area_code", "kind"});
    for (const auto& r : corpus.scheme) {
      const char* kind = r.kind == CodeKind::regular ? "regular"
                         : r.kind == CodeKind::misc  ? "misc"
                                                     : "multidisciplinary";
      t.cell(r.code).cell(r.area_code).cell(std::string_view(kind)).end_row();
    }
  }
  {
    auto f = open("journals.tsv");
    TableWriter t(f, {"journal_id", "code", "degree"});
    for (const auto& j : corpus.input.journals) {
      for (const auto& r : j.raw) t.cell(j.journal_id).cell(r.code).cell(r.degree).end_row();
    }
  }
  {
    auto f = open("papers.tsv");
    TableWriter t(f, {"paper_id", "journal_id"});
    for (const auto& [pid, jid] : corpus.input.papers) t.cell(pid).cell(jid).end_row();
  }
  {
    auto f = open("references.tsv");
    TableWriter t(f, {"paper_id", "reference_id"});
    for (const auto& [pid, rid] : corpus.input.references) t.cell(pid).cell(rid).end_row();
  }
  {
    auto f = open("planted.tsv");
    TableWriter t(f, {"paper_id", "category_code"});
    for (const auto& [pid, code] : corpus.planted) t.cell(pid).cell(code).end_row();
  }
  {
    auto f = open("synth.json");
    nlohmann::ordered_json j;
    j["generator"] = kSynthGenerator;
    j["seed"] = params.seed;
    j["papers"] = params.papers;
    j["categories"] = params.categories;
    j["areas"] = params.areas;
    j["papers_per_journal"] = params.papers_per_journal;
    j["min_refs"] = params.min_refs;
    j["max_refs"] = params.max_refs;
    j["in_category"] = params.in_category;
    j["cites_per_source"] = params.cites_per_source;
    j["two_category_journals"] = params.two_category_journals;
    j["noise"] = params.noise;
    j["misc_journals"] = params.misc_journals;
    j["multidisciplinary_journals"] = params.multidisciplinary_journals;
    j["low_ref_papers"] = params.low_ref_papers;
    f << j.dump(2) << '\n';
  }
}

}  // namespace refclass
