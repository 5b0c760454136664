#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <map>
#include <optional>
#include <ostream>

#include "refclass/assign.hpp"
#include "refclass/classification_io.hpp"
#include "refclass/corpus.hpp"
#include "refclass/dense_oracle.hpp"
#include "refclass/engine.hpp"
#include "refclass/error.hpp"
#include "refclass/metrics.hpp"
#include "refclass/report.hpp"
#include "refclass/synth.hpp"
#include "refclass/table.hpp"

namespace refclass::cli {

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitTooLarge = 3;
constexpr double kOracleTolerance = 1e-12;

struct Variant {
  bool unlimited = false;
  bool fractional = false;
  std::optional<double> threshold;  // nullopt: unpruned

  std::string label() const {
    auto s = variant_label(unlimited, fractional);
    return threshold ? s + "-" + threshold_label(*threshold) : s + "-raw";
  }
};

std::vector<Variant> all_pruned_variants() {
  std::vector<Variant> out;
  for (const bool unlimited : {false, true}) {
    for (const bool fractional : {false, true}) {
      for (const double t : kPruneThresholds) out.push_back({unlimited, fractional, t});
    }
  }
  return out;
}

Variant parse_variant(const std::string& text) {
  // STAGE-WEIGHT-THRESHOLD, e.g. JL-F-0.8 or U1-NF-raw.
  const auto first = text.find('-');
  const auto second = first == std::string::npos ? std::string::npos : text.find('-', first + 1);
  if (second == std::string::npos) throw Error("invalid variant '" + text + "'");
  const auto stage = text.substr(0, first);
  const auto weight = text.substr(first + 1, second - first - 1);
  const auto level = text.substr(second + 1);
  Variant v;
  if (stage == "JL") {
    v.unlimited = false;
  } else if (stage == "U1") {
    v.unlimited = true;
  } else {
    throw Error("invalid variant stage in '" + text + "' (expected JL or U1)");
  }
  if (weight == "F") {
    v.fractional = true;
  } else if (weight != "NF") {
    throw Error("invalid variant weighting in '" + text + "' (expected F or NF)");
  }
  if (level != "raw") {
    v.threshold = parse_double(level, "variant threshold");
    PruneConfig{*v.threshold, kMaxCategories}.validate();
  }
  return v;
}

std::vector<Variant> parse_variants(const std::vector<std::string>& items) {
  std::vector<Variant> out;
  std::vector<std::string> seen;
  const auto add = [&](const Variant& v) {
    if (std::find(seen.begin(), seen.end(), v.label()) != seen.end()) return;
    seen.push_back(v.label());
    out.push_back(v);
  };
  for (const auto& item : items) {
    if (item == "all") {
      for (const auto& v : all_pruned_variants()) add(v);
    } else if (item == "all-raw") {
      for (const bool u : {false, true}) {
        for (const bool f : {false, true}) add({u, f, std::nullopt});
      }
    } else {
      add(parse_variant(item));
    }
  }
  if (out.empty()) throw Error("no variants selected");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = text.find(',', start);
    auto item = text.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::pair<std::string, std::string> parse_labelled(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw Error("expected LABEL=PATH, got '" + text + "'");
  }
  return {text.substr(0, eq), text.substr(eq + 1)};
}

ThresholdMode parse_mode(const std::string& text) {
  if (text == "absolute") return ThresholdMode::absolute;
  if (text == "per-paper") return ThresholdMode::per_paper;
  throw Error("threshold mode must be 'absolute' or 'per-paper'");
}

// Input locations: an input directory with the standard file names, each
// overridable individually.
struct InputPaths {
  std::string scheme;
  CorpusPaths corpus;
  std::string reference_attributes;

  void from_dir(const std::string& dir) {
    const fs::path d(dir);
    if (scheme.empty()) scheme = (d / "scheme.tsv").string();
    if (corpus.journals.empty()) corpus.journals = (d / "journals.tsv").string();
    if (corpus.papers.empty()) corpus.papers = (d / "papers.tsv").string();
    if (corpus.references.empty()) corpus.references = (d / "references.tsv").string();
  }
  bool has_corpus() const {
    return !corpus.journals.empty() && !corpus.papers.empty() && !corpus.references.empty();
  }
};

struct RunConfig {
  InputPaths inputs;
  std::string input_dir;
  std::vector<std::string> variants{"all"};
  EngineConfig engine;
  int min_refs = kDefaultMinRefs;
  std::vector<std::pair<std::string, std::string>> comparisons;
  std::optional<std::string> common_papers_from;
  std::optional<std::string> flow_target;
  int publication_year = 0;
  std::string out;
};

std::string resolve(const fs::path& base, const std::string& p) {
  if (p.empty()) return p;
  const fs::path path(p);
  return path.is_absolute() ? p : (base / path).lexically_normal().string();
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open config '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw Error("config '" + path + "': " + e.what());
  }
  const fs::path base = fs::path(path).parent_path();
  try {
    if (j.contains("input_dir")) cfg.input_dir = resolve(base, j["input_dir"].get<std::string>());
    if (j.contains("scheme")) cfg.inputs.scheme = resolve(base, j["scheme"].get<std::string>());
    if (j.contains("journals")) cfg.inputs.corpus.journals = resolve(base, j["journals"].get<std::string>());
    if (j.contains("papers")) cfg.inputs.corpus.papers = resolve(base, j["papers"].get<std::string>());
    if (j.contains("references")) cfg.inputs.corpus.references = resolve(base, j["references"].get<std::string>());
    if (j.contains("reference_attributes")) {
      cfg.inputs.reference_attributes = resolve(base, j["reference_attributes"].get<std::string>());
    }
    if (j.contains("publication_year")) cfg.publication_year = j["publication_year"].get<int>();
    if (j.contains("variants")) {
      cfg.variants = j["variants"].is_string() ? split_list(j["variants"].get<std::string>())
                                               : j["variants"].get<std::vector<std::string>>();
    }
    if (j.contains("min_refs")) cfg.min_refs = j["min_refs"].get<int>();
    if (j.contains("threads")) cfg.engine.exec.threads = j["threads"].get<int>();
    if (j.contains("out")) cfg.out = resolve(base, j["out"].get<std::string>());
    if (j.contains("engine")) {
      const auto& e = j["engine"];
      if (e.contains("threshold_mode")) cfg.engine.threshold_mode = parse_mode(e["threshold_mode"].get<std::string>());
      if (e.contains("threshold")) {
        const double t = e["threshold"].get<double>();
        (cfg.engine.threshold_mode == ThresholdMode::absolute ? cfg.engine.convergence_threshold
                                                              : cfg.engine.per_paper_threshold) = t;
      }
      if (e.contains("max_iterations")) cfg.engine.max_iterations = e["max_iterations"].get<int>();
      if (e.contains("include_ineligible_citers")) {
        cfg.engine.include_ineligible_citers = e["include_ineligible_citers"].get<bool>();
      }
      if (e.contains("unlimited_passes")) cfg.engine.unlimited_passes = e["unlimited_passes"].get<int>();
    }
    if (j.contains("comparisons")) {
      for (const auto& c : j["comparisons"]) {
        cfg.comparisons.emplace_back(c.at("label").get<std::string>(),
                                     resolve(base, c.at("path").get<std::string>()));
      }
    }
    if (j.contains("common_papers_from")) cfg.common_papers_from = j["common_papers_from"].get<std::string>();
    if (j.contains("flow_target")) cfg.flow_target = j["flow_target"].get<std::string>();
  } catch (const json::exception& e) {
    throw Error("config '" + path + "': " + e.what());
  }
}

// Options shared by run / oracle / metrics.
struct CommonFlags {
  std::string config;
  std::string input;
  std::string scheme;
  std::optional<std::string> variants;
  std::optional<int> threads;
  std::optional<int> min_refs;
  std::optional<std::string> threshold_mode;
  std::optional<double> threshold;
  std::optional<int> max_iterations;
  std::optional<bool> include_ineligible;
  std::string out;
  std::vector<std::string> compare;

  void add_to(CLI::App& app, bool with_variants) {
    app.add_option("--config", config, "Structured config file (JSON)");
    app.add_option("--input", input, "Directory holding scheme.tsv, journals.tsv, papers.tsv, references.tsv");
    app.add_option("--scheme", scheme, "Category scheme table");
    if (with_variants) {
      app.add_option("--variants", variants, "Comma list, e.g. all,JL-F-raw,U1-F-0.8");
    }
    app.add_option("--threads", threads, "Worker threads (0 = all cores)");
    app.add_option("--min-refs", min_refs, "Minimum references for reclassification");
    app.add_option("--threshold-mode", threshold_mode, "absolute | per-paper")
        ->check(CLI::IsMember({"absolute", "per-paper"}));
    app.add_option("--threshold", threshold, "Convergence threshold in the chosen mode");
    app.add_option("--max-iterations", max_iterations, "Iteration cap for the limited loop");
    app.add_option("--include-ineligible-citers", include_ineligible,
                   "Let papers below --min-refs contribute to reference vectors (default true)");
    app.add_option("--out", out, "Output directory");
    app.add_option("--compare", compare, "Comparison classification LABEL=PATH (repeatable)");
  }

  RunConfig resolve_config() const {
    RunConfig cfg;
    if (!config.empty()) load_config_file(config, cfg);
    if (!input.empty()) cfg.input_dir = input;
    if (!scheme.empty()) cfg.inputs.scheme = scheme;
    if (variants) cfg.variants = split_list(*variants);
    if (threads) cfg.engine.exec.threads = *threads;
    if (min_refs) cfg.min_refs = *min_refs;
    if (threshold_mode) cfg.engine.threshold_mode = parse_mode(*threshold_mode);
    if (threshold) {
      (cfg.engine.threshold_mode == ThresholdMode::absolute ? cfg.engine.convergence_threshold
                                                            : cfg.engine.per_paper_threshold) = *threshold;
    }
    if (max_iterations) cfg.engine.max_iterations = *max_iterations;
    if (include_ineligible) cfg.engine.include_ineligible_citers = *include_ineligible;
    if (!out.empty()) cfg.out = out;
    for (const auto& c : compare) cfg.comparisons.push_back(parse_labelled(c));
    if (!cfg.input_dir.empty()) cfg.inputs.from_dir(cfg.input_dir);
    if (cfg.min_refs < 0) throw Error("--min-refs must be non-negative");
    if (cfg.engine.exec.threads < 0) throw Error("--threads must be non-negative");
    cfg.engine.validate();
    return cfg;
  }
};

void write_json(const fs::path& path, const nlohmann::ordered_json& j) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << j.dump(2) << '\n';
}

nlohmann::ordered_json engine_json(const EngineConfig& e) {
  nlohmann::ordered_json j;
  j["threshold_mode"] = e.threshold_mode == ThresholdMode::absolute ? "absolute" : "per-paper";
  j["threshold"] = e.threshold_mode == ThresholdMode::absolute ? e.convergence_threshold
                                                               : e.per_paper_threshold;
  j["max_iterations"] = e.max_iterations;
  j["include_ineligible_citers"] = e.include_ineligible_citers;
  j["unlimited_passes"] = e.unlimited_passes;
  return j;
}

int cmd_run(const CommonFlags& flags, std::ostream& out) {
  const RunConfig cfg = flags.resolve_config();
  if (cfg.out.empty()) throw Error("run needs --out");
  if (cfg.inputs.scheme.empty() || !cfg.inputs.has_corpus()) {
    throw Error("run needs --input or explicit scheme/journals/papers/references paths");
  }
  const auto variants = parse_variants(cfg.variants);

  const auto scheme = load_scheme(cfg.inputs.scheme);
  const auto corpus = load_corpus(cfg.inputs.corpus, scheme, cfg.min_refs);
  std::optional<ReferenceAttributes> attrs;
  if (!cfg.inputs.reference_attributes.empty()) {
    attrs = load_reference_attributes(cfg.inputs.reference_attributes);
  }
  std::vector<Classification> comparisons;
  for (const auto& [label, path] : cfg.comparisons) {
    comparisons.push_back(load_classification(path, scheme, label));
  }

  const fs::path dir(cfg.out);
  fs::create_directories(dir / "classifications");

  std::map<bool, RunResult> runs;
  for (const auto& v : variants) {
    if (runs.contains(v.fractional)) continue;
    EngineConfig e = cfg.engine;
    e.fractional = v.fractional;
    runs.emplace(v.fractional, run(corpus, e));
  }

  std::vector<Classification> produced;
  produced.reserve(variants.size());
  for (const auto& v : variants) {
    const auto& r = runs.at(v.fractional);
    const auto& base = v.unlimited ? r.u1 : r.jl;
    if (v.threshold) {
      produced.push_back(prune_classification(base, PruneConfig{*v.threshold, kMaxCategories}));
    } else {
      produced.push_back(base);
      produced.back().label = v.label();
    }
    const auto& c = produced.back();
    save_classification((dir / "classifications" / (c.label + ".tsv")).string(), c, scheme);
    std::ofstream meta(dir / "classifications" / (c.label + ".meta.json"), std::ios::binary);
    write_run_metadata(meta, c);
  }

  {
    std::ofstream f(dir / "unreclassified.tsv", std::ios::binary);
    TableWriter t(f, {"paper_id", "references"});
    for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
      if (!corpus.eligible(p)) t.cell(corpus.paper_id(p)).cell(static_cast<std::size_t>(corpus.ref_count(p))).end_row();
    }
  }

  nlohmann::ordered_json log;
  log["papers"] = corpus.paper_count();
  log["references"] = corpus.reference_count();
  log["reference_slots"] = corpus.slot_count();
  log["categories"] = scheme.size();
  log["min_refs"] = cfg.min_refs;
  log["eligible_papers"] = corpus.eligible_count();
  log["unreclassified_pct"] = unreclassified_percentage(corpus);
  log["engine"] = engine_json(cfg.engine);
  log["total_threshold"] = cfg.engine.total_threshold(corpus.eligible_count());
  log["runs"] = nlohmann::ordered_json::array();
  for (const auto& [fractional, r] : runs) {
    nlohmann::ordered_json j;
    j["weighting"] = fractional ? "fractional" : "non-fractional";
    j["iterations"] = r.jl.iterations_run;
    j["converged"] = r.jl.converged;
    j["stalled"] = r.jl.stalled;
    j["residual_trace"] = r.jl.residual_trace;
    j["unlimited_residual"] = r.u1.residual_trace.back();
    log["runs"].push_back(j);
    if (!r.jl.converged) {
      out << "warning: " << (fractional ? "fractional" : "non-fractional")
          << " run did not converge within " << cfg.engine.max_iterations << " iterations\n";
    }
  }
  log["variants"] = nlohmann::ordered_json::array();
  for (const auto& c : produced) log["variants"].push_back(c.label);
  write_json(dir / "run.json", log);

  const auto baseline = journal_baseline(corpus);
  ReportInputs report;
  report.scheme = &scheme;
  report.classifications.push_back(&baseline);
  for (const auto& c : produced) report.classifications.push_back(&c);
  for (const auto& c : comparisons) report.comparisons.push_back(&c);
  report.corpus = &corpus;
  report.reference_attributes = attrs ? &*attrs : nullptr;
  report.publication_year = cfg.publication_year;
  report.common_papers_from = cfg.common_papers_from;
  report.flow_target = cfg.flow_target;
  write_report(report, (dir / "metrics").string());

  out << "classified " << corpus.eligible_count() << " of " << corpus.paper_count() << " papers ("
      << std::fixed << std::setprecision(2) << unreclassified_percentage(corpus)
      << "% unreclassified); wrote " << produced.size() << " classifications to " << cfg.out << '\n';
  for (const auto& [fractional, r] : runs) {
    out << (fractional ? "fractional" : "non-fractional") << ": " << r.jl.iterations_run
        << " iterations, residuals";
    out << std::setprecision(6) << std::defaultfloat;
    for (const double d : r.jl.residual_trace) out << ' ' << d;
    out << '\n';
  }
  return 0;
}

struct OracleFlags {
  bool perturb = false;
};

int cmd_oracle(const CommonFlags& flags, const OracleFlags& oflags, std::ostream& out,
               std::ostream& err) {
  const RunConfig cfg = flags.resolve_config();
  if (cfg.inputs.scheme.empty() || !cfg.inputs.has_corpus()) {
    throw Error("oracle needs --input or explicit scheme/journals/papers/references paths");
  }
  const auto scheme = load_scheme(cfg.inputs.scheme);
  const auto corpus = load_corpus(cfg.inputs.corpus, scheme, cfg.min_refs);
  if (corpus.paper_count() > oracle::kMaxPapers) {
    err << "error: corpus has " << corpus.paper_count() << " papers; the dense oracle accepts at most "
        << oracle::kMaxPapers << '\n';
    return kExitTooLarge;
  }
  double worst = 0.0;
  for (const bool fractional : {false, true}) {
    EngineConfig e = cfg.engine;
    e.fractional = fractional;
    auto engine = run(corpus, e);
    if (oflags.perturb && !engine.jl.vectors.empty()) {
      // Negative control: shift one component so a working oracle must object.
      auto entries = std::vector<Entry>(engine.jl.vectors[0].entries().begin(),
                                        engine.jl.vectors[0].entries().end());
      entries[0].weight += 1e-9;
      engine.jl.vectors[0] = WeightVector::from_sorted(std::move(entries));
    }
    oracle::DenseConfig d;
    d.fractional = fractional;
    d.threshold = e.total_threshold(corpus.eligible_count());
    d.max_iterations = e.max_iterations;
    d.include_ineligible_citers = e.include_ineligible_citers;
    const auto dense = oracle::run_dense(corpus, d);
    for (const bool unlimited : {false, true}) {
      const auto diff = oracle::compare(corpus, unlimited ? dense.u1 : dense.jl,
                                        unlimited ? engine.u1 : engine.jl);
      worst = std::max(worst, diff.max_abs);
      out << variant_label(unlimited, fractional) << "\tmax_abs_diff=" << std::scientific
          << std::setprecision(3) << diff.max_abs << std::defaultfloat;
      if (diff.category >= 0) {
        out << "\tat " << diff.paper_id << "/" << scheme.code(static_cast<CategoryIndex>(diff.category));
      }
      out << "\titerations=" << engine.jl.iterations_run << "/" << dense.iterations << '\n';
      if (dense.iterations != engine.jl.iterations_run) worst = INFINITY;
    }
  }
  const bool pass = worst <= kOracleTolerance;
  out << (pass ? "PASS" : "FAIL") << " oracle tolerance " << kOracleTolerance << '\n';
  return pass ? 0 : kExitMismatch;
}

struct MetricsFlags {
  std::vector<std::string> classifications;
  std::string reference_attributes;
  int publication_year = 0;
  std::string common_papers_from;
  std::string flow_target;
};

int cmd_metrics(const CommonFlags& flags, const MetricsFlags& mflags, std::ostream& out) {
  RunConfig cfg = flags.resolve_config();
  if (cfg.inputs.scheme.empty()) throw Error("metrics needs --scheme or --input");
  if (cfg.out.empty()) throw Error("metrics needs --out");
  if (mflags.classifications.empty()) throw Error("metrics needs at least one --classification");
  if (!mflags.reference_attributes.empty()) cfg.inputs.reference_attributes = mflags.reference_attributes;
  if (mflags.publication_year) cfg.publication_year = mflags.publication_year;
  if (!mflags.common_papers_from.empty()) cfg.common_papers_from = mflags.common_papers_from;
  if (!mflags.flow_target.empty()) cfg.flow_target = mflags.flow_target;

  const auto scheme = load_scheme(cfg.inputs.scheme);
  std::optional<Corpus> corpus;
  if (cfg.inputs.has_corpus() && fs::exists(cfg.inputs.corpus.papers)) {
    corpus = load_corpus(cfg.inputs.corpus, scheme, cfg.min_refs);
  }
  std::optional<ReferenceAttributes> attrs;
  if (!cfg.inputs.reference_attributes.empty()) {
    attrs = load_reference_attributes(cfg.inputs.reference_attributes);
  }
  std::vector<Classification> classes, comparisons;
  for (const auto& item : mflags.classifications) {
    const auto [label, path] = parse_labelled(item);
    classes.push_back(load_classification(path, scheme, label));
  }
  for (const auto& [label, path] : cfg.comparisons) {
    comparisons.push_back(load_classification(path, scheme, label));
  }
  std::optional<Classification> baseline;
  if (corpus) baseline = journal_baseline(*corpus);

  ReportInputs report;
  report.scheme = &scheme;
  if (baseline) report.classifications.push_back(&*baseline);
  for (const auto& c : classes) report.classifications.push_back(&c);
  for (const auto& c : comparisons) report.comparisons.push_back(&c);
  report.corpus = corpus ? &*corpus : nullptr;
  report.reference_attributes = attrs ? &*attrs : nullptr;
  report.publication_year = cfg.publication_year;
  report.common_papers_from = cfg.common_papers_from;
  report.flow_target = cfg.flow_target;
  write_report(report, cfg.out);
  out << "wrote metrics for " << report.classifications.size() << " classifications to " << cfg.out << '\n';
  return 0;
}

struct SynthFlags {
  std::optional<std::uint64_t> seed;
  SynthParams params;
  std::string out;
};

int cmd_synth(const SynthFlags& flags, std::ostream& out) {
  if (!flags.seed) throw Error("synth needs --seed");
  if (flags.out.empty()) throw Error("synth needs --out");
  SynthParams p = flags.params;
  p.seed = *flags.seed;
  const auto start = std::chrono::steady_clock::now();
  const auto corpus = generate_corpus(p);
  write_synth_corpus(corpus, p, flags.out);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  out << "generated " << corpus.input.papers.size() << " papers, " << corpus.input.references.size()
      << " reference slots in " << std::fixed << std::setprecision(2) << secs << " s -> " << flags.out
      << '\n';
  return 0;
}

}  // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reference-based paper classification: propagation, pruning and indicators"};
  app.require_subcommand(1);

  CommonFlags run_flags, oracle_flags, metrics_flags;
  OracleFlags oracle_only;
  MetricsFlags metrics_only;
  SynthFlags synth;

  auto* run_cmd = app.add_subcommand("run", "Classify a corpus and write classifications plus metrics");
  run_flags.add_to(*run_cmd, true);

  auto* oracle_cmd = app.add_subcommand("oracle", "Compare the engine with the dense reference implementation");
  oracle_flags.add_to(*oracle_cmd, false);
  oracle_cmd->add_flag("--perturb", oracle_only.perturb, "Corrupt one engine value (negative control)");

  auto* metrics_cmd = app.add_subcommand("metrics", "Compute indicators for existing classification files");
  metrics_flags.add_to(*metrics_cmd, false);
  metrics_cmd->add_option("--classification", metrics_only.classifications, "LABEL=PATH (repeatable)");
  metrics_cmd->add_option("--reference-attributes", metrics_only.reference_attributes,
                          "Table reference_id, indexed, year");
  metrics_cmd->add_option("--publication-year", metrics_only.publication_year);
  metrics_cmd->add_option("--common-papers-from", metrics_only.common_papers_from);
  metrics_cmd->add_option("--flow-target", metrics_only.flow_target);

  auto* synth_cmd = app.add_subcommand("synth", "Generate a planted-structure synthetic corpus");
  auto& sp = synth.params;
  synth_cmd->add_option("--seed", synth.seed, "Random seed (required)");
  synth_cmd->add_option("--out", synth.out, "Output directory");
  synth_cmd->add_option("--papers", sp.papers);
  synth_cmd->add_option("--categories", sp.categories);
  synth_cmd->add_option("--areas", sp.areas);
  synth_cmd->add_option("--papers-per-journal", sp.papers_per_journal);
  synth_cmd->add_option("--min-refs", sp.min_refs, "Fewest references of a regular paper");
  synth_cmd->add_option("--max-refs", sp.max_refs);
  synth_cmd->add_option("--in-category", sp.in_category, "Probability a reference is in-category");
  synth_cmd->add_option("--cites-per-source", sp.cites_per_source);
  synth_cmd->add_option("--two-category", sp.two_category_journals);
  synth_cmd->add_option("--noise", sp.noise, "Share of journals with wrong categories");
  synth_cmd->add_option("--misc", sp.misc_journals, "Share of misc journals");
  synth_cmd->add_option("--multidisciplinary", sp.multidisciplinary_journals);
  synth_cmd->add_option("--low-refs", sp.low_ref_papers, "Exact share of papers with < 3 references");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitInvalid;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, out);
    if (*oracle_cmd) return cmd_oracle(oracle_flags, oracle_only, out, err);
    if (*metrics_cmd) return cmd_metrics(metrics_flags, metrics_only, out);
    if (*synth_cmd) return cmd_synth(synth, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace refclass::cli
