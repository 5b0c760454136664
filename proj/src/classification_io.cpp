#include "refclass/classification_io.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <json.hpp>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

void write_classification(std::ostream& out, const Classification& c,
                          const CategoryScheme& scheme) {
  TableWriter table(out, {"paper_id", "category_code", "weight"});
  std::vector<Entry> ranked;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto entries = c.vectors[i].entries();
    ranked.assign(entries.begin(), entries.end());
    std::stable_sort(ranked.begin(), ranked.end(),
                     [](const Entry& a, const Entry& b) { return a.weight > b.weight; });
    for (const auto& e : ranked) {
      table.cell(c.paper_ids[i]).cell(scheme.code(e.index)).cell(e.weight).end_row();
    }
  }
}

void save_classification(const std::string& path, const Classification& c,
                         const CategoryScheme& scheme) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  write_classification(out, c, scheme);
  if (!out) throw Error("failed writing '" + path + "'");
}

Classification read_classification(std::istream& in, const std::string& source,
                                   const CategoryScheme& scheme, std::string label) {
  TableReader table(in, source);
  const auto pcol = table.column("paper_id");
  const auto ccol = table.column("category_code");
  const auto wcol = table.column("weight");
  std::map<std::string, std::vector<Entry>> rows;
  while (table.next()) {
    const std::string where = source + ":" + std::to_string(table.line_number());
    const auto code = static_cast<int>(parse_integer(table.field(ccol), where + " category_code"));
    const auto idx = scheme.index_of(code);
    if (!idx) throw Error(where + ": code " + std::to_string(code) + " is not a regular category");
    const double w = parse_double(table.field(wcol), where + " weight");
    if (w < 0.0) throw Error(where + ": negative weight");
    rows[table.field(pcol)].push_back({*idx, w});
  }
  Classification c;
  c.label = std::move(label);
  for (auto& [id, entries] : rows) {
    auto v = WeightVector::from_entries(std::move(entries));
    if (v.empty()) continue;
    c.paper_ids.push_back(id);
    c.vectors.push_back(v.normalized());
  }
  return c;
}

Classification load_classification(const std::string& path, const CategoryScheme& scheme,
                                   std::string label) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open classification '" + path + "'");
  return read_classification(in, path, scheme, std::move(label));
}

void write_run_metadata(std::ostream& out, const Classification& c) {
  nlohmann::ordered_json j;
  j["variant"] = c.label;
  j["iterations"] = c.iterations_run;
  j["converged"] = c.converged;
  j["stalled"] = c.stalled;
  j["residual_trace"] = c.residual_trace;
  j["classified_papers"] = c.size();
  j["unreclassified_papers"] = c.unreclassified.size();
  out << j.dump(2) << '\n';
}

}  // namespace refclass
