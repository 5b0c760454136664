#include "refclass/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "refclass/error.hpp"
#include "refclass/table.hpp"

namespace refclass {

CategoryScheme CategoryScheme::from_rows(std::vector<SchemeRow> rows) {
  if (rows.empty()) throw Error("category scheme table is empty");

  std::map<int, CodeKind> seen;
  for (const auto& r : rows) {
    auto [it, inserted] = seen.emplace(r.code, r.kind);
    if (!inserted) {
      if (it->second != r.kind &&
          (it->second == CodeKind::misc || r.kind == CodeKind::misc)) {
        throw Error("code " + std::to_string(r.code) +
                    " is flagged miscellaneous and also listed as another kind");
      }
      throw Error("duplicate code " + std::to_string(r.code) + " in category scheme");
    }
  }

  CategoryScheme s;
  std::vector<SchemeRow> regular;
  for (const auto& r : rows) {
    if (r.kind == CodeKind::regular) regular.push_back(r);
  }
  if (regular.empty()) throw Error("category scheme has no regular categories");
  std::sort(regular.begin(), regular.end(),
            [](const SchemeRow& a, const SchemeRow& b) { return a.code < b.code; });

  std::set<int> area_set;
  for (const auto& r : regular) area_set.insert(r.area_code);
  s.areas_.assign(area_set.begin(), area_set.end());
  s.area_members_.resize(s.areas_.size());
  for (const auto& r : regular) {
    const auto slot = static_cast<std::size_t>(
        std::lower_bound(s.areas_.begin(), s.areas_.end(), r.area_code) - s.areas_.begin());
    s.area_members_[slot].push_back(static_cast<CategoryIndex>(s.codes_.size()));
    s.codes_.push_back(r.code);
    s.category_area_.push_back(slot);
  }

  for (const auto& r : rows) {
    if (r.kind == CodeKind::misc) {
      if (!area_set.contains(r.area_code)) {
        throw Error("misc code " + std::to_string(r.code) + " belongs to area " +
                    std::to_string(r.area_code) + " which has no regular categories");
      }
      if (!s.misc_by_area_.emplace(r.area_code, r.code).second) {
        throw Error("area " + std::to_string(r.area_code) + " has more than one misc code");
      }
      s.area_by_misc_.emplace(r.code, r.area_code);
    } else if (r.kind == CodeKind::multidisciplinary) {
      if (s.multidisciplinary_) throw Error("category scheme has more than one multidisciplinary code");
      s.multidisciplinary_ = r.code;
    }
  }
  return s;
}

std::optional<CategoryIndex> CategoryScheme::index_of(int code) const {
  const auto it = std::lower_bound(codes_.begin(), codes_.end(), code);
  if (it == codes_.end() || *it != code) return std::nullopt;
  return static_cast<CategoryIndex>(it - codes_.begin());
}

std::optional<std::size_t> CategoryScheme::area_slot_of(int area_code) const {
  const auto it = std::lower_bound(areas_.begin(), areas_.end(), area_code);
  if (it == areas_.end() || *it != area_code) return std::nullopt;
  return static_cast<std::size_t>(it - areas_.begin());
}

std::optional<int> CategoryScheme::misc_area(int code) const {
  const auto it = area_by_misc_.find(code);
  if (it == area_by_misc_.end()) return std::nullopt;
  return it->second;
}

std::optional<CodeKind> CategoryScheme::kind_of(int code) const {
  if (index_of(code)) return CodeKind::regular;
  if (area_by_misc_.contains(code)) return CodeKind::misc;
  if (multidisciplinary_ && *multidisciplinary_ == code) return CodeKind::multidisciplinary;
  return std::nullopt;
}

namespace {

CodeKind parse_kind(const std::string& text, const std::string& where) {
  if (text == "regular") return CodeKind::regular;
  if (text == "misc") return CodeKind::misc;
  if (text == "multidisciplinary") return CodeKind::multidisciplinary;
  throw Error(where + ": unknown category kind '" + text + "'");
}

CategoryScheme read_rows(TableReader& table) {
  const auto code_col = table.column("code");
  const auto area_col = table.column("area_code");
  const auto kind_col = table.column("kind");
  std::vector<SchemeRow> rows;
  while (table.next()) {
    const std::string where = table.source() + ":" + std::to_string(table.line_number());
    rows.push_back({static_cast<int>(parse_integer(table.field(code_col), where + " code")),
                    static_cast<int>(parse_integer(table.field(area_col), where + " area_code")),
                    parse_kind(table.field(kind_col), where)});
  }
  return CategoryScheme::from_rows(std::move(rows));
}

}  // namespace

CategoryScheme load_scheme(const std::string& path) {
  TableReader table(path);
  return read_rows(table);
}

CategoryScheme read_scheme(std::istream& in, const std::string& source) {
  TableReader table(in, source);
  return read_rows(table);
}

WeightVector fractionalize_journal(const JournalAssignment& assignment,
                                   const CategoryScheme& scheme) {
  if (assignment.raw.empty()) {
    throw Error("journal '" + assignment.journal_id + "' has no category assignment");
  }
  double total = 0.0;
  for (const auto& r : assignment.raw) {
    if (!std::isfinite(r.degree) || r.degree < 0.0) {
      throw Error("journal '" + assignment.journal_id + "' has a negative or invalid degree");
    }
    total += r.degree;
  }
  if (total <= 0.0) {
    throw Error("journal '" + assignment.journal_id + "' has only zero degrees");
  }

  std::vector<double> dense(scheme.size(), 0.0);
  for (const auto& r : assignment.raw) {
    const double share = r.degree / total;
    const auto kind = scheme.kind_of(r.code);
    if (!kind) {
      throw Error("journal '" + assignment.journal_id + "' uses unknown code " +
                  std::to_string(r.code));
    }
    switch (*kind) {
      case CodeKind::regular:
        dense[*scheme.index_of(r.code)] += share;
        break;
      case CodeKind::misc: {
        const auto members = scheme.categories_in_area(*scheme.area_slot_of(*scheme.misc_area(r.code)));
        const double each = share / static_cast<double>(members.size());
        for (const auto idx : members) dense[idx] += each;
        break;
      }
      case CodeKind::multidisciplinary: {
        const double each = share / static_cast<double>(scheme.size());
        for (auto& d : dense) d += each;
        break;
      }
    }
  }
  return WeightVector::from_dense(dense);
}

}  // namespace refclass
