#pragma once

#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "refclass/weight_vector.hpp"

namespace refclass {

enum class CodeKind { regular, misc, multidisciplinary };

struct SchemeRow {
  int code;
  int area_code;
  CodeKind kind;
};

// The set of regular categories a classification is expressed in, together
// with the miscellaneous and multidisciplinary codes whose weight is spread
// over them. Immutable once built.
//
// Category indices run 0..size()-1 in ascending code order; that order is the
// component order of every WeightVector in the library.
class CategoryScheme {
 public:
  // Validates and indexes the rows. Throws Error on an empty table, duplicate
  // codes, a second misc code for one area, a misc code for an area without
  // regular categories, or more than one multidisciplinary code.
  static CategoryScheme from_rows(std::vector<SchemeRow> rows);

  std::size_t size() const { return codes_.size(); }
  int code(CategoryIndex index) const { return codes_[index]; }
  std::span<const int> codes() const { return codes_; }
  std::optional<CategoryIndex> index_of(int code) const;

  // Area codes of the regular categories, ascending.
  std::span<const int> areas() const { return areas_; }
  std::size_t area_count() const { return areas_.size(); }
  int area_code(CategoryIndex index) const { return areas_[category_area_[index]]; }
  // Position of the category's area within areas().
  std::size_t area_slot(CategoryIndex index) const { return category_area_[index]; }
  std::optional<std::size_t> area_slot_of(int area_code) const;
  std::span<const CategoryIndex> categories_in_area(std::size_t area_slot) const {
    return area_members_[area_slot];
  }

  std::optional<int> multidisciplinary_code() const { return multidisciplinary_; }
  const std::map<int, int>& misc_codes() const { return misc_by_area_; }
  // Area code absorbing the given misc code, if it is one.
  std::optional<int> misc_area(int code) const;
  std::optional<CodeKind> kind_of(int code) const;

 private:
  std::vector<int> codes_;
  std::vector<std::size_t> category_area_;
  std::vector<int> areas_;
  std::vector<std::vector<CategoryIndex>> area_members_;
  std::map<int, int> misc_by_area_;
  std::map<int, int> area_by_misc_;
  std::optional<int> multidisciplinary_;
};

// Columns: code, area_code, kind (regular | misc | multidisciplinary).
CategoryScheme load_scheme(const std::string& path);
CategoryScheme read_scheme(std::istream& in, const std::string& source);

struct RawAssignment {
  int code;
  double degree = 1.0;
};

// A journal's category assignments as delivered by the source database.
// Codes may be regular categories, misc categories, or the multidisciplinary
// area code; degrees default to 1 (equal split).
struct JournalAssignment {
  std::string journal_id;
  std::vector<RawAssignment> raw;
};

// Routes each normalized degree onto regular categories: a regular code keeps
// it, a misc code splits it equally over its area, the multidisciplinary code
// splits it equally over the whole scheme. The result sums to 1.
WeightVector fractionalize_journal(const JournalAssignment& assignment,
                                   const CategoryScheme& scheme);

}  // namespace refclass
