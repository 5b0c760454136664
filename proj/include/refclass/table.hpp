#pragma once

// Delimiter-separated UTF-8 tables with a header row.
//
// The delimiter is detected from the header line: tab if present, else comma,
// else semicolon. Comma and semicolon tables accept RFC 4180 style quoting.
// Writers always emit tab-separated output.

#include <cstddef>
#include <fstream>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace refclass {

class TableReader {
 public:
  // Reads from a file; throws Error if it cannot be opened or has no header.
  explicit TableReader(const std::string& path);
  // Reads from an already open stream; `source` is only used in messages.
  TableReader(std::istream& in, std::string source);

  const std::vector<std::string>& header() const { return header_; }
  char delimiter() const { return delimiter_; }

  // Index of a header column, or nullopt if absent.
  std::optional<std::size_t> find_column(std::string_view name) const;
  // As find_column, but throws Error naming the table when absent.
  std::size_t column(std::string_view name) const;

  // Advances to the next non-blank row. Throws Error on a row whose field
  // count differs from the header.
  bool next();
  const std::vector<std::string>& row() const { return row_; }
  const std::string& field(std::size_t i) const { return row_[i]; }
  std::size_t line_number() const { return line_; }
  const std::string& source() const { return source_; }

 private:
  void read_header();
  void split(const std::string& line);

  std::unique_ptr<std::ifstream> owned_;
  std::istream* in_ = nullptr;
  std::string source_;
  std::vector<std::string> header_;
  std::vector<std::string> row_;
  char delimiter_ = '\t';
  std::size_t line_ = 0;
};

class TableWriter {
 public:
  TableWriter(std::ostream& out, const std::vector<std::string>& columns);

  TableWriter& cell(std::string_view value);
  TableWriter& cell(double value);
  TableWriter& cell(long long value);
  TableWriter& cell(int value) { return cell(static_cast<long long>(value)); }
  TableWriter& cell(std::size_t value) { return cell(static_cast<long long>(value)); }
  void end_row();

 private:
  std::ostream& out_;
  std::size_t columns_;
  std::size_t filled_ = 0;
};

// Shortest decimal text that round-trips to the same double.
std::string format_double(double value);
double parse_double(std::string_view text, std::string_view what);
long long parse_integer(std::string_view text, std::string_view what);

}  // namespace refclass
