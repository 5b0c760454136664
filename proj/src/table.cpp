#include "refclass/table.hpp"

#include <charconv>
#include <cmath>
#include <ostream>
#include <system_error>

#include "refclass/error.hpp"

namespace refclass {

namespace {

void strip_line_end(std::string& line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

TableReader::TableReader(const std::string& path)
    : owned_(std::make_unique<std::ifstream>(path, std::ios::binary)), source_(path) {
  if (!*owned_) throw Error("cannot open table '" + path + "'");
  in_ = owned_.get();
  read_header();
}

TableReader::TableReader(std::istream& in, std::string source)
    : in_(&in), source_(std::move(source)) {
  read_header();
}

void TableReader::read_header() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    strip_line_end(line);
    if (line_ == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    if (line.find('\t') != std::string::npos) {
      delimiter_ = '\t';
    } else if (line.find(',') != std::string::npos) {
      delimiter_ = ',';
    } else if (line.find(';') != std::string::npos) {
      delimiter_ = ';';
    }
    split(line);
    header_.reserve(row_.size());
    for (const auto& name : row_) header_.push_back(trim(name));
    row_.clear();
    return;
  }
  throw Error("table '" + source_ + "' has no header row");
}

void TableReader::split(const std::string& line) {
  row_.clear();
  if (delimiter_ == '\t') {
    std::size_t start = 0;
    while (true) {
      const auto pos = line.find('\t', start);
      if (pos == std::string::npos) {
        row_.emplace_back(line.substr(start));
        break;
      }
      row_.emplace_back(line.substr(start, pos - start));
      start = pos + 1;
    }
    return;
  }
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"' && cur.empty()) {
      quoted = true;
    } else if (ch == delimiter_) {
      row_.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (quoted) {
    throw Error(source_ + ":" + std::to_string(line_) + ": unterminated quoted field");
  }
  row_.push_back(std::move(cur));
}

std::optional<std::size_t> TableReader::find_column(std::string_view name) const {
  for (std::size_t i = 0; i < header_.size(); ++i) {
    if (header_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t TableReader::column(std::string_view name) const {
  if (auto idx = find_column(name)) return *idx;
  throw Error("table '" + source_ + "' lacks required column '" + std::string(name) + "'");
}

bool TableReader::next() {
  std::string line;
  while (std::getline(*in_, line)) {
    ++line_;
    strip_line_end(line);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    split(line);
    if (row_.size() != header_.size()) {
      throw Error(source_ + ":" + std::to_string(line_) + ": malformed row, expected " +
                  std::to_string(header_.size()) + " fields, found " +
                  std::to_string(row_.size()));
    }
    return true;
  }
  return false;
}

TableWriter::TableWriter(std::ostream& out, const std::vector<std::string>& columns)
    : out_(out), columns_(columns.size()) {
  for (const auto& c : columns) cell(c);
  end_row();
}

TableWriter& TableWriter::cell(std::string_view value) {
  if (value.find_first_of("\t\r\n") != std::string_view::npos) {
    throw Error("field contains a tab or line break: '" + std::string(value) + "'");
  }
  if (filled_++ > 0) out_ << '\t';
  out_ << value;
  return *this;
}

TableWriter& TableWriter::cell(double value) { return cell(std::string_view(format_double(value))); }

TableWriter& TableWriter::cell(long long value) {
  return cell(std::string_view(std::to_string(value)));
}

void TableWriter::end_row() {
  if (filled_ != columns_) {
    throw Error("table row has " + std::to_string(filled_) + " cells, expected " +
                std::to_string(columns_));
  }
  out_ << '\n';
  filled_ = 0;
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  double value = 0.0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw Error("invalid number '" + t + "' for " + std::string(what));
  }
  return value;
}

long long parse_integer(std::string_view text, std::string_view what) {
  const std::string t = trim(text);
  long long value = 0;
  const auto res = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw Error("invalid integer '" + t + "' for " + std::string(what));
  }
  return value;
}

}  // namespace refclass
