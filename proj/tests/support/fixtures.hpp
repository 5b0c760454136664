#pragma once

#include <sstream>
#include <string>

#include "refclass/corpus.hpp"
#include "refclass/scheme.hpp"

namespace refclass::testing {

inline CategoryScheme scheme_from(const std::string& tsv) {
  std::istringstream in(tsv);
  return read_scheme(in, "inline");
}

// Three regular categories c1=1102, c2=1103, c3=1202 over two areas, with misc
// codes and a multidisciplinary code.
inline CategoryScheme tiny_scheme() {
  return scheme_from(
      "code\tarea_code\tkind\n"
      "1102\t1100\tregular\n"
      "1103\t1100\tregular\n"
      "1202\t1200\tregular\n"
      "1101\t1100\tmisc\n"
      "1201\t1200\tmisc\n"
      "1000\t1000\tmultidisciplinary\n");
}

inline JournalAssignment journal(std::string id, std::vector<int> codes) {
  JournalAssignment j{std::move(id), {}};
  for (const int c : codes) j.raw.push_back({c, 1.0});
  return j;
}

}  // namespace refclass::testing
