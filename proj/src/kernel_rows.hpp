#pragma once

// Per-row bodies shared by the serial and OpenMP kernel drivers.

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "refclass/corpus.hpp"
#include "refclass/weight_vector.hpp"

namespace refclass::kernels::detail {

struct Scratch {
  explicit Scratch(std::size_t categories) : acc(categories, 0.0), mark(categories, 0) {}

  std::vector<double> acc;
  std::vector<std::uint8_t> mark;
  std::vector<CategoryIndex> touched;
};

inline void emit_normalized(std::vector<Entry>& out, std::size_t first) {
  double sum = 0.0;
  for (std::size_t i = first; i < out.size(); ++i) sum += out[i].weight;
  if (sum > 0.0) {
    for (std::size_t i = first; i < out.size(); ++i) out[i].weight /= sum;
  } else {
    out.resize(first);
  }
}

// Drains the touched categories of `s` into `out`, ascending, then normalizes
// the appended run. Leaves the scratch zeroed.
inline void drain_touched(Scratch& s, std::vector<Entry>& out) {
  std::sort(s.touched.begin(), s.touched.end());
  const std::size_t first = out.size();
  for (const auto c : s.touched) {
    if (s.acc[c] > 0.0) out.push_back({c, s.acc[c]});
    s.acc[c] = 0.0;
    s.mark[c] = 0;
  }
  s.touched.clear();
  emit_normalized(out, first);
}

inline void accumulate_row(const Corpus& corpus, const VectorStore& papers,
                           std::span<const std::uint8_t> citer_mask, bool fractional,
                           ReferenceIndex r, Scratch& s, std::vector<Entry>& out) {
  for (const auto p : corpus.citers_of(r)) {
    if (!citer_mask[p]) continue;
    const double n = static_cast<double>(corpus.ref_count(p));
    for (const auto& e : papers.row(p)) {
      if (!s.mark[e.index]) {
        s.mark[e.index] = 1;
        s.touched.push_back(e.index);
      }
      s.acc[e.index] += fractional ? e.weight / n : e.weight;
    }
  }
  drain_touched(s, out);
}

// Returns true when the paper stalled (its previous row was copied).
inline bool propagate_row(const Corpus& corpus, const VectorStore& refs,
                          const VectorStore& previous, std::span<const std::uint8_t> update_mask,
                          bool limited, PaperIndex p, Scratch& s, std::vector<Entry>& out) {
  const auto prev = previous.row(p);
  if (!update_mask[p]) {
    out.insert(out.end(), prev.begin(), prev.end());
    return false;
  }
  const std::size_t first = out.size();
  if (limited) {
    for (const auto& e : prev) s.mark[e.index] = 1;
    for (const auto r : corpus.references_of(p)) {
      for (const auto& e : refs.row(r)) {
        if (s.mark[e.index]) s.acc[e.index] += e.weight;
      }
    }
    for (const auto& e : prev) {
      if (s.acc[e.index] > 0.0) out.push_back({e.index, s.acc[e.index]});
      s.acc[e.index] = 0.0;
      s.mark[e.index] = 0;
    }
    emit_normalized(out, first);
  } else {
    for (const auto r : corpus.references_of(p)) {
      for (const auto& e : refs.row(r)) {
        if (!s.mark[e.index]) {
          s.mark[e.index] = 1;
          s.touched.push_back(e.index);
        }
        s.acc[e.index] += e.weight;
      }
    }
    drain_touched(s, out);
  }
  if (out.size() == first) {
    out.insert(out.end(), prev.begin(), prev.end());
    return true;
  }
  return false;
}

inline double row_squared_difference(std::span<const Entry> a, std::span<const Entry> b) {
  double sum = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    double d;
    if (j == b.size() || (i < a.size() && a[i].index < b[j].index)) {
      d = a[i++].weight;
    } else if (i == a.size() || b[j].index < a[i].index) {
      d = b[j++].weight;
    } else {
      d = a[i++].weight - b[j++].weight;
    }
    sum += d * d;
  }
  return sum;
}

}  // namespace refclass::kernels::detail
