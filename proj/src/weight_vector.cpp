#include "refclass/weight_vector.hpp"

#include <algorithm>
#include <cmath>

#include "refclass/error.hpp"

namespace refclass {

WeightVector WeightVector::from_entries(std::vector<Entry> entries) {
  for (const auto& e : entries) {
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw Error("weight vector entry must be finite and non-negative");
    }
  }
  std::stable_sort(entries.begin(), entries.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const auto& e : entries) {
    if (!merged.empty() && merged.back().index == e.index) {
      merged.back().weight += e.weight;
    } else {
      merged.push_back(e);
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.weight == 0.0; });
  return from_sorted(std::move(merged));
}

WeightVector WeightVector::from_dense(std::span<const double> dense) {
  std::vector<Entry> entries;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i] < 0.0 || !std::isfinite(dense[i])) {
      throw Error("weight vector entry must be finite and non-negative");
    }
    if (dense[i] > 0.0) entries.push_back({static_cast<CategoryIndex>(i), dense[i]});
  }
  return from_sorted(std::move(entries));
}

WeightVector WeightVector::from_sorted(std::vector<Entry> entries) {
  WeightVector v;
  v.entries_ = std::move(entries);
  return v;
}

double WeightVector::at(CategoryIndex index) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                                   [](const Entry& e, CategoryIndex i) { return e.index < i; });
  return (it != entries_.end() && it->index == index) ? it->weight : 0.0;
}

double WeightVector::sum() const {
  double s = 0.0;
  for (const auto& e : entries_) s += e.weight;
  return s;
}

WeightVector WeightVector::normalized() const {
  const double s = sum();
  WeightVector out = *this;
  if (s > 0.0) {
    for (auto& e : out.entries_) e.weight /= s;
  }
  return out;
}

std::vector<double> WeightVector::to_dense(std::size_t categories) const {
  std::vector<double> dense(categories, 0.0);
  for (const auto& e : entries_) {
    if (e.index >= categories) throw Error("weight vector index outside the category range");
    dense[e.index] = e.weight;
  }
  return dense;
}

VectorStore VectorStore::from_vectors(std::span<const WeightVector> vectors) {
  VectorStore store;
  std::size_t nnz = 0;
  for (const auto& v : vectors) nnz += v.size();
  store.reserve(vectors.size(), nnz);
  for (const auto& v : vectors) store.append_row(v.entries());
  return store;
}

WeightVector VectorStore::vector(std::size_t i) const {
  const auto r = row(i);
  return WeightVector::from_sorted({r.begin(), r.end()});
}

void VectorStore::append_row(std::span<const Entry> row) {
  entries_.insert(entries_.end(), row.begin(), row.end());
  offsets_.push_back(entries_.size());
}

void VectorStore::append_rows(const VectorStore& other) {
  const std::size_t base = entries_.size();
  entries_.insert(entries_.end(), other.entries_.begin(), other.entries_.end());
  offsets_.reserve(offsets_.size() + other.rows());
  for (std::size_t i = 1; i < other.offsets_.size(); ++i) {
    offsets_.push_back(base + other.offsets_[i]);
  }
}

void VectorStore::reserve(std::size_t rows, std::size_t nonzeros) {
  offsets_.reserve(rows + 1);
  entries_.reserve(nonzeros);
}

}  // namespace refclass
