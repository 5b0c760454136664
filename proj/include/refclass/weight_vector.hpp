#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace refclass {

using CategoryIndex = std::uint32_t;

struct Entry {
  CategoryIndex index;
  double weight;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// Sparse category -> weight map. Entries are kept sorted by ascending
// category index and never hold a zero weight. Category index order is the
// scheme's ascending code order, so iteration order is canonical.
class WeightVector {
 public:
  WeightVector() = default;

  // Merges repeated indices by summation and drops zero weights.
  // Throws Error on a negative or non-finite weight.
  static WeightVector from_entries(std::vector<Entry> entries);
  static WeightVector from_dense(std::span<const double> dense);
  static WeightVector unit(CategoryIndex index) { return from_sorted({{index, 1.0}}); }
  // Trusts the caller: sorted, unique, positive.
  static WeightVector from_sorted(std::vector<Entry> entries);

  std::span<const Entry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  double at(CategoryIndex index) const;
  bool contains(CategoryIndex index) const { return at(index) > 0.0; }

  // Summed in ascending index order.
  double sum() const;
  // Each weight divided by sum(); the empty vector stays empty.
  WeightVector normalized() const;
  std::vector<double> to_dense(std::size_t categories) const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

 private:
  std::vector<Entry> entries_;
};

// Row-compressed set of sparse vectors, one row per paper or reference.
class VectorStore {
 public:
  VectorStore() = default;
  static VectorStore from_vectors(std::span<const WeightVector> vectors);

  std::size_t rows() const { return offsets_.size() - 1; }
  std::size_t nonzeros() const { return entries_.size(); }
  std::span<const Entry> row(std::size_t i) const {
    return {entries_.data() + offsets_[i], entries_.data() + offsets_[i + 1]};
  }
  WeightVector vector(std::size_t i) const;

  void append_row(std::span<const Entry> row);
  // Appends all rows of `other`, in order.
  void append_rows(const VectorStore& other);
  void reserve(std::size_t rows, std::size_t nonzeros);

  friend bool operator==(const VectorStore&, const VectorStore&) = default;

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<Entry> entries_;
};

}  // namespace refclass
