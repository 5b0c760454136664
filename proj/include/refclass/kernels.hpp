#pragma once

// Propagation kernels. Each kernel exists twice: a plain serial loop kept as
// the reference, and an OpenMP version partitioned into fixed-size blocks.
// Both perform the same floating-point operations in the same order per row,
// so their outputs are bit-identical for any thread count.

#include <cstddef>
#include <cstdint>
#include <span>

#include "refclass/corpus.hpp"
#include "refclass/weight_vector.hpp"

namespace refclass::kernels {

enum class Backend { serial, parallel };

struct ExecPolicy {
  Backend backend = Backend::parallel;
  int threads = 0;  // 0: OpenMP default
};

// Rows handled per parallel work item. Fixed so that partitioning never
// depends on the thread count.
inline constexpr std::size_t kBlockRows = 1024;

// One row per reference: the normalized sum of the vectors of its citing
// papers (one term per citing slot), each divided by the citer's reference
// count when `fractional`. Only papers with citer_mask[p] != 0 contribute.
// References with no contributing citer get an empty row.
VectorStore accumulate_references(const Corpus& corpus, const VectorStore& papers,
                                  std::span<const std::uint8_t> citer_mask, bool fractional,
                                  ExecPolicy policy = {});

struct PropagateResult {
  VectorStore papers;
  std::size_t stalled = 0;
};

// One row per paper. Papers with update_mask[p] != 0 get the normalized sum
// of their references' rows; when `limited`, only categories present in the
// paper's previous row are summed. A paper whose sum is empty keeps its
// previous row and is counted as stalled. Other papers are copied unchanged.
PropagateResult propagate(const Corpus& corpus, const VectorStore& references,
                          const VectorStore& previous, std::span<const std::uint8_t> update_mask,
                          bool limited, ExecPolicy policy = {});

// Sum over rows and categories of the squared component differences.
// Throws Error if the row counts differ.
double squared_difference(const VectorStore& current, const VectorStore& previous,
                          ExecPolicy policy = {});

namespace serial {
VectorStore accumulate_references(const Corpus&, const VectorStore&, std::span<const std::uint8_t>,
                                  bool fractional);
PropagateResult propagate(const Corpus&, const VectorStore&, const VectorStore&,
                          std::span<const std::uint8_t>, bool limited);
double squared_difference(const VectorStore&, const VectorStore&);
}  // namespace serial

namespace parallel {
VectorStore accumulate_references(const Corpus&, const VectorStore&, std::span<const std::uint8_t>,
                                  bool fractional, int threads);
PropagateResult propagate(const Corpus&, const VectorStore&, const VectorStore&,
                          std::span<const std::uint8_t>, bool limited, int threads);
double squared_difference(const VectorStore&, const VectorStore&, int threads);
}  // namespace parallel

}  // namespace refclass::kernels
