#include <omp.h>

#include <optional>

#include "refclass/error.hpp"
#include "refclass/kernels.hpp"
#include "kernel_rows.hpp"

namespace refclass::kernels {

namespace {

struct Block {
  VectorStore rows;
  std::size_t stalled = 0;
};

int resolve_threads(int threads) { return threads > 0 ? threads : omp_get_max_threads(); }

// Runs `body(row, scratch, out) -> stalled` over all rows, one Block per
// kBlockRows rows, then concatenates the blocks in order.
template <typename Body>
PropagateResult run_blocks(std::size_t rows, std::size_t categories, int threads, Body body) {
  const std::size_t blocks = (rows + kBlockRows - 1) / kBlockRows;
  std::vector<Block> parts(blocks);
  const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel num_threads(resolve_threads(threads))
  {
    std::optional<detail::Scratch> scratch;
    std::vector<Entry> row;
#pragma omp for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
      if (!scratch) scratch.emplace(categories);
      auto& part = parts[static_cast<std::size_t>(b)];
      const std::size_t begin = static_cast<std::size_t>(b) * kBlockRows;
      const std::size_t end = std::min(rows, begin + kBlockRows);
      for (std::size_t i = begin; i < end; ++i) {
        row.clear();
        if (body(i, *scratch, row)) ++part.stalled;
        part.rows.append_row(row);
      }
    }
  }
  PropagateResult result;
  std::size_t nnz = 0;
  for (const auto& part : parts) nnz += part.rows.nonzeros();
  result.papers.reserve(rows, nnz);
  for (const auto& part : parts) {
    result.papers.append_rows(part.rows);
    result.stalled += part.stalled;
  }
  return result;
}

}  // namespace

namespace parallel {

VectorStore accumulate_references(const Corpus& corpus, const VectorStore& papers,
                                  std::span<const std::uint8_t> citer_mask, bool fractional,
                                  int threads) {
  auto result = run_blocks(corpus.reference_count(), corpus.category_count(), threads,
                           [&](std::size_t r, detail::Scratch& s, std::vector<Entry>& out) {
                             detail::accumulate_row(corpus, papers, citer_mask, fractional,
                                                    static_cast<ReferenceIndex>(r), s, out);
                             return false;
                           });
  return std::move(result.papers);
}

PropagateResult propagate(const Corpus& corpus, const VectorStore& refs,
                          const VectorStore& previous, std::span<const std::uint8_t> update_mask,
                          bool limited, int threads) {
  return run_blocks(corpus.paper_count(), corpus.category_count(), threads,
                    [&](std::size_t p, detail::Scratch& s, std::vector<Entry>& out) {
                      return detail::propagate_row(corpus, refs, previous, update_mask, limited,
                                                   static_cast<PaperIndex>(p), s, out);
                    });
}

double squared_difference(const VectorStore& current, const VectorStore& previous, int threads) {
  if (current.rows() != previous.rows()) throw Error("squared_difference: row counts differ");
  const auto n = static_cast<std::ptrdiff_t>(current.rows());
  std::vector<double> per_row(current.rows());
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    per_row[k] = detail::row_squared_difference(current.row(k), previous.row(k));
  }
  // Fixed left-to-right order keeps the total independent of the thread count.
  double total = 0.0;
  for (const double d : per_row) total += d;
  return total;
}

}  // namespace parallel

VectorStore accumulate_references(const Corpus& corpus, const VectorStore& papers,
                                  std::span<const std::uint8_t> citer_mask, bool fractional,
                                  ExecPolicy policy) {
  if (policy.backend == Backend::serial) {
    return serial::accumulate_references(corpus, papers, citer_mask, fractional);
  }
  return parallel::accumulate_references(corpus, papers, citer_mask, fractional, policy.threads);
}

PropagateResult propagate(const Corpus& corpus, const VectorStore& refs,
                          const VectorStore& previous, std::span<const std::uint8_t> update_mask,
                          bool limited, ExecPolicy policy) {
  if (policy.backend == Backend::serial) {
    return serial::propagate(corpus, refs, previous, update_mask, limited);
  }
  return parallel::propagate(corpus, refs, previous, update_mask, limited, policy.threads);
}

double squared_difference(const VectorStore& current, const VectorStore& previous,
                          ExecPolicy policy) {
  if (policy.backend == Backend::serial) return serial::squared_difference(current, previous);
  return parallel::squared_difference(current, previous, policy.threads);
}

}  // namespace refclass::kernels
