#include "refclass/error.hpp"
#include "refclass/kernels.hpp"
#include "kernel_rows.hpp"

namespace refclass::kernels::serial {

VectorStore accumulate_references(const Corpus& corpus, const VectorStore& papers,
                                  std::span<const std::uint8_t> citer_mask, bool fractional) {
  detail::Scratch scratch(corpus.category_count());
  VectorStore out;
  std::vector<Entry> row;
  for (ReferenceIndex r = 0; r < corpus.reference_count(); ++r) {
    row.clear();
    detail::accumulate_row(corpus, papers, citer_mask, fractional, r, scratch, row);
    out.append_row(row);
  }
  return out;
}

PropagateResult propagate(const Corpus& corpus, const VectorStore& refs,
                          const VectorStore& previous, std::span<const std::uint8_t> update_mask,
                          bool limited) {
  detail::Scratch scratch(corpus.category_count());
  PropagateResult result;
  std::vector<Entry> row;
  for (PaperIndex p = 0; p < corpus.paper_count(); ++p) {
    row.clear();
    if (detail::propagate_row(corpus, refs, previous, update_mask, limited, p, scratch, row)) {
      ++result.stalled;
    }
    result.papers.append_row(row);
  }
  return result;
}

double squared_difference(const VectorStore& current, const VectorStore& previous) {
  if (current.rows() != previous.rows()) throw Error("squared_difference: row counts differ");
  double total = 0.0;
  for (std::size_t i = 0; i < current.rows(); ++i) {
    total += detail::row_squared_difference(current.row(i), previous.row(i));
  }
  return total;
}

}  // namespace refclass::kernels::serial
