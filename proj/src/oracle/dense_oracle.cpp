#include "refclass/dense_oracle.hpp"

#include <cmath>

#include "refclass/error.hpp"

namespace refclass::oracle {

namespace {

using Matrix = std::vector<std::vector<double>>;

void normalize(std::vector<double>& v) {
  double sum = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) sum += v[i];
  if (sum == 0.0) return;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] /= sum;
}

bool all_zero(const std::vector<double>& v) {
  for (const double x : v) {
    if (x != 0.0) return false;
  }
  return true;
}

double square_difference(const Matrix& a, const Matrix& b) {
  double total = 0.0;
  for (std::size_t p = 0; p < a.size(); ++p) {
    double row = 0.0;
    for (std::size_t c = 0; c < a[p].size(); ++c) {
      const double d = a[p][c] - b[p][c];
      row += d * d;
    }
    total += row;
  }
  return total;
}

}  // namespace

DenseResult run_dense(const Corpus& corpus, const DenseConfig& config) {
  const std::size_t num_papers = corpus.paper_count();
  if (num_papers > kMaxPapers) {
    throw Error("dense oracle refuses corpora above " + std::to_string(kMaxPapers) + " papers (got " +
                std::to_string(num_papers) + ")");
  }
  const std::size_t cats = corpus.category_count();

  // Plain arrays: each paper's reference identifiers and the
  // list of distinct identifiers.
  std::vector<std::vector<std::string>> paper_refs(num_papers);
  std::vector<std::string> refs;
  for (std::size_t p = 0; p < num_papers; ++p) {
    for (const auto r : corpus.references_of(static_cast<PaperIndex>(p))) {
      const auto& id = corpus.reference_id(r);
      paper_refs[p].push_back(id);
      bool known = false;
      for (const auto& existing : refs) {
        if (existing == id) known = true;
      }
      if (!known) refs.push_back(id);
    }
  }
  std::vector<bool> update(num_papers), citer(num_papers);
  for (std::size_t p = 0; p < num_papers; ++p) {
    update[p] = corpus.eligible(static_cast<PaperIndex>(p));
    citer[p] = config.include_ineligible_citers || update[p];
  }

  Matrix w_papers(num_papers);
  for (std::size_t p = 0; p < num_papers; ++p) {
    w_papers[p] = corpus.initial_vector(static_cast<PaperIndex>(p)).to_dense(cats);
  }

  const auto reference_vectors = [&](const Matrix& w) {
    Matrix w_refs(refs.size(), std::vector<double>(cats, 0.0));
    for (std::size_t nr = 0; nr < refs.size(); ++nr) {
      for (std::size_t np = 0; np < num_papers; ++np) {
        if (!citer[np]) continue;
        for (std::size_t npr = 0; npr < paper_refs[np].size(); ++npr) {
          if (refs[nr] == paper_refs[np][npr]) {
            for (std::size_t c = 0; c < cats; ++c) {
              w_refs[nr][c] += config.fractional
                                   ? w[np][c] / static_cast<double>(paper_refs[np].size())
                                   : w[np][c];
            }
          }
        }
      }
      normalize(w_refs[nr]);
    }
    return w_refs;
  };

  const auto paper_vectors = [&](const Matrix& w_refs, const Matrix& prev, bool limited) {
    Matrix w(num_papers);
    for (std::size_t np = 0; np < num_papers; ++np) {
      if (!update[np]) {
        w[np] = prev[np];
        continue;
      }
      w[np].assign(cats, 0.0);
      for (std::size_t npr = 0; npr < paper_refs[np].size(); ++npr) {
        for (std::size_t nr = 0; nr < refs.size(); ++nr) {
          if (refs[nr] == paper_refs[np][npr]) {
            for (std::size_t c = 0; c < cats; ++c) {
              if (!limited || prev[np][c] > 0.0) w[np][c] += w_refs[nr][c];
            }
            break;
          }
        }
      }
      if (all_zero(w[np])) {
        w[np] = prev[np];
      } else {
        normalize(w[np]);
      }
    }
    return w;
  };

  DenseResult result;
  while (true) {
    const Matrix w_prev = w_papers;
    const Matrix w_refs = reference_vectors(w_papers);
    w_papers = paper_vectors(w_refs, w_prev, true);
    ++result.iterations;
    const double diff = square_difference(w_papers, w_prev);
    result.trace.push_back(diff);
    if (diff < config.threshold || result.iterations >= config.max_iterations) break;
  }
  result.jl = w_papers;

  const Matrix w_refs = reference_vectors(w_papers);
  result.u1 = paper_vectors(w_refs, w_papers, false);
  return result;
}

Difference compare(const Corpus& corpus, const std::vector<std::vector<double>>& dense,
                   const Classification& c) {
  Difference d;
  for (std::size_t p = 0; p < corpus.paper_count(); ++p) {
    const auto idx = static_cast<PaperIndex>(p);
    if (!corpus.eligible(idx)) continue;
    const auto* v = c.find(corpus.paper_id(idx));
    for (std::size_t k = 0; k < dense[p].size(); ++k) {
      const double got = v ? v->at(static_cast<CategoryIndex>(k)) : 0.0;
      const double gap = std::fabs(got - dense[p][k]);
      if (gap > d.max_abs || std::isnan(gap)) {
        d.max_abs = std::isnan(gap) ? INFINITY : gap;
        d.paper_id = corpus.paper_id(idx);
        d.category = static_cast<int>(k);
      }
    }
  }
  return d;
}

}  // namespace refclass::oracle
