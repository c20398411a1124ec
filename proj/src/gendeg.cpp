#include "ncinv/gendeg.hpp"

#include <algorithm>
#include <atomic>
#include <string>
#include <thread>

namespace ncinv {

namespace {

// Runs fn(i) for i in [0, count) across `threads` workers. Results land in
// slots owned by index, so the outcome is schedule independent.
template <class Fn>
void parallel_for(std::size_t count, unsigned threads, Fn fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr error;
  std::mutex error_mu;
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

GradedSubspace product_span(const GroupAction& act, int d,
                            const std::vector<std::vector<NcPolynomial>>& bases,
                            std::optional<std::size_t> saturation, unsigned threads) {
  if (d < 0) throw std::invalid_argument("product_span: negative degree");
  if (d > 1 && bases.size() < static_cast<std::size_t>(d))
    throw std::invalid_argument("product_span: invariant bases missing below degree " +
                                std::to_string(d));
  const Algebra& alg = act.algebra();
  const MonomialIndexer idx(alg.spec().kind, d);
  Echelon ech(act.n(), idx.size());

  struct Pair {
    const NcPolynomial* p;
    const NcPolynomial* q;
  };
  std::vector<Pair> pairs;
  for (int e = 1; e < d; ++e) {
    for (const auto& p : bases[static_cast<std::size_t>(e)])
      for (const auto& q : bases[static_cast<std::size_t>(d - e)]) pairs.push_back({&p, &q});
  }

  // Products are computed in parallel batches and inserted in pair order.
  const std::size_t batch = std::max<std::size_t>(16, 4 * static_cast<std::size_t>(threads));
  std::vector<SparseRow> rows;
  for (std::size_t start = 0; start < pairs.size(); start += batch) {
    if (saturation && ech.rank() >= *saturation) break;
    const std::size_t count = std::min(batch, pairs.size() - start);
    rows.assign(count, {});
    parallel_for(count, threads, [&](std::size_t i) {
      const Pair& pr = pairs[start + i];
      rows[i] = coordinates(alg.multiply(*pr.p, *pr.q), idx);
    });
    for (auto& r : rows) {
      if (saturation && ech.rank() >= *saturation) break;
      ech.insert(std::move(r));
    }
  }
  return GradedSubspace{d, idx.size(), ech.reduced_rows()};
}

GenerationReport compute_beta(const GroupAction& act, int max_multiple, bool full_scan,
                              unsigned threads) {
  act.require_automorphism();
  if (max_multiple < 3) throw std::invalid_argument("max_multiple must be at least 3");
  const int n = act.n();
  const int top = max_multiple * n;
  GenerationReport report;
  report.spec = act.spec();
  report.n = n;

  // Factor bases: orbit sums are two-term, which keeps products cheap.
  std::vector<std::vector<NcPolynomial>> bases(static_cast<std::size_t>(top) + 1);
  for (int d = 1; d <= top; ++d) {
    DegreeRecord rec;
    rec.degree = d;
    std::vector<NcPolynomial> basis;
    if (d % n == 0) {
      for (auto& [m, p] : act.orbit_sum_basis(d)) basis.push_back(std::move(p));
    } else if (full_scan) {
      basis = act.reynolds_basis(d);
    }
    rec.inv_dim = basis.size();
    if (rec.inv_dim > 0) {
      rec.product_dim = product_span(act, d, bases, rec.inv_dim, threads).dimension();
    }
    rec.new_gens = rec.inv_dim - rec.product_dim;
    if (rec.new_gens > 0) report.beta = d;
    bases[static_cast<std::size_t>(d)] = std::move(basis);
    report.degrees.push_back(rec);
  }
  report.exhausted = 2 * report.beta <= top;
  return report;
}

ProductMatrix product_matrix(const GroupAction& act, int d, const std::vector<NcPolynomial>& basis_d,
                             unsigned threads) {
  act.require_automorphism();
  const Algebra& alg = act.algebra();
  const int n = act.n();
  const MonomialIndexer idx(alg.spec().kind, d);
  std::vector<SparseRow> target;
  for (const auto& p : basis_d) target.push_back(coordinates(p, idx));
  const CoordinateSolver solver(n, idx.size(), target);

  std::vector<std::vector<std::pair<Monomial, NcPolynomial>>> factors(static_cast<std::size_t>(d) + 1);
  for (int e = n; e < d; e += n) factors[static_cast<std::size_t>(e)] = act.orbit_sum_basis(e);

  ProductMatrix out;
  std::vector<std::pair<const std::pair<Monomial, NcPolynomial>*, const std::pair<Monomial, NcPolynomial>*>> pairs;
  for (int e = n; d - e >= n; e += n) {
    for (const auto& p : factors[static_cast<std::size_t>(e)])
      for (const auto& q : factors[static_cast<std::size_t>(d - e)]) {
        pairs.emplace_back(&p, &q);
        out.factors.push_back({FactorLabel{e, p.first}, FactorLabel{d - e, q.first}});
      }
  }
  out.rows.resize(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    const auto& [p, q] = pairs[i];
    const SparseRow row = coordinates(alg.multiply(p->second, q->second), idx);
    try {
      out.rows[i] = solver.solve(row);
    } catch (const std::domain_error&) {
      throw ActionError("product of orbit sums of degrees " + std::to_string(degree(alg.spec().kind, p->first)) +
                        " and " + std::to_string(degree(alg.spec().kind, q->first)) +
                        " is not in the span of the degree-" + std::to_string(d) + " basis");
    }
  });
  return out;
}

}  // namespace ncinv
