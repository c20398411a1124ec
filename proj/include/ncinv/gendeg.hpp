#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ncinv/action.hpp"
#include "ncinv/linalg.hpp"

namespace ncinv {

/// Subspace of the degree-d monomial coordinate space, rows in reduced
/// echelon form.
struct GradedSubspace {
  int degree = 0;
  std::size_t ncols = 0;
  std::vector<SparseRow> rows;

  std::size_t dimension() const { return rows.size(); }
};

/// Worker count: `requested` if nonzero, else hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested);

/// Span of all products p*q, p in bases[e], q in bases[d-e], 0 < e < d.
/// `bases[e]` must exist for every 0 < e < d (an empty list means no
/// invariants in that degree). Stops early once the rank reaches
/// `saturation`. Output does not depend on `threads`.
GradedSubspace product_span(const GroupAction& act, int d,
                            const std::vector<std::vector<NcPolynomial>>& bases,
                            std::optional<std::size_t> saturation = std::nullopt,
                            unsigned threads = 1);

struct DegreeRecord {
  int degree = 0;
  std::size_t inv_dim = 0;
  std::size_t product_dim = 0;
  std::size_t new_gens = 0;
};

struct GenerationReport {
  AlgebraSpec spec;
  int n = 1;
  std::vector<DegreeRecord> degrees;
  int beta = 0;
  bool exhausted = false;
};

/// Scans degrees 1..max_multiple*n. Degrees not divisible by n carry no
/// invariants and are recorded with zeros unless `full_scan` asks for them
/// to be computed. beta is the largest degree with new generators;
/// exhausted means the upper half of the window produced none.
GenerationReport compute_beta(const GroupAction& act, int max_multiple, bool full_scan = false,
                              unsigned threads = 1);

/// Which orbit sum a product-matrix factor is.
struct FactorLabel {
  int degree = 0;
  Monomial monomial;
};

struct ProductMatrix {
  Matrix rows;
  std::vector<std::pair<FactorLabel, FactorLabel>> factors;
};

/// Every ordered product of two lower-degree orbit sums (factor bases from
/// GroupAction::orbit_sum_basis) whose degrees add to d, written in the
/// coordinates of `basis_d`. Throws ActionError if a product falls outside
/// the span of `basis_d`.
ProductMatrix product_matrix(const GroupAction& act, int d, const std::vector<NcPolynomial>& basis_d,
                             unsigned threads = 1);

}  // namespace ncinv
