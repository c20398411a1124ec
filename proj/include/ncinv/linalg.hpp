#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "ncinv/cyclo.hpp"

namespace ncinv {

/// Sparse vector: (column, value) pairs sorted by column, no zero values.
using SparseRow = std::vector<std::pair<std::size_t, CycloNum>>;

/// Dense matrix of cyclotomic numbers, row major.
using Matrix = std::vector<std::vector<CycloNum>>;

SparseRow to_sparse(const std::vector<CycloNum>& dense);
std::vector<CycloNum> to_dense(const SparseRow& row, std::size_t ncols, int n);

/// Incremental row echelon form over Q(lambda_n).
///
/// Rows are kept with a leading 1; pivots are the leading columns, so the
/// earliest column always wins as pivot. reduced_rows() back-substitutes to
/// reduced row echelon form.
class Echelon {
 public:
  Echelon(int n, std::size_t ncols);

  /// Inserts `row` if it is independent of the current rows.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);

  /// Leading-term reduction of `row`; zero iff `row` lies in the span.
  SparseRow remainder(SparseRow row) const;
  bool contains(const SparseRow& row) const { return remainder(row).empty(); }

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  int n() const { return n_; }
  std::vector<std::size_t> pivots() const;

  /// Reduced row echelon form, rows ordered by pivot column.
  std::vector<SparseRow> reduced_rows() const;

 private:
  int n_;
  std::size_t ncols_;
  std::map<std::size_t, SparseRow> rows_;  // keyed by pivot column
};

/// row -= factor * other (both sorted sparse rows).
void axpy(SparseRow& row, const CycloNum& factor, const SparseRow& other);

/// Exact rank by Gaussian elimination; the pivot in each column is the first
/// row (in row order) with a nonzero entry there.
std::size_t rank(const Matrix& m);

/// True iff m * x == 0 exactly. Throws std::invalid_argument on a size mismatch.
bool kernel_annihilation(const Matrix& m, const std::vector<CycloNum>& x);

/// Expresses vectors as combinations of a fixed list of independent vectors.
class CoordinateSolver {
 public:
  /// Throws std::invalid_argument if the basis vectors are dependent.
  CoordinateSolver(int n, std::size_t ncols, const std::vector<SparseRow>& basis);

  /// Coordinates of `v` in the basis; throws std::domain_error when `v` is
  /// outside the span.
  std::vector<CycloNum> solve(const SparseRow& v) const;

  std::size_t dimension() const { return dim_; }

 private:
  int n_;
  std::size_t ncols_;
  std::size_t dim_;
  Echelon augmented_;
};

}  // namespace ncinv
