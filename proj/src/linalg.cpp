#include "ncinv/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ncinv {

SparseRow to_sparse(const std::vector<CycloNum>& dense) {
  SparseRow out;
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (!dense[i].is_zero()) out.emplace_back(i, dense[i]);
  return out;
}

std::vector<CycloNum> to_dense(const SparseRow& row, std::size_t ncols, int n) {
  std::vector<CycloNum> out(ncols, CycloNum::zero(n));
  for (const auto& [c, v] : row) out.at(c) = v;
  return out;
}

void axpy(SparseRow& row, const CycloNum& factor, const SparseRow& other) {
  SparseRow out;
  out.reserve(row.size() + other.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < other.size()) {
    if (j == other.size() || (i < row.size() && row[i].first < other[j].first)) {
      out.push_back(std::move(row[i++]));
    } else if (i == row.size() || other[j].first < row[i].first) {
      out.emplace_back(other[j].first, -(factor * other[j].second));
      ++j;
    } else {
      CycloNum v = row[i].second - factor * other[j].second;
      if (!v.is_zero()) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  row = std::move(out);
}

Echelon::Echelon(int n, std::size_t ncols) : n_(n), ncols_(ncols) {}

SparseRow Echelon::remainder(SparseRow row) const {
  while (!row.empty()) {
    auto it = rows_.find(row.front().first);
    if (it == rows_.end()) break;
    const CycloNum lead = row.front().second;
    axpy(row, lead, it->second);
  }
  return row;
}

bool Echelon::insert(SparseRow row) {
  for (const auto& [c, v] : row)
    if (c >= ncols_) throw std::out_of_range("echelon: column " + std::to_string(c) + " out of range");
  row = remainder(std::move(row));
  if (row.empty()) return false;
  const CycloNum inv = row.front().second.inverse();
  for (auto& [c, v] : row) v *= inv;
  const std::size_t pivot = row.front().first;
  rows_.emplace(pivot, std::move(row));
  return true;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  out.reserve(rows_.size());
  for (const auto& [p, r] : rows_) out.push_back(p);
  return out;
}

std::vector<SparseRow> Echelon::reduced_rows() const {
  std::vector<std::size_t> piv = pivots();
  std::vector<SparseRow> rows;
  rows.reserve(rows_.size());
  for (const auto& [p, r] : rows_) rows.push_back(r);
  // Clear each pivot column from the rows above it, last pivot first.
  for (std::size_t k = rows.size(); k-- > 0;) {
    const std::size_t col = piv[k];
    for (std::size_t r = 0; r < k; ++r) {
      auto& row = rows[r];
      auto hit = std::lower_bound(row.begin(), row.end(), col,
                                  [](const auto& e, std::size_t c) { return e.first < c; });
      if (hit == row.end() || hit->first != col) continue;
      const CycloNum f = hit->second;
      axpy(row, f, rows[k]);
    }
  }
  return rows;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  Matrix a = m;
  const std::size_t nrows = a.size();
  const std::size_t ncols = a.front().size();
  for (const auto& row : a)
    if (row.size() != ncols) throw std::invalid_argument("rank: ragged matrix");
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
    std::size_t p = r;
    while (p < nrows && a[p][c].is_zero()) ++p;
    if (p == nrows) continue;
    std::swap(a[p], a[r]);
    const CycloNum inv = a[r][c].inverse();
    for (std::size_t i = r + 1; i < nrows; ++i) {
      if (a[i][c].is_zero()) continue;
      const CycloNum f = a[i][c] * inv;
      for (std::size_t j = c; j < ncols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= f * a[r][j];
      }
    }
    ++r;
  }
  return r;
}

bool kernel_annihilation(const Matrix& m, const std::vector<CycloNum>& x) {
  for (const auto& row : m) {
    if (row.size() != x.size())
      throw std::invalid_argument("kernel_annihilation: row length " + std::to_string(row.size()) +
                                  " vs vector length " + std::to_string(x.size()));
    if (row.empty()) continue;
    CycloNum acc = CycloNum::zero(x.front().n());
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!row[j].is_zero() && !x[j].is_zero()) acc += row[j] * x[j];
    if (!acc.is_zero()) return false;
  }
  return true;
}

// The augmented echelon carries [vector | identity tag]; with independent
// basis vectors every pivot sits in the vector block, so reducing [v | 0]
// leaves [0 | -coordinates].
CoordinateSolver::CoordinateSolver(int n, std::size_t ncols, const std::vector<SparseRow>& basis)
    : n_(n), ncols_(ncols), dim_(basis.size()), augmented_(n, ncols + basis.size()) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SparseRow row = basis[i];
    row.emplace_back(ncols + i, CycloNum::one(n));
    row = augmented_.remainder(std::move(row));
    if (row.front().first >= ncols)
      throw std::invalid_argument("coordinate solver: basis vectors are dependent");
    augmented_.insert(std::move(row));
  }
}

std::vector<CycloNum> CoordinateSolver::solve(const SparseRow& v) const {
  SparseRow rem = augmented_.remainder(v);
  std::vector<CycloNum> coords(dim_, CycloNum::zero(n_));
  for (const auto& [c, val] : rem) {
    if (c < ncols_) throw std::domain_error("vector is not in the span of the basis");
    coords[c - ncols_] = -val;
  }
  return coords;
}

}  // namespace ncinv
