#pragma once

#include <array>
#include <memory>
#include <stdexcept>
#include <vector>

#include "ncinv/cyclo.hpp"
#include "ncinv/linalg.hpp"
#include "ncinv/ncalg.hpp"

namespace ncinv {

class ActionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coordinates of the degree-`indexer.degree()` part of p in monomial_basis order.
/// Throws AlgebraError if p has terms of another degree.
SparseRow coordinates(const NcPolynomial& p, const MonomialIndexer& indexer);

/// Inverse of coordinates().
NcPolynomial from_coordinates(const Algebra& alg, int degree, const SparseRow& row);

/// A linear graded automorphism of finite order on one of the two algebras.
///
/// The action is stored as the 2x2 matrix M on the generators (x0, x1) =
/// (u, v) or (u, d): g.x_j = sum_i M[i][j] x_i. The standard action has
/// M = [[0, lambda], [1, 0]], so g.u = x1 and g.x1 = lambda u.
class GroupAction {
 public:
  using Mat2 = std::array<std::array<CycloNum, 2>, 2>;

  /// The action g.u = v, g.v = lambda u (resp. g.u = d, g.d = lambda u).
  static GroupAction standard(std::shared_ptr<const Algebra> alg);
  static GroupAction standard(const AlgebraSpec& spec);

  /// Throws ActionError unless M^order == I. Whether the substitution is
  /// an automorphism is computed here and reported by verify_automorphism().
  GroupAction(std::shared_ptr<const Algebra> alg, const Mat2& matrix, int order);

  const Algebra& algebra() const { return *alg_; }
  const std::shared_ptr<const Algebra>& algebra_ptr() const { return alg_; }
  const AlgebraSpec& spec() const { return alg_->spec(); }
  int n() const { return alg_->spec().n; }
  int order() const { return order_; }
  const Mat2& matrix() const { return matrix_; }

  /// Image of a generator letter under g (degree 1).
  NcPolynomial image(char letter) const;

  /// g^k.p; k may be negative.
  NcPolynomial apply_power(long long k, const NcPolynomial& p) const;

  /// True iff the images of the defining relations reduce to zero.
  bool verify_automorphism() const { return automorphism_; }
  /// Throws ActionError when verify_automorphism() is false.
  void require_automorphism() const;

  /// (1/|G|) sum_k g^k.p
  NcPolynomial reynolds(const NcPolynomial& p) const;

  /// m + g.m. Throws ActionError when deg m is not a multiple of n.
  NcPolynomial orbit_sum(const Monomial& m) const;

  /// Basis of the invariants of the given degree in reduced echelon form
  /// (monomial order), built from orbit sums. Empty unless n | degree.
  std::vector<NcPolynomial> invariant_basis(int degree) const;

  /// Same subspace computed from Reynolds images of every monomial, in
  /// every degree. Independent route used as an oracle.
  std::vector<NcPolynomial> reynolds_basis(int degree) const;

  /// (1/|G|) sum_k trace(g^k) on the degree-d monomial space.
  std::size_t invariant_dimension_trace(int degree) const;

  /// Orbit sums kept in index order (skew: v-exponent ascending; down-up:
  /// (b, c) ascending) whenever nonzero and independent of those kept
  /// before. Pairs each kept sum with its defining monomial.
  std::vector<std::pair<Monomial, NcPolynomial>> orbit_sum_basis(int degree) const;

 private:
  bool single_term_matrix(const Mat2& m) const;
  Mat2 matrix_power(long long k) const;
  NcPolynomial apply_matrix(const Mat2& m, const NcPolynomial& p) const;
  bool compute_automorphism() const;

  std::shared_ptr<const Algebra> alg_;
  Mat2 matrix_;
  int order_;
  bool automorphism_ = false;
};

}  // namespace ncinv
