#include "ncinv/action.hpp"

#include <algorithm>
#include <string>

namespace ncinv {

namespace {

using Mat2 = GroupAction::Mat2;

Mat2 identity(int n) {
  return {{{CycloNum::one(n), CycloNum::zero(n)}, {CycloNum::zero(n), CycloNum::one(n)}}};
}

Mat2 mat_mul(const Mat2& x, const Mat2& y) {
  const int n = x[0][0].n();
  Mat2 out = {{{CycloNum::zero(n), CycloNum::zero(n)}, {CycloNum::zero(n), CycloNum::zero(n)}}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k) out[i][j] += x[i][k] * y[k][j];
  return out;
}

bool mat_eq(const Mat2& x, const Mat2& y) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!(x[i][j] == y[i][j])) return false;
  return true;
}

}  // namespace

SparseRow coordinates(const NcPolynomial& p, const MonomialIndexer& indexer) {
  SparseRow row;
  row.reserve(p.size());
  for (const auto& [m, c] : p.terms()) row.emplace_back(indexer.index(m), c);
  std::sort(row.begin(), row.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return row;
}

NcPolynomial from_coordinates(const Algebra& alg, int degree, const SparseRow& row) {
  const auto basis = alg.monomial_basis(degree);
  NcPolynomial out = alg.zero();
  for (const auto& [col, c] : row) out.add_term(basis.at(col), c);
  return out;
}

GroupAction GroupAction::standard(std::shared_ptr<const Algebra> alg) {
  const int n = alg->spec().n;
  Mat2 m = {{{CycloNum::zero(n), root_power(n, 1)}, {CycloNum::one(n), CycloNum::zero(n)}}};
  return GroupAction(std::move(alg), m, 2 * n);
}

GroupAction GroupAction::standard(const AlgebraSpec& spec) {
  return standard(std::make_shared<const Algebra>(spec));
}

GroupAction::GroupAction(std::shared_ptr<const Algebra> alg, const Mat2& matrix, int order)
    : alg_(std::move(alg)), matrix_(matrix), order_(order) {
  if (!alg_) throw ActionError("action needs an algebra");
  const int n = alg_->spec().n;
  for (const auto& row : matrix_)
    for (const auto& x : row)
      if (x.n() != n) throw ActionError("action matrix entries must lie in Q(lambda_n)");
  if (order_ < 1) throw ActionError("action order must be positive");
  Mat2 p = identity(n);
  for (int i = 0; i < order_; ++i) p = mat_mul(p, matrix_);
  if (!mat_eq(p, identity(n)))
    throw ActionError("g^" + std::to_string(order_) + " is not the identity on generators");
  automorphism_ = compute_automorphism();
}

NcPolynomial GroupAction::image(char letter) const {
  const std::string alpha = spec().alphabet();
  const auto j = alpha.find(letter);
  if (j == std::string::npos) throw AlgebraError(std::string("unknown generator '") + letter + "'");
  NcPolynomial out = alg_->zero();
  out += matrix_[0][j] * alg_->generator(alpha[0]);
  out += matrix_[1][j] * alg_->generator(alpha[1]);
  return out;
}

bool GroupAction::compute_automorphism() const {
  const AlgebraSpec& s = spec();
  const NcPolynomial x0 = image(s.alphabet()[0]);
  const NcPolynomial x1 = image(s.alphabet()[1]);
  auto mul = [&](std::initializer_list<const NcPolynomial*> fs) {
    NcPolynomial out = alg_->one();
    for (const auto* f : fs) out = alg_->multiply(out, *f);
    return out;
  };
  const CycloNum a(s.n, s.alpha), b(s.n, s.beta);
  if (s.kind == AlgebraKind::skew) {
    // vu + uv
    return (mul({&x1, &x0}) + mul({&x0, &x1})).is_zero();
  }
  // ddu - a dud - b udd and duu - a udu - b uud, with u -> x0, d -> x1
  const NcPolynomial r1 = mul({&x1, &x1, &x0}) - a * mul({&x1, &x0, &x1}) - b * mul({&x0, &x1, &x1});
  const NcPolynomial r2 = mul({&x1, &x0, &x0}) - a * mul({&x0, &x1, &x0}) - b * mul({&x0, &x0, &x1});
  return r1.is_zero() && r2.is_zero();
}

void GroupAction::require_automorphism() const {
  if (!automorphism_)
    throw ActionError("the substitution does not preserve the relations of " + spec().name());
}

GroupAction::Mat2 GroupAction::matrix_power(long long k) const {
  k %= order_;
  if (k < 0) k += order_;
  Mat2 p = identity(n());
  for (long long i = 0; i < k; ++i) p = mat_mul(p, matrix_);
  return p;
}

// True when each column has a single nonzero entry, so every word maps to a
// scalar multiple of one word.
bool GroupAction::single_term_matrix(const Mat2& m) const {
  for (int j = 0; j < 2; ++j)
    if (m[0][j].is_zero() == m[1][j].is_zero()) return false;
  return true;
}

NcPolynomial GroupAction::apply_matrix(const Mat2& m, const NcPolynomial& p) const {
  if (p.spec_ptr() != alg_->spec_ptr() && !(p.spec() == spec()))
    throw AlgebraError("polynomial belongs to a different algebra than the action");
  const AlgebraSpec& s = spec();
  const std::string alpha = s.alphabet();
  NcPolynomial out = alg_->zero();
  if (single_term_matrix(m)) {
    const int t0 = m[0][0].is_zero() ? 1 : 0;  // row of the image of x0
    const int t1 = m[0][1].is_zero() ? 1 : 0;
    for (const auto& [mono, c] : p.terms()) {
      std::string letters;
      CycloNum scale = c;
      for (char ch : to_word(s.kind, mono).letters) {
        const int j = ch == alpha[0] ? 0 : 1;
        const int i = j == 0 ? t0 : t1;
        letters += alpha[static_cast<std::size_t>(i)];
        if (!m[i][j].is_one()) scale *= m[i][j];
      }
      out += scale * alg_->normal_form(Word{letters});
    }
    return out;
  }
  NcPolynomial img[2] = {alg_->zero(), alg_->zero()};
  for (int j = 0; j < 2; ++j) {
    img[j] += m[0][j] * alg_->generator(alpha[0]);
    img[j] += m[1][j] * alg_->generator(alpha[1]);
  }
  for (const auto& [mono, c] : p.terms()) {
    NcPolynomial term = alg_->one();
    for (char ch : to_word(s.kind, mono).letters) term = alg_->multiply(term, img[ch == alpha[0] ? 0 : 1]);
    out += c * term;
  }
  return out;
}

NcPolynomial GroupAction::apply_power(long long k, const NcPolynomial& p) const {
  return apply_matrix(matrix_power(k), p);
}

NcPolynomial GroupAction::reynolds(const NcPolynomial& p) const {
  require_automorphism();
  NcPolynomial sum = alg_->zero();
  Mat2 m = identity(n());
  for (int k = 0; k < order_; ++k) {
    sum += apply_matrix(m, p);
    m = mat_mul(m, matrix_);
  }
  return sum * CycloNum(n(), Rational(1, order_));
}

NcPolynomial GroupAction::orbit_sum(const Monomial& m) const {
  const int d = degree(spec().kind, m);
  if (d % n() != 0)
    throw ActionError("orbit sum of a degree-" + std::to_string(d) + " monomial: invariants only occur in degrees divisible by n = " +
                      std::to_string(n()));
  const NcPolynomial p = alg_->monomial(m);
  return p + apply_matrix(matrix_, p);
}

namespace {

std::vector<NcPolynomial> echelon_polys(const Algebra& alg, int degree,
                                        const std::vector<NcPolynomial>& gens) {
  const MonomialIndexer idx(alg.spec().kind, degree);
  Echelon ech(alg.spec().n, idx.size());
  for (const auto& p : gens) ech.insert(coordinates(p, idx));
  std::vector<NcPolynomial> out;
  for (const auto& row : ech.reduced_rows()) out.push_back(from_coordinates(alg, degree, row));
  return out;
}

}  // namespace

std::vector<NcPolynomial> GroupAction::invariant_basis(int degree) const {
  require_automorphism();
  if (degree < 0 || degree % n() != 0) return {};
  std::vector<NcPolynomial> sums;
  for (const auto& m : alg_->monomial_basis(degree)) {
    NcPolynomial s = orbit_sum(m);
    if (!s.is_zero()) sums.push_back(std::move(s));
  }
  return echelon_polys(*alg_, degree, sums);
}

std::vector<NcPolynomial> GroupAction::reynolds_basis(int degree) const {
  require_automorphism();
  std::vector<NcPolynomial> images;
  for (const auto& m : alg_->monomial_basis(degree)) images.push_back(reynolds(alg_->monomial(m)));
  return echelon_polys(*alg_, degree, images);
}

std::size_t GroupAction::invariant_dimension_trace(int degree) const {
  require_automorphism();
  if (degree < 0) return 0;
  const auto basis = alg_->monomial_basis(degree);
  CycloNum total = CycloNum::zero(n());
  Mat2 g = identity(n());
  for (int k = 0; k < order_; ++k) {
    for (const auto& m : basis) total += apply_matrix(g, alg_->monomial(m)).coefficient(m);
    g = mat_mul(g, matrix_);
  }
  total *= Rational(1, order_);
  if (!total.is_rational())
    throw ActionError("trace average is not rational: " + total.to_string());
  const Rational q = total.rational_part();
  if (q.get_den() != 1 || sgn(q) < 0)
    throw ActionError("trace average is not a nonnegative integer: " + q.get_str());
  return q.get_num().get_ui();
}

std::vector<std::pair<Monomial, NcPolynomial>> GroupAction::orbit_sum_basis(int degree) const {
  require_automorphism();
  std::vector<std::pair<Monomial, NcPolynomial>> out;
  if (degree < 0 || degree % n() != 0) return out;
  std::vector<Monomial> order;
  if (spec().kind == AlgebraKind::skew) {
    for (int i = 0; i <= degree; ++i) order.push_back(Monomial{degree - i, i, 0});
  } else {
    for (int b = 0; 2 * b <= degree; ++b)
      for (int c = 0; 2 * b + c <= degree; ++c) order.push_back(Monomial{degree - 2 * b - c, b, c});
  }
  const MonomialIndexer idx(spec().kind, degree);
  Echelon ech(n(), idx.size());
  for (const auto& m : order) {
    NcPolynomial s = orbit_sum(m);
    if (s.is_zero()) continue;
    if (ech.insert(coordinates(s, idx))) out.emplace_back(m, std::move(s));
  }
  return out;
}

}  // namespace ncinv
