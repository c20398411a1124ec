#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ncinv/cyclo.hpp"

namespace ncinv {

class AlgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class AlgebraKind { skew, downup };

/// Which algebra and which cyclotomic field its scalars live in.
/// skew: k_{-1}[u,v] with vu = -uv.
/// downup: A(alpha, beta) on u, d with d^2u = alpha dud + beta ud^2 and
/// du^2 = alpha udu + beta u^2d.
struct AlgebraSpec {
  AlgebraKind kind = AlgebraKind::skew;
  Rational alpha = 0;
  Rational beta = 0;
  int n = 1;

  static AlgebraSpec skew(int n);
  static AlgebraSpec downup(const Rational& alpha, const Rational& beta, int n);

  /// Throws AlgebraError for n < 1 or a down-up spec with beta = 0.
  void validate() const;

  /// "skew" or "A(alpha,beta)".
  std::string name() const;

  /// Generator alphabet: "uv" for skew, "ud" for down-up.
  const char* alphabet() const { return kind == AlgebraKind::skew ? "uv" : "ud"; }

  friend bool operator==(const AlgebraSpec& a, const AlgebraSpec& b) {
    return a.kind == b.kind && a.n == b.n && a.alpha == b.alpha && a.beta == b.beta;
  }
};

/// A word in the free algebra on the generators. The empty word is 1.
struct Word {
  std::string letters;

  std::size_t degree() const { return letters.size(); }
  friend bool operator==(const Word&, const Word&) = default;
};

/// PBW basis monomial. skew: u^a v^b (c unused, always 0).
/// downup: u^a (du)^b d^c.
struct Monomial {
  int a = 0;
  int b = 0;
  int c = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

int degree(AlgebraKind kind, const Monomial& m);
Word to_word(AlgebraKind kind, const Monomial& m);

/// Parses a normal word (skew: u^a v^b; downup: u^a (du)^b d^c).
/// Throws AlgebraError if the word is not normal.
Monomial from_normal_word(AlgebraKind kind, const Word& w);

/// Deterministic term order: lexicographic on (a, b, c), larger first.
struct MonomialOrder {
  bool operator()(const Monomial& x, const Monomial& y) const { return y < x; }
};

/// Finite linear combination of normal monomials with nonzero coefficients
/// in Q(lambda_n), n taken from the algebra spec.
class NcPolynomial {
 public:
  using Terms = std::map<Monomial, CycloNum, MonomialOrder>;

  explicit NcPolynomial(std::shared_ptr<const AlgebraSpec> spec);
  NcPolynomial(std::shared_ptr<const AlgebraSpec> spec, const Monomial& m, CycloNum coeff);

  const AlgebraSpec& spec() const { return *spec_; }
  const std::shared_ptr<const AlgebraSpec>& spec_ptr() const { return spec_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of `m` (zero when absent).
  CycloNum coefficient(const Monomial& m) const;

  /// Adds `coeff * m`, dropping the term if it cancels.
  void add_term(const Monomial& m, const CycloNum& coeff);

  /// Degree of the single homogeneous component; throws when empty or mixed.
  int homogeneous_degree() const;
  bool is_homogeneous() const;

  NcPolynomial& operator+=(const NcPolynomial& o);
  NcPolynomial& operator-=(const NcPolynomial& o);
  NcPolynomial& operator*=(const CycloNum& s);
  NcPolynomial operator-() const;

  friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
  friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
  friend NcPolynomial operator*(const CycloNum& s, NcPolynomial p) { return p *= s; }
  friend NcPolynomial operator*(NcPolynomial p, const CycloNum& s) { return p *= s; }

  /// Exact equality of spec and terms.
  friend bool operator==(const NcPolynomial& a, const NcPolynomial& b);

  std::string to_string() const;

 private:
  void check_compatible(const NcPolynomial& o) const;

  std::shared_ptr<const AlgebraSpec> spec_;
  Terms terms_;
};

enum class RewriteStrategy { leftmost, rightmost };

/// One of the two algebra families with its normal-form machinery.
///
/// `reduce` is a literal string-rewriting engine (rules oriented left to
/// right, redex chosen by strategy). `multiply` and `normal_form` use a
/// memoized right-multiplication table `m * letter` built from the same
/// rules; property tests check the two agree.
///
/// Thread-safe: the memo table is guarded internally.
class Algebra {
 public:
  explicit Algebra(AlgebraSpec spec);

  const AlgebraSpec& spec() const { return *spec_; }
  const std::shared_ptr<const AlgebraSpec>& spec_ptr() const { return spec_; }

  NcPolynomial zero() const { return NcPolynomial(spec_); }
  NcPolynomial one() const;
  NcPolynomial monomial(const Monomial& m, const CycloNum& coeff) const;
  NcPolynomial monomial(const Monomial& m) const;
  /// The generator `letter` as a polynomial.
  NcPolynomial generator(char letter) const;

  /// Normal form by explicit rewriting. Throws on letters outside the alphabet.
  NcPolynomial reduce(const Word& w, RewriteStrategy strategy = RewriteStrategy::leftmost) const;

  /// Normal form through the memoized multiplication table.
  NcPolynomial normal_form(const Word& w) const;

  /// Product in the algebra. Throws AlgebraError on spec mismatch.
  NcPolynomial multiply(const NcPolynomial& p, const NcPolynomial& q) const;

  /// Normal form of m1 * m2 with rational coefficients (independent of n).
  std::vector<std::pair<Monomial, Rational>> monomial_product(const Monomial& m1,
                                                              const Monomial& m2) const;

  /// Normal monomials of the given degree, ordered by u-exponent descending
  /// then du-exponent (skew: v-exponent ascending).
  std::vector<Monomial> monomial_basis(int degree) const;

  /// True iff the word contains no left-hand side of a rule.
  bool is_normal_word(const Word& w) const;

 private:
  using RatTerms = std::vector<std::pair<Monomial, Rational>>;

  void check_word(const Word& w) const;
  void check_spec(const NcPolynomial& p) const;
  RatTerms right_multiply(const Monomial& m, char letter) const;
  RatTerms downup_times_u(const Monomial& m) const;

  std::shared_ptr<const AlgebraSpec> spec_;
  mutable std::mutex memo_mu_;
  mutable std::unordered_map<std::uint64_t, RatTerms> memo_;
};

// Free-function forms of the module operations.
NcPolynomial reduce(const AlgebraSpec& spec, const Word& w);
NcPolynomial multiply(const AlgebraSpec& spec, const NcPolynomial& p, const NcPolynomial& q);
std::vector<Monomial> monomial_basis(const AlgebraSpec& spec, int degree);

/// floor((degree + 2)^2 / 4) for down-up, degree + 1 for skew.
std::size_t monomial_count(AlgebraKind kind, int degree);

/// Position of each degree-d monomial within monomial_basis(d).
class MonomialIndexer {
 public:
  MonomialIndexer(AlgebraKind kind, int degree);

  int degree() const { return degree_; }
  std::size_t size() const { return size_; }
  /// Throws AlgebraError when `m` has a different degree.
  std::size_t index(const Monomial& m) const;

 private:
  AlgebraKind kind_;
  int degree_;
  std::size_t size_;
  std::vector<std::size_t> offset_;  // down-up: first column with u-exponent a
};

}  // namespace ncinv
