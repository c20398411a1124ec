#pragma once

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ncinv {

using Rational = mpq_class;

/// Parses "p/q" or "p" into a canonical rational. Throws std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Lowest-terms string form ("3", "-1/2").
std::string to_string(const Rational& q);

class CycloError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Computed once per n and cached.
const std::vector<Rational>& cyclotomic_polynomial(int n);

/// Euler phi, i.e. the degree of the n-th cyclotomic polynomial.
int cyclotomic_degree(int n);

/// Element of Q(lambda), lambda = exp(2 pi i / n), stored as a polynomial in
/// lambda reduced modulo the n-th cyclotomic polynomial.
class CycloNum {
 public:
  CycloNum() = default;  // n = 1, value 0

  /// The rational `q` embedded in Q(lambda_n).
  explicit CycloNum(int n, const Rational& q = 0);

  /// From coefficients of a polynomial in lambda of any length; reduces.
  static CycloNum from_poly(int n, std::span<const Rational> poly);

  static CycloNum zero(int n) { return CycloNum(n); }
  static CycloNum one(int n) { return CycloNum(n, 1); }

  int n() const { return n_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q (all higher coefficients vanish).
  bool is_rational() const;
  /// Constant coefficient; meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_[0]; }

  CycloNum operator-() const;
  CycloNum& operator+=(const CycloNum& o);
  CycloNum& operator-=(const CycloNum& o);
  CycloNum& operator*=(const CycloNum& o);
  CycloNum& operator/=(const CycloNum& o);
  CycloNum& operator*=(const Rational& q);

  /// Multiplicative inverse via extended Euclid in Q[x] modulo Phi_n.
  CycloNum inverse() const;

  friend CycloNum operator+(CycloNum a, const CycloNum& b) { return a += b; }
  friend CycloNum operator-(CycloNum a, const CycloNum& b) { return a -= b; }
  friend CycloNum operator*(const CycloNum& a, const CycloNum& b);
  friend CycloNum operator/(CycloNum a, const CycloNum& b) { return a /= b; }
  friend CycloNum operator*(CycloNum a, const Rational& q) { return a *= q; }
  friend CycloNum operator*(const Rational& q, CycloNum a) { return a *= q; }

  /// Exact equality. Comparing values of different n throws CycloError.
  friend bool operator==(const CycloNum& a, const CycloNum& b);

  std::string to_string() const;

 private:
  void check_same_n(const CycloNum& o) const;

  int n_ = 1;
  std::vector<Rational> coeffs_{Rational(0)};
};

/// lambda^k in Q(lambda_n); k is reduced mod n first.
CycloNum root_power(int n, long long k);

enum class ArithOp { add, sub, mul, div, neg };

/// Field operation dispatch. `b` is ignored for neg and required otherwise.
CycloNum arith(ArithOp op, const CycloNum& a, const CycloNum* b = nullptr);

/// If `x` equals +-lambda^k for some k, returns the smallest such exponent
/// with a sign flag; otherwise returns false.
bool as_signed_root(const CycloNum& x, int& exponent, bool& negated);

}  // namespace ncinv
