#include "ncinv/cyclo.hpp"

#include <map>
#include <mutex>

namespace ncinv {

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// Exact quotient of polynomials with a monic divisor; remainder must vanish.
Poly divide_exact(const Poly& num, const Poly& den) {
  Poly rem = num;
  trim(rem);
  const std::size_t dd = den.size() - 1;
  Poly quot(rem.size() >= den.size() ? rem.size() - dd : 1, Rational(0));
  while (rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    Rational c = rem.back() / den.back();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    trim(rem);
  }
  if (!rem.empty()) throw CycloError("cyclotomic construction: inexact division");
  return quot;
}

// Division with remainder in Q[x]; den must be nonzero.
void divmod(const Poly& num, const Poly& den, Poly& quot, Poly& rem) {
  rem = num;
  trim(rem);
  quot.assign(rem.size() >= den.size() ? rem.size() - den.size() + 1 : 0, Rational(0));
  while (!rem.empty() && rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    Rational c = rem.back() / den.back();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    trim(rem);
  }
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  trim(out);
  return out;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

// Reduces p modulo the monic polynomial phi, padding to deg(phi) coefficients.
void reduce_mod(Poly& p, const Poly& phi) {
  const std::size_t deg = phi.size() - 1;
  for (std::size_t top = p.size(); top-- > deg;) {
    if (sgn(p[top]) == 0) continue;
    Rational c = p[top];
    for (std::size_t i = 0; i <= deg; ++i) p[top - deg + i] -= c * phi[i];
  }
  p.resize(deg, Rational(0));
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::size_t pos = 0;
  auto digits = [&](bool allow_sign) {
    const std::size_t start = pos;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
    const std::size_t first = pos;
    while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') ++pos;
    if (pos == first) throw std::invalid_argument("malformed rational '" + text + "'");
    return text.substr(start, pos - start);
  };
  std::string num = digits(true);
  std::string den = "1";
  if (pos < text.size()) {
    if (text[pos] != '/') throw std::invalid_argument("malformed rational '" + text + "'");
    ++pos;
    den = digits(false);
  }
  if (pos != text.size()) throw std::invalid_argument("malformed rational '" + text + "'");
  if (num[0] == '+') num.erase(0, 1);
  mpz_class d(den);
  if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

const std::vector<Rational>& cyclotomic_polynomial(int n) {
  if (n < 1) throw CycloError("cyclotomic polynomial needs n >= 1");
  static std::mutex mu;
  static std::map<int, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // x^n - 1 divided by Phi_d for every proper divisor d.
  Poly p(static_cast<std::size_t>(n) + 1, Rational(0));
  p[0] = -1;
  p[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d == 0) p = divide_exact(p, cyclotomic_polynomial(d));
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

int cyclotomic_degree(int n) { return static_cast<int>(cyclotomic_polynomial(n).size()) - 1; }

CycloNum::CycloNum(int n, const Rational& q) : n_(n) {
  if (n < 1) throw CycloError("CycloNum needs n >= 1");
  coeffs_.assign(static_cast<std::size_t>(cyclotomic_degree(n)), Rational(0));
  coeffs_[0] = q;
  coeffs_[0].canonicalize();
}

CycloNum CycloNum::from_poly(int n, std::span<const Rational> poly) {
  CycloNum out(n);
  Poly p(poly.begin(), poly.end());
  for (auto& c : p) c.canonicalize();  // callers may hand in e.g. mpq_class(2, 4)
  reduce_mod(p, cyclotomic_polynomial(n));
  out.coeffs_ = std::move(p);
  return out;
}

bool CycloNum::is_zero() const {
  for (const auto& c : coeffs_)
    if (sgn(c) != 0) return false;
  return true;
}

bool CycloNum::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (sgn(coeffs_[i]) != 0) return false;
  return true;
}

bool CycloNum::is_one() const { return is_rational() && coeffs_[0] == 1; }

void CycloNum::check_same_n(const CycloNum& o) const {
  if (n_ != o.n_)
    throw CycloError("cyclotomic order mismatch: " + std::to_string(n_) + " vs " +
                     std::to_string(o.n_));
}

CycloNum CycloNum::operator-() const {
  CycloNum out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

CycloNum& CycloNum::operator+=(const CycloNum& o) {
  check_same_n(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNum& CycloNum::operator-=(const CycloNum& o) {
  check_same_n(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNum operator*(const CycloNum& a, const CycloNum& b) {
  a.check_same_n(b);
  const std::size_t deg = a.coeffs_.size();
  if (deg == 1) {
    CycloNum out(a.n_);
    out.coeffs_[0] = a.coeffs_[0] * b.coeffs_[0];
    return out;
  }
  Poly prod(2 * deg - 1, Rational(0));
  for (std::size_t i = 0; i < deg; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  reduce_mod(prod, cyclotomic_polynomial(a.n_));
  CycloNum out;
  out.n_ = a.n_;
  out.coeffs_ = std::move(prod);
  return out;
}

CycloNum& CycloNum::operator*=(const CycloNum& o) { return *this = *this * o; }

CycloNum& CycloNum::operator*=(const Rational& q) {
  Rational f = q;
  f.canonicalize();
  for (auto& c : coeffs_) c *= f;
  return *this;
}

CycloNum CycloNum::inverse() const {
  if (is_zero()) throw CycloError("division by zero in Q(lambda)");
  const Poly& phi = cyclotomic_polynomial(n_);
  // Extended Euclid: track s with s * a == r (mod phi).
  Poly r0 = phi, r1 = coeffs_;
  trim(r1);
  Poly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    Poly q, r;
    divmod(r0, r1, q, r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw CycloError("inverse: element not invertible");
  }
  // r1 is a nonzero constant.
  for (auto& c : s1) c /= r1[0];
  return from_poly(n_, s1);
}

CycloNum& CycloNum::operator/=(const CycloNum& o) {
  check_same_n(o);
  return *this *= o.inverse();
}

bool operator==(const CycloNum& a, const CycloNum& b) {
  a.check_same_n(b);
  return a.coeffs_ == b.coeffs_;
}

std::string CycloNum::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    std::string c = coeffs_[i].get_str();
    if (!out.empty()) out += (c[0] == '-') ? " - " : " + ";
    else if (c[0] == '-') out += "-";
    if (c[0] == '-') c.erase(0, 1);
    if (i == 0) {
      out += c;
    } else {
      if (c != "1") out += c + "*";
      out += "L";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

CycloNum root_power(int n, long long k) {
  if (n < 1) throw CycloError("root_power needs n >= 1");
  long long e = k % n;
  if (e < 0) e += n;
  Poly p(static_cast<std::size_t>(e) + 1, Rational(0));
  p[e] = 1;
  return CycloNum::from_poly(n, p);
}

CycloNum arith(ArithOp op, const CycloNum& a, const CycloNum* b) {
  if (op == ArithOp::neg) return -a;
  if (b == nullptr) throw CycloError("binary operation needs two operands");
  switch (op) {
    case ArithOp::add: return a + *b;
    case ArithOp::sub: return a - *b;
    case ArithOp::mul: return a * *b;
    case ArithOp::div: return a / *b;
    case ArithOp::neg: break;
  }
  return -a;
}

bool as_signed_root(const CycloNum& x, int& exponent, bool& negated) {
  for (int k = 0; k < x.n(); ++k) {
    CycloNum r = root_power(x.n(), k);
    if (r == x) {
      exponent = k;
      negated = false;
      return true;
    }
    if (-r == x) {
      exponent = k;
      negated = true;
      return true;
    }
  }
  return false;
}

}  // namespace ncinv
