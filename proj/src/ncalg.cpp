#include "ncinv/ncalg.hpp"

#include <algorithm>
#include <sstream>

namespace ncinv {

// ---------------------------------------------------------------- spec ----

AlgebraSpec AlgebraSpec::skew(int n) {
  AlgebraSpec s;
  s.kind = AlgebraKind::skew;
  s.n = n;
  s.validate();
  return s;
}

AlgebraSpec AlgebraSpec::downup(const Rational& alpha, const Rational& beta, int n) {
  AlgebraSpec s;
  s.kind = AlgebraKind::downup;
  s.alpha = alpha;
  s.beta = beta;
  s.n = n;
  s.validate();
  return s;
}

void AlgebraSpec::validate() const {
  if (n < 1) throw AlgebraError("n must be a positive integer");
  if (kind == AlgebraKind::downup && sgn(beta) == 0)
    throw AlgebraError("down-up algebra needs beta != 0 (noetherian case only)");
  if (kind == AlgebraKind::skew && (sgn(alpha) != 0 || sgn(beta) != 0))
    throw AlgebraError("skew ring takes no alpha/beta parameters");
}

std::string AlgebraSpec::name() const {
  if (kind == AlgebraKind::skew) return "skew";
  return "A(" + alpha.get_str() + "," + beta.get_str() + ")";
}

// ------------------------------------------------------------ monomials ----

int degree(AlgebraKind kind, const Monomial& m) {
  return kind == AlgebraKind::skew ? m.a + m.b : m.a + 2 * m.b + m.c;
}

Word to_word(AlgebraKind kind, const Monomial& m) {
  Word w;
  w.letters.append(static_cast<std::size_t>(m.a), 'u');
  if (kind == AlgebraKind::skew) {
    w.letters.append(static_cast<std::size_t>(m.b), 'v');
  } else {
    for (int i = 0; i < m.b; ++i) w.letters += "du";
    w.letters.append(static_cast<std::size_t>(m.c), 'd');
  }
  return w;
}

Monomial from_normal_word(AlgebraKind kind, const Word& w) {
  const std::string& s = w.letters;
  std::size_t i = 0;
  Monomial m;
  while (i < s.size() && s[i] == 'u') ++m.a, ++i;
  if (kind == AlgebraKind::skew) {
    while (i < s.size() && s[i] == 'v') ++m.b, ++i;
  } else {
    while (i + 1 < s.size() && s[i] == 'd' && s[i + 1] == 'u') ++m.b, i += 2;
    while (i < s.size() && s[i] == 'd') ++m.c, ++i;
  }
  if (i != s.size()) throw AlgebraError("word '" + s + "' is not in normal form");
  return m;
}

std::size_t monomial_count(AlgebraKind kind, int degree) {
  if (degree < 0) return 0;
  const auto d = static_cast<std::size_t>(degree);
  return kind == AlgebraKind::skew ? d + 1 : (d + 2) * (d + 2) / 4;
}

MonomialIndexer::MonomialIndexer(AlgebraKind kind, int degree)
    : kind_(kind), degree_(degree), size_(monomial_count(kind, degree)) {
  if (kind == AlgebraKind::downup && degree >= 0) {
    offset_.assign(static_cast<std::size_t>(degree) + 1, 0);
    std::size_t acc = 0;
    for (int a = degree; a >= 0; --a) {
      offset_[static_cast<std::size_t>(a)] = acc;
      acc += static_cast<std::size_t>((degree - a) / 2 + 1);
    }
  }
}

std::size_t MonomialIndexer::index(const Monomial& m) const {
  if (ncinv::degree(kind_, m) != degree_ || m.a < 0 || m.b < 0 || m.c < 0)
    throw AlgebraError("monomial of degree " + std::to_string(ncinv::degree(kind_, m)) +
                       " indexed in degree " + std::to_string(degree_));
  if (kind_ == AlgebraKind::skew) return static_cast<std::size_t>(degree_ - m.a);
  return offset_[static_cast<std::size_t>(m.a)] +
         static_cast<std::size_t>((degree_ - m.a) / 2 - m.b);
}

// ----------------------------------------------------------- polynomial ----

NcPolynomial::NcPolynomial(std::shared_ptr<const AlgebraSpec> spec) : spec_(std::move(spec)) {}

NcPolynomial::NcPolynomial(std::shared_ptr<const AlgebraSpec> spec, const Monomial& m,
                           CycloNum coeff)
    : spec_(std::move(spec)) {
  add_term(m, coeff);
}

CycloNum NcPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? CycloNum::zero(spec_->n) : it->second;
}

void NcPolynomial::add_term(const Monomial& m, const CycloNum& coeff) {
  if (coeff.n() != spec_->n) throw AlgebraError("coefficient field does not match the algebra");
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool NcPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree(spec_->kind, terms_.begin()->first);
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const auto& t) { return degree(spec_->kind, t.first) == d; });
}

int NcPolynomial::homogeneous_degree() const {
  if (terms_.empty()) throw AlgebraError("zero polynomial has no degree");
  if (!is_homogeneous()) throw AlgebraError("polynomial is not homogeneous");
  return degree(spec_->kind, terms_.begin()->first);
}

void NcPolynomial::check_compatible(const NcPolynomial& o) const {
  if (spec_ != o.spec_ && !(*spec_ == *o.spec_))
    throw AlgebraError("polynomials belong to different algebras");
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

NcPolynomial& NcPolynomial::operator*=(const CycloNum& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

NcPolynomial NcPolynomial::operator-() const {
  NcPolynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

bool operator==(const NcPolynomial& a, const NcPolynomial& b) {
  if (!(*a.spec_ == *b.spec_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [m, c] : a.terms_) {
    if (!(m == it->first) || !(c == it->second)) return false;
    ++it;
  }
  return true;
}

std::string NcPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << "(" << c.to_string() << ")";
    if (spec_->kind == AlgebraKind::skew) {
      out << "*u^" << m.a << "v^" << m.b;
    } else {
      out << "*u^" << m.a << "(du)^" << m.b << "d^" << m.c;
    }
  }
  return out.str();
}

// -------------------------------------------------------------- algebra ----

namespace {

struct Rule {
  std::string lhs;
  std::vector<std::pair<std::string, Rational>> rhs;
};

std::vector<Rule> rules_for(const AlgebraSpec& spec) {
  if (spec.kind == AlgebraKind::skew) return {{"vu", {{"uv", Rational(-1)}}}};
  std::vector<Rule> rules = {{"ddu", {}}, {"duu", {}}};
  if (sgn(spec.alpha) != 0) {
    rules[0].rhs.emplace_back("dud", spec.alpha);
    rules[1].rhs.emplace_back("udu", spec.alpha);
  }
  rules[0].rhs.emplace_back("udd", spec.beta);
  rules[1].rhs.emplace_back("uud", spec.beta);
  return rules;
}

std::uint64_t memo_key(const Monomial& m, char letter) {
  return (static_cast<std::uint64_t>(m.a) << 43) | (static_cast<std::uint64_t>(m.b) << 22) |
         (static_cast<std::uint64_t>(m.c) << 1) | (letter == 'u' ? 1u : 0u);
}

using RatMap = std::map<Monomial, Rational, MonomialOrder>;

void accumulate(RatMap& acc, const Monomial& m, const Rational& r) {
  if (sgn(r) == 0) return;
  auto [it, inserted] = acc.try_emplace(m, r);
  if (!inserted) {
    it->second += r;
    if (sgn(it->second) == 0) acc.erase(it);
  }
}

}  // namespace

Algebra::Algebra(AlgebraSpec spec) {
  spec.validate();
  spec_ = std::make_shared<const AlgebraSpec>(std::move(spec));
}

NcPolynomial Algebra::one() const { return monomial(Monomial{}); }

NcPolynomial Algebra::monomial(const Monomial& m, const CycloNum& coeff) const {
  return NcPolynomial(spec_, m, coeff);
}

NcPolynomial Algebra::monomial(const Monomial& m) const {
  return NcPolynomial(spec_, m, CycloNum::one(spec_->n));
}

NcPolynomial Algebra::generator(char letter) const {
  check_word(Word{std::string(1, letter)});
  return reduce(Word{std::string(1, letter)});
}

void Algebra::check_word(const Word& w) const {
  const std::string alpha = spec_->alphabet();
  for (char ch : w.letters) {
    if (alpha.find(ch) == std::string::npos)
      throw AlgebraError(std::string("letter '") + ch + "' is not in the alphabet {" + alpha[0] +
                         "," + alpha[1] + "}");
  }
}

void Algebra::check_spec(const NcPolynomial& p) const {
  if (p.spec_ptr() != spec_ && !(p.spec() == *spec_))
    throw AlgebraError("polynomial belongs to a different algebra");
}

bool Algebra::is_normal_word(const Word& w) const {
  for (const auto& rule : rules_for(*spec_))
    if (w.letters.find(rule.lhs) != std::string::npos) return false;
  return true;
}

NcPolynomial Algebra::reduce(const Word& w, RewriteStrategy strategy) const {
  check_word(w);
  const auto rules = rules_for(*spec_);
  std::map<std::string, Rational> pending{{w.letters, Rational(1)}};
  std::map<std::string, Rational> normal;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const std::string& word = node.key();
    const Rational& coef = node.mapped();
    // Locate the redex selected by the strategy.
    std::size_t best = std::string::npos;
    const Rule* rule = nullptr;
    for (const auto& r : rules) {
      const std::size_t pos = strategy == RewriteStrategy::leftmost ? word.find(r.lhs)
                                                                     : word.rfind(r.lhs);
      if (pos == std::string::npos) continue;
      const bool better = best == std::string::npos ||
                          (strategy == RewriteStrategy::leftmost ? pos < best : pos > best);
      if (better) {
        best = pos;
        rule = &r;
      }
    }
    if (rule == nullptr) {
      auto [it, inserted] = normal.try_emplace(word, coef);
      if (!inserted) it->second += coef;
      continue;
    }
    for (const auto& [rhs, c] : rule->rhs) {
      std::string next = word.substr(0, best) + rhs + word.substr(best + rule->lhs.size());
      Rational add = coef * c;
      auto [it, inserted] = pending.try_emplace(std::move(next), add);
      if (!inserted) {
        it->second += add;
        if (sgn(it->second) == 0) pending.erase(it);
      }
    }
  }
  NcPolynomial out(spec_);
  for (const auto& [word, coef] : normal) {
    if (sgn(coef) == 0) continue;
    out.add_term(from_normal_word(spec_->kind, Word{word}), CycloNum(spec_->n, coef));
  }
  return out;
}

Algebra::RatTerms Algebra::right_multiply(const Monomial& m, char letter) const {
  if (spec_->kind == AlgebraKind::skew) {
    if (letter == 'v') return {{Monomial{m.a, m.b + 1, 0}, Rational(1)}};
    return {{Monomial{m.a + 1, m.b, 0}, Rational(m.b % 2 == 0 ? 1 : -1)}};
  }
  if (letter == 'd') return {{Monomial{m.a, m.b, m.c + 1}, Rational(1)}};
  if (m.c == 1) return {{Monomial{m.a, m.b + 1, 0}, Rational(1)}};
  if (m.b == 0 && m.c == 0) return {{Monomial{m.a + 1, 0, 0}, Rational(1)}};

  const std::uint64_t key = memo_key(m, letter);
  {
    std::lock_guard lock(memo_mu_);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  }
  RatTerms result = downup_times_u(m);
  std::lock_guard lock(memo_mu_);
  memo_.try_emplace(key, result);
  return result;
}

// u^a (du)^b d^c * u for the cases that need a rewrite (c >= 2, or c = 0 < b).
// Each recursive call multiplies a word with strictly fewer d-before-u
// inversions, so the recursion terminates.
Algebra::RatTerms Algebra::downup_times_u(const Monomial& m) const {
  const Rational& alpha = spec_->alpha;
  const Rational& beta = spec_->beta;
  RatMap acc;
  if (m.c >= 2) {
    // m = m'' d d, and ddu -> alpha dud + beta udd.
    if (sgn(alpha) != 0) {
      for (const auto& [x, r] : right_multiply(Monomial{m.a, m.b, m.c - 1}, 'u'))
        accumulate(acc, Monomial{x.a, x.b, x.c + 1}, alpha * r);
    }
    for (const auto& [x, r] : right_multiply(Monomial{m.a, m.b, m.c - 2}, 'u'))
      accumulate(acc, Monomial{x.a, x.b, x.c + 2}, beta * r);
  } else {
    // c == 0, b >= 1: m = m' d u, and duu -> alpha udu + beta uud.
    const RatTerms first = right_multiply(Monomial{m.a, m.b - 1, 0}, 'u');
    for (const auto& [x, r] : first) {
      if (sgn(alpha) != 0) {
        for (const auto& [y, s] : right_multiply(Monomial{x.a, x.b, x.c + 1}, 'u'))
          accumulate(acc, y, alpha * r * s);
      }
      for (const auto& [y, s] : right_multiply(x, 'u'))
        accumulate(acc, Monomial{y.a, y.b, y.c + 1}, beta * r * s);
    }
  }
  return RatTerms(acc.begin(), acc.end());
}

std::vector<std::pair<Monomial, Rational>> Algebra::monomial_product(const Monomial& m1,
                                                                     const Monomial& m2) const {
  if (spec_->kind == AlgebraKind::skew) {
    const bool neg = (static_cast<long long>(m1.b) * m2.a) % 2 != 0;
    return {{Monomial{m1.a + m2.a, m1.b + m2.b, 0}, Rational(neg ? -1 : 1)}};
  }
  RatMap current{{m1, Rational(1)}};
  auto step = [&](char letter) {
    RatMap next;
    for (const auto& [x, r] : current)
      for (const auto& [y, s] : right_multiply(x, letter)) accumulate(next, y, r * s);
    current = std::move(next);
  };
  for (int i = 0; i < m2.a; ++i) step('u');
  for (int i = 0; i < m2.b; ++i) {
    step('d');
    step('u');
  }
  RatTerms out;
  out.reserve(current.size());
  for (const auto& [x, r] : current) out.emplace_back(Monomial{x.a, x.b, x.c + m2.c}, r);
  return out;
}

NcPolynomial Algebra::normal_form(const Word& w) const {
  check_word(w);
  RatMap current{{Monomial{}, Rational(1)}};
  for (char letter : w.letters) {
    RatMap next;
    for (const auto& [x, r] : current)
      for (const auto& [y, s] : right_multiply(x, letter)) accumulate(next, y, r * s);
    current = std::move(next);
  }
  NcPolynomial out(spec_);
  for (const auto& [x, r] : current) out.add_term(x, CycloNum(spec_->n, r));
  return out;
}

NcPolynomial Algebra::multiply(const NcPolynomial& p, const NcPolynomial& q) const {
  check_spec(p);
  check_spec(q);
  NcPolynomial out(spec_);
  for (const auto& [m1, c1] : p.terms()) {
    for (const auto& [m2, c2] : q.terms()) {
      const CycloNum c = c1 * c2;
      for (const auto& [m, r] : monomial_product(m1, m2)) {
        out.add_term(m, r == 1 ? c : c * r);
      }
    }
  }
  return out;
}

std::vector<Monomial> Algebra::monomial_basis(int degree) const {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  out.reserve(monomial_count(spec_->kind, degree));
  if (spec_->kind == AlgebraKind::skew) {
    for (int a = degree; a >= 0; --a) out.push_back(Monomial{a, degree - a, 0});
    return out;
  }
  for (int a = degree; a >= 0; --a)
    for (int b = (degree - a) / 2; b >= 0; --b) out.push_back(Monomial{a, b, degree - a - 2 * b});
  return out;
}

NcPolynomial reduce(const AlgebraSpec& spec, const Word& w) { return Algebra(spec).reduce(w); }

NcPolynomial multiply(const AlgebraSpec& spec, const NcPolynomial& p, const NcPolynomial& q) {
  return Algebra(spec).multiply(p, q);
}

std::vector<Monomial> monomial_basis(const AlgebraSpec& spec, int degree) {
  return Algebra(spec).monomial_basis(degree);
}

}  // namespace ncinv
