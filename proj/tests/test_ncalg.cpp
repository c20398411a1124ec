#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncinv/ncalg.hpp"

using namespace ncinv;

namespace {

std::string random_word(std::mt19937& rng, const char* alphabet, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len), letter(0, 1);
  std::string w;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) w += alphabet[letter(rng)];
  return w;
}

std::vector<AlgebraSpec> property_specs() {
  std::vector<AlgebraSpec> specs = {AlgebraSpec::skew(3), AlgebraSpec::downup(0, 1, 1),
                                    AlgebraSpec::downup(0, -1, 1), AlgebraSpec::downup(2, -1, 1)};
  // arbitrary rational parameters are supported by the rewriting system
  specs.push_back(AlgebraSpec::downup(Rational(3, 2), Rational(-2, 7), 1));
  specs.push_back(AlgebraSpec::downup(-1, 5, 1));
  return specs;
}

}  // namespace

TEST_CASE("reduce examples") {
  const Algebra skew(AlgebraSpec::skew(2));
  NcPolynomial expected = skew.monomial(Monomial{1, 1, 0}, CycloNum(2, -1));
  CHECK(skew.reduce(Word{"vu"}) == expected);

  const Algebra a01(AlgebraSpec::downup(0, 1, 1));
  CHECK(a01.reduce(Word{"ddu"}) == a01.monomial(Monomial{1, 0, 2}));
  CHECK(a01.reduce(Word{""}) == a01.one());
  CHECK(skew.reduce(Word{""}) == skew.one());

  // d^2 u = alpha dud + beta ud^2 read off directly
  const Algebra gen(AlgebraSpec::downup(Rational(1, 3), 5, 1));
  NcPolynomial rhs = gen.monomial(Monomial{0, 1, 1}, CycloNum(1, Rational(1, 3)));
  rhs.add_term(Monomial{1, 0, 2}, CycloNum(1, 5));
  CHECK(gen.reduce(Word{"ddu"}) == rhs);

  CHECK_THROWS_AS(skew.reduce(Word{"ud"}), AlgebraError);
  CHECK_THROWS_AS(a01.reduce(Word{"uv"}), AlgebraError);
}

TEST_CASE("multiply examples") {
  const Algebra skew(AlgebraSpec::skew(2));
  CHECK(skew.multiply(skew.generator('v'), skew.generator('u')) ==
        skew.monomial(Monomial{1, 1, 0}, CycloNum(2, -1)));
  const Algebra a01(AlgebraSpec::downup(0, 1, 1));
  CHECK(a01.multiply(a01.generator('d'), a01.generator('u')) == a01.monomial(Monomial{0, 1, 0}));
  CHECK(a01.multiply(a01.monomial(Monomial{0, 1, 0}), a01.generator('u')) == a01.monomial(Monomial{2, 0, 1}));
  const Algebra other(AlgebraSpec::downup(0, -1, 1));
  CHECK_THROWS_AS(a01.multiply(a01.generator('u'), other.generator('u')), AlgebraError);
}

TEST_CASE("monomial bases") {
  const Algebra skew(AlgebraSpec::skew(1));
  CHECK(skew.monomial_basis(5).size() == 6);
  const Algebra du(AlgebraSpec::downup(0, 1, 1));
  const std::vector<Monomial> deg2 = {{2, 0, 0}, {1, 0, 1}, {0, 1, 0}, {0, 0, 2}};
  CHECK(du.monomial_basis(2) == deg2);
  CHECK(du.monomial_basis(3).size() == 6);
  for (int d = 0; d <= 30; ++d) {
    const auto basis = du.monomial_basis(d);
    CHECK(basis.size() == monomial_count(AlgebraKind::downup, d));
    const MonomialIndexer idx(AlgebraKind::downup, d);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      CHECK(degree(AlgebraKind::downup, basis[i]) == d);
      CHECK(idx.index(basis[i]) == i);
    }
    const auto sb = skew.monomial_basis(d);
    const MonomialIndexer sidx(AlgebraKind::skew, d);
    for (std::size_t i = 0; i < sb.size(); ++i) CHECK(sidx.index(sb[i]) == i);
  }
  CHECK_THROWS_AS(MonomialIndexer(AlgebraKind::downup, 4).index(Monomial{1, 0, 0}), AlgebraError);
}

TEST_CASE("normal words") {
  for (const auto kind : {AlgebraKind::skew, AlgebraKind::downup}) {
    const Algebra alg(kind == AlgebraKind::skew ? AlgebraSpec::skew(1) : AlgebraSpec::downup(0, 1, 1));
    for (int d = 0; d <= 8; ++d) {
      for (const auto& m : alg.monomial_basis(d)) {
        const Word w = to_word(kind, m);
        CHECK(alg.is_normal_word(w));
        CHECK(from_normal_word(kind, w) == m);
        // reduce is the identity on normal monomials
        CHECK(alg.reduce(w) == alg.monomial(m));
      }
    }
  }
  CHECK_THROWS_AS(from_normal_word(AlgebraKind::downup, Word{"ddu"}), AlgebraError);
}

TEST_CASE("confluence: strategies and the multiplication table agree") {
  std::mt19937 rng(7);
  for (const auto& spec : property_specs()) {
    const Algebra alg(spec);
    CAPTURE(spec.name());
    for (int trial = 0; trial < 1000; ++trial) {
      const Word w{random_word(rng, spec.alphabet(), 10)};
      const NcPolynomial left = alg.reduce(w, RewriteStrategy::leftmost);
      const NcPolynomial right = alg.reduce(w, RewriteStrategy::rightmost);
      CAPTURE(w.letters);
      REQUIRE(left == right);
      REQUIRE(left == alg.normal_form(w));
      for (const auto& [m, c] : left.terms()) CHECK(degree(spec.kind, m) == static_cast<int>(w.degree()));
    }
  }
}

TEST_CASE("reduction is compatible with concatenation; multiplication is associative") {
  std::mt19937 rng(11);
  for (const auto& spec : property_specs()) {
    const Algebra alg(spec);
    for (int trial = 0; trial < 200; ++trial) {
      const std::string w1 = random_word(rng, spec.alphabet(), 6);
      const std::string w2 = random_word(rng, spec.alphabet(), 6);
      const std::string w3 = random_word(rng, spec.alphabet(), 4);
      const NcPolynomial p = alg.reduce(Word{w1}), q = alg.reduce(Word{w2}), r = alg.reduce(Word{w3});
      CHECK(alg.reduce(Word{w1 + w2}) == alg.multiply(p, q));
      CHECK(alg.multiply(alg.multiply(p, q), r) == alg.multiply(p, alg.multiply(q, r)));
    }
  }
}

TEST_CASE("u^2 and d^2 are central in A(0,1)") {
  const Algebra alg(AlgebraSpec::downup(0, 1, 1));
  const NcPolynomial u2 = alg.monomial(Monomial{2, 0, 0});
  const NcPolynomial d2 = alg.monomial(Monomial{0, 0, 2});
  for (int d = 0; d <= 8; ++d) {
    for (const auto& m : alg.monomial_basis(d)) {
      const NcPolynomial x = alg.monomial(m);
      CHECK(alg.multiply(u2, x) == alg.multiply(x, u2));
      CHECK(alg.multiply(d2, x) == alg.multiply(x, d2));
    }
  }
}

TEST_CASE("polynomial invariants") {
  const Algebra alg(AlgebraSpec::downup(0, 1, 3));
  NcPolynomial p = alg.monomial(Monomial{1, 0, 0}, root_power(3, 1));
  p.add_term(Monomial{1, 0, 0}, -root_power(3, 1));
  CHECK(p.is_zero());
  CHECK_THROWS_AS(p.add_term(Monomial{1, 0, 0}, CycloNum::one(4)), AlgebraError);
  NcPolynomial mixed = alg.one() + alg.generator('u');
  CHECK_FALSE(mixed.is_homogeneous());
  CHECK_THROWS_AS(mixed.homogeneous_degree(), AlgebraError);
  CHECK(alg.generator('d').homogeneous_degree() == 1);
  CHECK_THROWS_AS(AlgebraSpec::downup(1, 0, 1), AlgebraError);
  CHECK_THROWS_AS(AlgebraSpec::skew(0), AlgebraError);
}
