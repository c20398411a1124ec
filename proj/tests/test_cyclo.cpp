#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ncinv/cyclo.hpp"

using namespace ncinv;

namespace {

CycloNum random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::vector<Rational> poly;
  for (int i = 0; i < n + 2; ++i) poly.emplace_back(num(rng), den(rng));
  for (auto& q : poly) q.canonicalize();
  return CycloNum::from_poly(n, poly);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<Rational>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<Rational>{1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<Rational>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<Rational>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<Rational>{1, 0, -1, 0, 1});
  // Euler phi
  const int phi[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8};
  for (int n = 1; n <= 16; ++n) CHECK(cyclotomic_degree(n) == phi[n - 1]);
  CHECK_THROWS_AS(cyclotomic_polynomial(0), CycloError);
}

TEST_CASE("root_power examples") {
  CHECK(root_power(2, 1) == CycloNum(2, -1));
  CHECK(root_power(4, 5) == root_power(4, 1));
  CHECK(root_power(6, 3) == CycloNum(6, -1));
  CHECK(root_power(5, 0).is_one());
  CHECK(root_power(7, -1) == root_power(7, 6));
  CHECK(root_power(1, 12345).is_one());
}

TEST_CASE("arith examples") {
  const CycloNum l4 = root_power(4, 1), l4cube = root_power(4, 3);
  CHECK(arith(ArithOp::add, l4, &l4cube).is_zero());
  const CycloNum l3 = root_power(3, 1), l3sq = root_power(3, 2);
  const CycloNum s = arith(ArithOp::add, l3, &l3sq);
  CHECK(arith(ArithOp::add, CycloNum::one(3), &s).is_zero());
  const CycloNum one4 = CycloNum::one(4);
  CHECK(arith(ArithOp::div, one4, &l4) == -l4);
  CHECK(arith(ArithOp::neg, l4) == root_power(4, 3));
  CHECK(arith(ArithOp::sub, l4, &l4).is_zero());
  CHECK(arith(ArithOp::mul, l4, &l4) == CycloNum(4, -1));
}

TEST_CASE("errors") {
  const CycloNum zero = CycloNum::zero(5);
  CHECK_THROWS_AS(CycloNum::one(5) / zero, CycloError);
  CHECK_THROWS_AS(zero.inverse(), CycloError);
  CHECK_THROWS_AS((void)(CycloNum::one(3) == CycloNum::one(4)), CycloError);
  CHECK_THROWS_AS(CycloNum::one(3) + CycloNum::one(4), CycloError);
  CHECK_THROWS_AS(arith(ArithOp::add, zero), CycloError);
  CHECK_THROWS_AS(CycloNum(0), CycloError);
}

TEST_CASE("root identities") {
  for (int n = 1; n <= 12; ++n) {
    for (int k = 0; k < n; ++k) CHECK((root_power(n, k) * root_power(n, n - k)).is_one());
    if (n % 2 == 0) CHECK(root_power(n, n / 2) == CycloNum(n, -1));
    // lambda is primitive: no smaller power is 1
    for (int k = 1; k < n; ++k) CHECK_FALSE(root_power(n, k).is_one());
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 rng(20240611);
  for (int n = 1; n <= 12; ++n) {
    for (int trial = 0; trial < 12; ++trial) {
      const CycloNum a = random_element(rng, n), b = random_element(rng, n), c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK((a - a).is_zero());
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK((b / a) * a == b);
      }
      CHECK(static_cast<int>(a.coeffs().size()) == cyclotomic_degree(n));
    }
  }
}

TEST_CASE("coefficients stay canonical") {
  const CycloNum x = CycloNum::from_poly(3, std::vector<Rational>{Rational(2, 4), 0, 0, 0, 1});
  for (const auto& q : x.coeffs()) CHECK(q.get_den() > 0);
  CHECK(x.coeffs()[0] == Rational(1, 2));
  // lambda^4 = lambda for n = 3
  CHECK(x == CycloNum(3, Rational(1, 2)) + root_power(3, 1));
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-1/2") == Rational(-1, 2));
  CHECK(parse_rational("4/6") == Rational(2, 3));
  CHECK(parse_rational("+5") == 5);
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  for (const char* bad : {"", "1/0", "a", "1/", "/2", "1.5", "1/-2", "--1", "2 "})
    CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
}

TEST_CASE("as_signed_root and printing") {
  int e = -1;
  bool neg = false;
  CHECK(as_signed_root(-root_power(8, 3), e, neg));
  CHECK(e == 3);
  CHECK(neg);
  CHECK_FALSE(as_signed_root(CycloNum(8, 2), e, neg));
  CHECK(root_power(5, 2).to_string() == "L^2");
  CHECK(CycloNum::zero(5).to_string() == "0");
  CHECK((CycloNum(4, Rational(1, 2)) - root_power(4, 1)).to_string() == "1/2 - L");
}
