#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ncinv/serialize.hpp"

using namespace ncinv;

TEST_CASE("cyclotomic numbers") {
  const CycloNum x = CycloNum(5, Rational(-3, 4)) + root_power(5, 3) * Rational(7, 2);
  const Json j = to_json(x);
  CHECK(j.dump() == R"({"n":5,"coeffs":["-3/4","0","0","7/2"]})");
  CHECK(cyclo_from_json(j) == x);
  CHECK(cyclo_from_json(Json::parse(j.dump())) == x);
  CHECK_THROWS(cyclo_from_json(Json::parse(R"({"n":5,"coeffs":["1"]})")));
  CHECK_THROWS(cyclo_from_json(Json::parse(R"({"n":1,"coeffs":["1/0"]})")));
}

TEST_CASE("algebra specs") {
  CHECK(to_json(AlgebraSpec::skew(3)).dump() == R"({"kind":"skew","n":3})");
  const AlgebraSpec du = AlgebraSpec::downup(Rational(1, 2), -1, 4);
  CHECK(to_json(du).dump() == R"({"kind":"downup","alpha":"1/2","beta":"-1","n":4})");
  CHECK(spec_from_json(to_json(du)) == du);
  CHECK_THROWS(spec_from_json(Json::parse(R"({"kind":"weyl","n":1})")));
  CHECK_THROWS(spec_from_json(Json::parse(R"({"kind":"downup","alpha":"0","beta":"0","n":1})")));
}

TEST_CASE("polynomials") {
  const auto act = GroupAction::standard(AlgebraSpec::downup(0, 1, 3));
  for (int d : {3, 6}) {
    for (const auto& p : act.invariant_basis(d)) {
      const Json j = to_json(p);
      CHECK(polynomial_from_json(Json::parse(j.dump())) == p);
    }
  }
  const auto skew = GroupAction::standard(AlgebraSpec::skew(2));
  const NcPolynomial s = skew.orbit_sum(Monomial{2, 0, 0});
  CHECK(to_json(s)["terms"][0]["monomial"].dump() == "[2,0]");
  CHECK(polynomial_from_json(to_json(s)) == s);
  CHECK_THROWS(polynomial_from_json(Json::parse(
      R"({"spec":{"kind":"skew","n":1},"terms":[{"monomial":[1,0,0],"coeff":{"n":1,"coeffs":["1"]}}]})")));
}

TEST_CASE("reports") {
  const auto r = compute_beta(GroupAction::standard(AlgebraSpec::skew(3)), 3);
  const Json j = to_json(r);
  CHECK(j["beta"] == 9);
  const auto back = generation_report_from_json(Json::parse(j.dump()));
  CHECK(back.beta == r.beta);
  CHECK(back.exhausted == r.exhausted);
  CHECK(back.spec == r.spec);
  REQUIRE(back.degrees.size() == r.degrees.size());
  for (std::size_t i = 0; i < r.degrees.size(); ++i) {
    CHECK(back.degrees[i].inv_dim == r.degrees[i].inv_dim);
    CHECK(back.degrees[i].new_gens == r.degrees[i].new_gens);
  }
  CHECK(to_json(back).dump() == j.dump());

  VerificationReport v;
  v.target = "kernel-2n";
  v.n = 4;
  v.checked = 7;
  v.failures.push_back({{1, 2}, "a", "b"});
  v.rank = 3;
  v.dimension = 5;
  const Json vj = to_json(v);
  CHECK(to_json(verification_report_from_json(vj)).dump() == vj.dump());
  v.rank.reset();
  v.dimension.reset();
  CHECK_FALSE(to_json(v).contains("rank"));
}
