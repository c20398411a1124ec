#include "ncinv/serialize.hpp"

#include <memory>

namespace ncinv {

Json to_json(const CycloNum& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"n", x.n()}, {"coeffs", std::move(coeffs)}};
}

CycloNum cyclo_from_json(const Json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Rational> poly;
  for (const auto& c : j.at("coeffs")) poly.push_back(parse_rational(c.get<std::string>()));
  if (poly.size() != static_cast<std::size_t>(cyclotomic_degree(n)))
    throw CycloError("coefficient vector has length " + std::to_string(poly.size()) +
                     ", expected " + std::to_string(cyclotomic_degree(n)));
  return CycloNum::from_poly(n, poly);
}

Json to_json(const AlgebraSpec& s) {
  Json j;
  j["kind"] = s.kind == AlgebraKind::skew ? "skew" : "downup";
  if (s.kind == AlgebraKind::downup) {
    j["alpha"] = to_string(s.alpha);
    j["beta"] = to_string(s.beta);
  }
  j["n"] = s.n;
  return j;
}

AlgebraSpec spec_from_json(const Json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  const int n = j.at("n").get<int>();
  if (kind == "skew") return AlgebraSpec::skew(n);
  if (kind == "downup")
    return AlgebraSpec::downup(parse_rational(j.at("alpha").get<std::string>()),
                               parse_rational(j.at("beta").get<std::string>()), n);
  throw AlgebraError("unknown algebra kind '" + kind + "'");
}

Json to_json(const NcPolynomial& p) {
  const bool skew = p.spec().kind == AlgebraKind::skew;
  Json terms = Json::array();
  for (const auto& [m, c] : p.terms()) {
    Json mono = skew ? Json::array({m.a, m.b}) : Json::array({m.a, m.b, m.c});
    terms.push_back(Json{{"monomial", std::move(mono)}, {"coeff", to_json(c)}});
  }
  return Json{{"spec", to_json(p.spec())}, {"terms", std::move(terms)}};
}

NcPolynomial polynomial_from_json(const Json& j) {
  auto spec = std::make_shared<const AlgebraSpec>(spec_from_json(j.at("spec")));
  const std::size_t arity = spec->kind == AlgebraKind::skew ? 2 : 3;
  NcPolynomial p(spec);
  for (const auto& t : j.at("terms")) {
    const auto& mono = t.at("monomial");
    if (mono.size() != arity) throw AlgebraError("monomial has the wrong number of exponents");
    Monomial m{mono[0].get<int>(), mono[1].get<int>(), arity == 3 ? mono[2].get<int>() : 0};
    if (m.a < 0 || m.b < 0 || m.c < 0) throw AlgebraError("negative exponent");
    p.add_term(m, cyclo_from_json(t.at("coeff")));
  }
  return p;
}

Json to_json(const GenerationReport& r) {
  Json degrees = Json::array();
  for (const auto& d : r.degrees)
    degrees.push_back(Json{{"degree", d.degree},
                           {"inv_dim", d.inv_dim},
                           {"product_dim", d.product_dim},
                           {"new_gens", d.new_gens}});
  return Json{{"algebra", to_json(r.spec)},
              {"n", r.n},
              {"degrees", std::move(degrees)},
              {"beta", r.beta},
              {"exhausted", r.exhausted}};
}

GenerationReport generation_report_from_json(const Json& j) {
  GenerationReport r;
  r.spec = spec_from_json(j.at("algebra"));
  r.n = j.at("n").get<int>();
  for (const auto& d : j.at("degrees")) {
    DegreeRecord rec;
    rec.degree = d.at("degree").get<int>();
    rec.inv_dim = d.at("inv_dim").get<std::size_t>();
    rec.product_dim = d.at("product_dim").get<std::size_t>();
    rec.new_gens = d.at("new_gens").get<std::size_t>();
    r.degrees.push_back(rec);
  }
  r.beta = j.at("beta").get<int>();
  r.exhausted = j.at("exhausted").get<bool>();
  return r;
}

Json to_json(const VerificationReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"tuple", f.tuple}, {"closed_form", f.closed_form}, {"engine", f.engine}});
  Json j{{"target", r.target}, {"n", r.n}, {"checked", r.checked}, {"failures", std::move(failures)}};
  if (r.rank) j["rank"] = *r.rank;
  if (r.dimension) j["dimension"] = *r.dimension;
  return j;
}

VerificationReport verification_report_from_json(const Json& j) {
  VerificationReport r;
  r.target = j.at("target").get<std::string>();
  r.n = j.at("n").get<int>();
  r.checked = j.at("checked").get<std::size_t>();
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.at("tuple").get<std::vector<int>>(), f.at("closed_form").get<std::string>(),
                          f.at("engine").get<std::string>()});
  if (j.contains("rank")) r.rank = j.at("rank").get<std::size_t>();
  if (j.contains("dimension")) r.dimension = j.at("dimension").get<std::size_t>();
  return r;
}

}  // namespace ncinv
