#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <optional>

#include "ncinv/formulas.hpp"

using namespace ncinv;

namespace {

// Raw terms expanded directly; nullopt when an index has a negative exponent
// or the wrong degree.
std::optional<NcPolynomial> expand_raw(const GroupAction& act, const std::vector<SymbolicTerm>& terms, int d) {
  NcPolynomial out = act.algebra().zero();
  for (const auto& t : terms) {
    if (t.index.a < 0 || t.index.b < 0 || t.index.c < 0) return std::nullopt;
    if (degree(act.spec().kind, t.index) != d) return std::nullopt;
    out += t.coeff * act.orbit_sum(t.index);
  }
  return out;
}

NcPolynomial engine_product(const GroupAction& act, const OrbitIndex& x, const OrbitIndex& y) {
  return act.algebra().multiply(act.orbit_sum(x), act.orbit_sum(y));
}

}  // namespace

TEST_CASE("formula sweeps pass for every admissible n") {
  for (int n = 1; n <= 8; ++n) {
    for (VerifyTarget t : all_targets()) {
      const bool kernel = t == VerifyTarget::kernel_2n || t == VerifyTarget::kernel_3n;
      const bool skew_only = t == VerifyTarget::prop_invar || t == VerifyTarget::eq_4n || t == VerifyTarget::lemma_multi;
      const AlgebraSpec spec = skew_only ? AlgebraSpec::skew(n) : AlgebraSpec::downup(0, 1, n);
      if (kernel && n > 5) continue;  // the acceptance run covers the large kernels
      CAPTURE(to_string(t));
      CAPTURE(n);
      VerificationReport r;
      try {
        r = verify_identity(t, spec);
      } catch (const FormulaError&) {
        continue;  // parity hypothesis not met
      }
      CHECK(r.checked > 0);
      CHECK(r.ok());
    }
  }
}

TEST_CASE("parity hypotheses are enforced") {
  CHECK_THROWS_AS(verify_identity(VerifyTarget::eq_4n, AlgebraSpec::skew(3)), FormulaError);
  CHECK_THROWS_AS(verify_identity(VerifyTarget::lemma_multi, AlgebraSpec::skew(4)), FormulaError);
  CHECK_THROWS_AS(verify_identity(VerifyTarget::kernel_2n, AlgebraSpec::skew(6)), FormulaError);
  CHECK_THROWS_AS(verify_identity(VerifyTarget::kernel_3n, AlgebraSpec::skew(4)), FormulaError);
  CHECK_THROWS_AS(verify_identity(VerifyTarget::prop_odd_products, AlgebraSpec::downup(0, 1, 2)), FormulaError);
  CHECK_THROWS_AS(verify_identity(VerifyTarget::eq_4n, AlgebraSpec::downup(0, 1, 4)), FormulaError);
  CHECK_THROWS_AS(kernel_vector(KernelFamily::skew_even, 6), FormulaError);
  CHECK_THROWS_AS(kernel_vector(KernelFamily::downup_odd, 2), FormulaError);
  CHECK_THROWS_AS(closed_form_product(ProductFamily::skew_nn, 4, {2, 0}), FormulaError);
  CHECK_THROWS_AS(closed_form_product(ProductFamily::skew_nn, 4, {0}), FormulaError);
}

TEST_CASE("target names") {
  for (VerifyTarget t : all_targets()) CHECK(parse_target(to_string(t)) == t);
  CHECK(to_string(VerifyTarget::prop_even_products) == "prop-even-products");
  CHECK_THROWS_AS(parse_target("kernel-4n"), std::invalid_argument);
}

TEST_CASE("eq-4n at n = 4 also covers commutation") {
  const auto r = verify_identity(VerifyTarget::eq_4n, AlgebraSpec::skew(4));
  CHECK(r.ok());
  const auto act = GroupAction::standard(AlgebraSpec::skew(4));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(engine_product(act, skew_index(4, 1, i), skew_index(4, 1, j)) ==
            engine_product(act, skew_index(4, 1, j), skew_index(4, 1, i)));
  // i = j = 0: O(2n,0) + O(n,n)
  const auto c = closed_form_product(ProductFamily::skew_nn, 4, {0, 0});
  REQUIRE(c.terms.size() == 2);
  CHECK(expand(act, c) == engine_product(act, skew_index(4, 1, 0), skew_index(4, 1, 0)));
  CHECK(expand(act, c) == act.orbit_sum(skew_index(4, 2, 0)) + act.orbit_sum(skew_index(4, 2, 4)));
}

TEST_CASE("the two orders of a 2n x n skew product differ by a sign for i odd") {
  const int n = 3;
  const auto act = GroupAction::standard(AlgebraSpec::skew(n));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; 2 * j <= n - 1; ++j) {
      const NcPolynomial left = expand(act, closed_form_product(ProductFamily::skew_2n_n_left, n, {i, j}));
      const NcPolynomial right = expand(act, closed_form_product(ProductFamily::skew_2n_n_right, n, {i, j}));
      CHECK(left == engine_product(act, skew_index(n, 2, i), skew_index(n, 1, j)));
      if (i % 2 == 1) CHECK(left == -right);
      else CHECK(left == right);
    }
  }
}

TEST_CASE("normalize_index") {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 1; k <= 3; ++k) {
      for (int i = 0; i <= k * n; ++i) {
        const auto [c, idx] = normalize_index(NormalizeFamily::skew, n, skew_index(n, k, i));
        CHECK(is_canonical(NormalizeFamily::skew, n, idx));
        int e = 0;
        bool neg = false;
        CHECK(as_signed_root(c, e, neg));
        if (2 * i <= k * n) {
          CHECK(c.is_one());
          CHECK(idx == skew_index(n, k, i));
        }
      }
    }
  }
  for (int n = 1; n <= 8; ++n) {
    const auto act = GroupAction::standard(AlgebraSpec::downup(0, 1, n));
    const NormalizeFamily fam = n % 2 == 0 ? NormalizeFamily::downup_2n : NormalizeFamily::downup_3n;
    const int d = n % 2 == 0 ? 2 * n : 3 * n;
    if (d > 15) continue;
    for (const auto& m : act.algebra().monomial_basis(d)) {
      const auto [c, idx] = normalize_index(fam, n, m);
      CHECK(is_canonical(fam, n, idx));
      CHECK(degree(AlgebraKind::downup, idx) == d);
      // idempotent
      const auto again = normalize_index(fam, n, idx);
      CHECK(again.first.is_one());
      CHECK(again.second == idx);
      // the relating coefficient is a power of lambda
      int e = 0;
      bool neg = false;
      CHECK(as_signed_root(c, e, neg));
      CHECK(act.orbit_sum(m) == c * act.orbit_sum(idx));
    }
  }
  CHECK_THROWS_AS(normalize_index(NormalizeFamily::downup_3n, 3, Monomial{1, 0, 0}), FormulaError);
  CHECK_THROWS_AS(normalize_index(NormalizeFamily::downup_2n, 2, Monomial{-1, 2, 1}), FormulaError);
}

TEST_CASE("n = 3 degree-9 swap rule") {
  const int n = 3;
  // raw (k', l, 3n-2l-k') with 3n <= 2(l + 3n-2l-k')
  const Monomial raw{1, 1, 6};
  const auto [c, idx] = normalize_index(NormalizeFamily::downup_3n, n, raw);
  CHECK(idx == Monomial{6, 1, 1});
  CHECK(c == root_power(n, 1 + 6));
}

TEST_CASE("the third odd-n product block holds exactly when j and q are even") {
  for (int n : {1, 3, 5}) {
    const auto act = GroupAction::standard(AlgebraSpec::downup(0, 1, n));
    bool literal_failed = false;
    bool other_parity_failed[2][2] = {{false, false}, {false, false}};
    for (int i = 0; 2 * i <= n; ++i) {
      for (int j = 0; 2 * i + j <= n; ++j) {
        for (int p = 0; 2 * p <= 2 * n; ++p) {
          for (int q = 0; 2 * p + q <= 2 * n; ++q) {
            const NcPolynomial engine =
                engine_product(act, Monomial{n - 2 * i - j, i, j}, Monomial{2 * n - 2 * p - q, p, q});
            const auto block = expand_raw(act, detail::downup_n_2n_block(2, n, i, j, p, q), 3 * n);
            const bool holds = block && *block == engine;
            if (j % 2 == 0 && q % 2 == 0) {
              CAPTURE(n);
              CAPTURE(i);
              CAPTURE(j);
              CAPTURE(p);
              CAPTURE(q);
              CHECK(holds);
              const auto lit = expand_raw(act, detail::downup_n_2n_block(2, n, i, j, p, q, true), 3 * n);
              if (!lit || *lit != engine) literal_failed = true;
            } else if (!holds) {
              other_parity_failed[j % 2][q % 2] = true;
            }
          }
        }
      }
    }
    CHECK(literal_failed);
    if (n >= 3) {
      CHECK(other_parity_failed[0][1]);
      CHECK(other_parity_failed[1][0]);
      CHECK(other_parity_failed[1][1]);
    }
  }
}

TEST_CASE("kernel vectors") {
  const auto x = kernel_vector(KernelFamily::skew_even, 4);
  const CycloNum L = root_power(4, 1);
  REQUIRE(x.size() >= 4);
  CHECK(x[0].is_one());
  CHECK(x[1] == -L);
  CHECK(x[2] == -L);
  CHECK(x[3] == L * L);

  const auto s3 = GroupAction::standard(AlgebraSpec::skew(3));
  const auto y = kernel_vector(KernelFamily::skew_odd, 3);
  CHECK(y.size() == canonical_basis(s3, 9).size());
  CHECK(y.size() == s3.invariant_dimension_trace(9));
  bool nonzero = false;
  for (const auto& c : y) nonzero = nonzero || !c.is_zero();
  CHECK(nonzero);

  for (const auto& c : kernel_vector(KernelFamily::downup_even, 2)) CHECK((c.is_one() || (-c).is_one()));

  for (int n : {2, 4}) {
    const auto act = GroupAction::standard(AlgebraSpec::downup(0, 1, n));
    CHECK(kernel_vector(KernelFamily::downup_even, n).size() == canonical_basis(act, 2 * n).size());
  }
  for (int n : {1, 3, 5}) {
    const auto act = GroupAction::standard(AlgebraSpec::downup(0, 1, n));
    CHECK(kernel_vector(KernelFamily::downup_odd, n).size() == canonical_basis(act, 3 * n).size());
  }
}

TEST_CASE("canonical bases are bases") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& s : {AlgebraSpec::skew(n), AlgebraSpec::downup(0, 1, n)}) {
      const auto act = GroupAction::standard(s);
      for (int k = 1; k <= 3; ++k) {
        const auto cb = canonical_basis(act, k * n);
        CHECK(cb.size() == act.invariant_dimension_trace(k * n));
        for (const auto& [idx, p] : cb) CHECK_FALSE(p.is_zero());
      }
    }
  }
  // u^2 v^2 is excluded at n = 4
  const auto s4 = GroupAction::standard(AlgebraSpec::skew(4));
  for (const auto& [idx, p] : canonical_basis(s4, 4)) CHECK(idx != skew_index(4, 1, 2));
}
