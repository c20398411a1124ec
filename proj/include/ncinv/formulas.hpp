#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ncinv/action.hpp"
#include "ncinv/gendeg.hpp"

namespace ncinv {

class FormulaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Orbit-sum index. The monomial whose orbit sum m + g.m is meant:
/// skew (k, i) is the monomial u^(kn-i) v^i, down-up (a, b, c) is u^a (du)^b d^c.
using OrbitIndex = Monomial;

inline OrbitIndex skew_index(int n, int k, int i) { return Monomial{k * n - i, i, 0}; }

struct SymbolicTerm {
  CycloNum coeff;
  OrbitIndex index;
};

/// Linear combination of orbit sums.
struct SymbolicCombination {
  std::vector<SymbolicTerm> terms;
};

enum class NormalizeFamily { skew, downup_2n, downup_3n };

/// Rewrites a raw orbit-sum index as coeff * O(canonical). Throws
/// FormulaError for a negative exponent or a degree outside the family.
std::pair<CycloNum, OrbitIndex> normalize_index(NormalizeFamily family, int n, const OrbitIndex& raw);

/// True iff `idx` is in the canonical range of its family.
bool is_canonical(NormalizeFamily family, int n, const OrbitIndex& idx);

enum class ProductFamily {
  skew_nn,           // O(n-i,i) O(n-j,j); params (i, j)
  skew_2n_n_left,    // O(2n-i,i) O(n-j,j); params (i, j)
  skew_2n_n_right,   // O(n-j,j) O(2n-i,i); params (i, j)
  downup_nn,         // O(n-2i-j,i,j) O(n-2p-q,p,q); params (i, j, p, q)
  downup_n_2n,       // O(n-2i-j,i,j) O(2n-2p-q,p,q); params (i, j, p, q)
  downup_2n_n,       // O(2n-2p-q,p,q) O(n-2i-j,i,j); params (i, j, p, q)
};

/// The closed-form right-hand side with every index normalized and equal
/// indices merged. Throws FormulaError when the parameters violate the
/// hypotheses of the identity.
SymbolicCombination closed_form_product(ProductFamily family, int n, const std::vector<int>& params);

/// The two factors of a product family, as raw indices in product order.
std::pair<OrbitIndex, OrbitIndex> product_factors(ProductFamily family, int n,
                                                  const std::vector<int>& params);

namespace detail {
/// One case block of the n x 2n down-up product table applied to any
/// parameters (no parity check). Blocks 0..3 in table order; `literal`
/// keeps the printed third-block exponent instead of the corrected one.
std::vector<SymbolicTerm> downup_n_2n_block(int block, int n, int i, int j, int p, int q,
                                            bool literal = false);
}  // namespace detail

enum class KernelFamily { skew_even, skew_odd, downup_even, downup_odd };

/// Explicit annihilating functional, indexed like canonical_basis at degree
/// 2n (even families) or 3n (odd families).
std::vector<CycloNum> kernel_vector(KernelFamily family, int n);

/// Canonical orbit-sum basis of a degree, paired with its indices.
/// skew: O(kn-i, i) for i = 0..floor(kn/2), zero sums left out.
/// down-up at 2n (n even) and 3n (n odd): fixed admissibility rules, ordered by (b, c).
/// Any other degree falls back to GroupAction::orbit_sum_basis.
std::vector<std::pair<OrbitIndex, NcPolynomial>> canonical_basis(const GroupAction& act, int degree);

/// Sum of coeff * orbit_sum(index).
NcPolynomial expand(const GroupAction& act, const SymbolicCombination& c);

enum class VerifyTarget {
  prop_invar,
  eq_4n,
  lemma_multi,
  prop_even_products,
  prop_odd_products,
  normalize_2n,
  normalize_3n,
  kernel_2n,
  kernel_3n,
};

std::string to_string(VerifyTarget t);
/// Throws std::invalid_argument on an unknown name.
VerifyTarget parse_target(const std::string& name);
const std::vector<VerifyTarget>& all_targets();

struct VerifyFailure {
  std::vector<int> tuple;
  std::string closed_form;
  std::string engine;
};

struct VerificationReport {
  std::string target;
  int n = 0;
  std::size_t checked = 0;
  std::vector<VerifyFailure> failures;
  // kernel targets only
  std::optional<std::size_t> rank;
  std::optional<std::size_t> dimension;

  bool ok() const { return failures.empty(); }
};

/// Exhaustive closed form vs engine comparison. `spec` picks the algebra for
/// the kernel targets; the other targets fix their own algebra (skew or
/// A(0,1)) and reject a conflicting spec. Throws FormulaError when n does
/// not satisfy the target's hypotheses.
VerificationReport verify_identity(VerifyTarget target, const AlgebraSpec& spec, unsigned threads = 1);

}  // namespace ncinv
