#include "ncinv/formulas.hpp"

#include <map>
#include <sstream>

namespace ncinv {

namespace {

int parity_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

// (-1)^s lambda^e
CycloNum signed_root(int n, long long s, long long e) {
  CycloNum r = root_power(n, e);
  return parity_sign(s) > 0 ? r : -r;
}

std::string tuple_string(const std::vector<int>& t) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < t.size(); ++i) out << (i ? "," : "") << t[i];
  out << ")";
  return out.str();
}

void require(bool cond, const std::string& what) {
  if (!cond) throw FormulaError("hypothesis violated: " + what);
}

OrbitIndex triple(int a, int b, int c) { return Monomial{a, b, c}; }

}  // namespace

// ---------------------------------------------------------- normalization --

bool is_canonical(NormalizeFamily family, int n, const OrbitIndex& idx) {
  switch (family) {
    case NormalizeFamily::skew:
      return 2 * idx.b <= idx.a + idx.b;
    case NormalizeFamily::downup_2n:
      return n > idx.b + idx.c || (n == idx.b + idx.c && idx.b % 2 == 0);
    case NormalizeFamily::downup_3n:
      return 3 * n > 2 * (idx.b + idx.c);
  }
  return false;
}

std::pair<CycloNum, OrbitIndex> normalize_index(NormalizeFamily family, int n, const OrbitIndex& raw) {
  if (n < 1) throw FormulaError("n must be positive");
  if (raw.a < 0 || raw.b < 0 || raw.c < 0)
    throw FormulaError("orbit index " + tuple_string({raw.a, raw.b, raw.c}) + " has a negative entry");
  if (family == NormalizeFamily::skew) {
    if (raw.c != 0) throw FormulaError("skew orbit index has two entries");
    const int d = raw.a + raw.b;
    if (d % n != 0) throw FormulaError("skew orbit index of degree " + std::to_string(d) + " is not a multiple of n");
    if (is_canonical(family, n, raw)) return {CycloNum::one(n), raw};
    // O(a, b) = (-1)^(ab) lambda^b O(b, a)
    return {signed_root(n, static_cast<long long>(raw.a) * raw.b, raw.b), Monomial{raw.b, raw.a, 0}};
  }
  const int d = raw.a + 2 * raw.b + raw.c;
  const int i = raw.b, j = raw.c;
  if (family == NormalizeFamily::downup_2n) {
    if (d != 2 * n) throw FormulaError("triple of degree " + std::to_string(d) + " in a degree-2n rule");
    if (is_canonical(family, n, raw)) return {CycloNum::one(n), raw};
    const CycloNum c = root_power(n, i + j);
    if (j % 2 == 1) return {c, triple(j - 1, i + 1, 2 * n - 2 * i - j - 1)};
    if (i != 0) return {c, triple(j + 1, i - 1, 2 * n - 2 * i - j + 1)};
    return {c, triple(j, 0, 2 * n - j)};
  }
  if (d != 3 * n) throw FormulaError("triple of degree " + std::to_string(d) + " in a degree-3n rule");
  if (is_canonical(family, n, raw)) return {CycloNum::one(n), raw};
  return {root_power(n, i + j), triple(j, i, raw.a)};
}

// --------------------------------------------------------- product tables --

namespace {

using Raw = std::vector<SymbolicTerm>;

void push(Raw& out, const CycloNum& c, int a, int b, int cc) { out.push_back({c, triple(a, b, cc)}); }

SymbolicCombination normalize_all(NormalizeFamily family, int n, const Raw& raw) {
  std::map<Monomial, CycloNum, MonomialOrder> merged;
  for (const auto& t : raw) {
    auto [c, idx] = normalize_index(family, n, t.index);
    c *= t.coeff;
    auto [it, inserted] = merged.try_emplace(idx, c);
    if (!inserted) it->second += c;
  }
  SymbolicCombination out;
  for (auto& [idx, c] : merged)
    if (!c.is_zero()) out.terms.push_back({c, idx});
  return out;
}

Raw skew_nn(int n, int i, int j) {
  const CycloNum one = CycloNum::one(n);
  Raw out;
  out.push_back({parity_sign(static_cast<long long>(i) * j) * one, Monomial{2 * n - i - j, i + j, 0}});
  if (j <= i) {
    out.push_back({signed_root(n, static_cast<long long>(i) * (j + 1), i), Monomial{n + i - j, n - i + j, 0}});
  } else {
    out.push_back({signed_root(n, static_cast<long long>(j) * (i + 1), j), Monomial{n + j - i, n - j + i, 0}});
  }
  return out;
}

// left: O(2n-i,i) O(n-j,j); right: O(n-j,j) O(2n-i,i).
Raw skew_2n_n(int n, int i, int j, bool left) {
  const long long first = left ? static_cast<long long>(i) * (j - 1) : static_cast<long long>(i) * j;
  const long long second = left ? static_cast<long long>(i) * j : static_cast<long long>(i) * (j - 1);
  Raw out;
  out.push_back({signed_root(n, first, 0), Monomial{3 * n - i - j, i + j, 0}});
  if (2 * (i - j) < n) {
    out.push_back({signed_root(n, second, j), Monomial{2 * n - i + j, n + i - j, 0}});
  } else {
    out.push_back({signed_root(n, second, i), Monomial{n + i - j, 2 * n + j - i, 0}});
  }
  return out;
}

Raw downup_nn(int n, int i, int j, int p, int q) {
  const CycloNum one = CycloNum::one(n);
  const CycloNum L = root_power(n, p + q);
  Raw out;
  const bool je = j % 2 == 0, qe = q % 2 == 0;
  if (je && qe) {
    push(out, one, 2 * n - 2 * i - j - 2 * p - q, p + i, q + j);
    if (p > i) push(out, L, n - j + q + 1, p - i - 1, n + 2 * i + j - 2 * p - q + 1);
    else push(out, L, n - 2 * i - j + q + 2 * p, i - p, n - q + j);
  } else if (je && !qe) {
    push(out, L, n - 2 * i - j + q - 1, i + p + 1, n - 2 * p - q + j - 1);
    if (p >= i) push(out, one, 2 * n - j - 2 * p - q, p - i, 2 * i + j + q);
    else push(out, one, 2 * n - 2 * i - j - q + 1, i - p - 1, 2 * p + j + q + 1);
  } else if (!je && qe) {
    push(out, L, n + q - 2 * i - j, i + p, n + j - 2 * p - q);
    if (p > i) push(out, one, 2 * n - j - 2 * p - q + 1, p - i - 1, q + 2 * i + j + 1);
    else push(out, one, 2 * n - 2 * i - j - q, i - p, 2 * p + q + j);
  } else {
    push(out, one, 2 * n - 2 * i - j - 2 * p - q - 1, i + p + 1, q + j - 1);
    if (p >= i) push(out, L, n + q - j, p - i, n + 2 * i + j - 2 * p - q);
    else push(out, L, n - 2 * i - j + 2 * p + q + 1, i - p - 1, n - q + j + 1);
  }
  return out;
}

}  // namespace

namespace detail {

std::vector<SymbolicTerm> downup_n_2n_block(int block, int n, int i, int j, int p, int q, bool literal) {
  const CycloNum one = CycloNum::one(n);
  const CycloNum L = root_power(n, p + q);
  Raw out;
  switch (block) {
    case 0:  // j even, q odd
      push(out, L, n - 2 * i - j + q - 1, i + p + 1, 2 * n - 2 * p - q + j - 1);
      if (p >= i) push(out, one, 3 * n - j - 2 * p - q, p - i, q + j + 2 * i);
      else push(out, one, 3 * n - 2 * i - j - q + 1, i - p - 1, j + 2 * p + q + 1);
      break;
    case 1:  // j, q odd
      push(out, one, 3 * n - 2 * i - j - 2 * p - q - 1, i + p + 1, j + q - 1);
      if (p >= i) push(out, L, n - j + q, p - i, 2 * n - 2 * p - q + j + 2 * i);
      else push(out, L, n - 2 * i - j + q + 2 * p + 1, i - p - 1, 2 * n - q + j + 1);
      break;
    case 2:  // printed with the same hypothesis as block 1; holds for j, q even
      push(out, one, 3 * n - 2 * i - j - 2 * p - q, i + p, j + q);
      if (p <= i) push(out, L, n - 2 * i - j + (literal ? 1 : q) + 2 * p, i - p, 2 * n + j - q);
      else push(out, L, n - j + q + 1, p - i - 1, 2 * n + 2 * i + j - 2 * p - q + 1);
      break;
    case 3:  // j odd, q even
      push(out, L, n - 2 * i - j + q, i + p, 2 * n - 2 * p - q + j);
      if (p <= i) push(out, one, 3 * n - 2 * i - j - q, i - p, q + j + 2 * p);
      else push(out, one, 3 * n - 2 * p - j - q + 1, p - i - 1, j + 2 * i + q + 1);
      break;
    default:
      throw FormulaError("no such case block");
  }
  return out;
}

}  // namespace detail

namespace {

int odd_block(int j, int q) {
  const bool je = j % 2 == 0, qe = q % 2 == 0;
  if (je && !qe) return 0;
  if (!je && !qe) return 1;
  if (je && qe) return 2;
  return 3;
}

void check_params(const std::vector<int>& params, std::size_t count) {
  if (params.size() != count)
    throw FormulaError("expected " + std::to_string(count) + " parameters, got " + std::to_string(params.size()));
  for (int x : params) require(x >= 0, "parameters are nonnegative");
}

}  // namespace

std::pair<OrbitIndex, OrbitIndex> product_factors(ProductFamily family, int n, const std::vector<int>& params) {
  switch (family) {
    case ProductFamily::skew_nn:
      check_params(params, 2);
      return {skew_index(n, 1, params[0]), skew_index(n, 1, params[1])};
    case ProductFamily::skew_2n_n_left:
      check_params(params, 2);
      return {skew_index(n, 2, params[0]), skew_index(n, 1, params[1])};
    case ProductFamily::skew_2n_n_right:
      check_params(params, 2);
      return {skew_index(n, 1, params[1]), skew_index(n, 2, params[0])};
    default:
      break;
  }
  check_params(params, 4);
  const int i = params[0], j = params[1], p = params[2], q = params[3];
  const OrbitIndex f1 = triple(n - 2 * i - j, i, j);
  if (family == ProductFamily::downup_nn) return {f1, triple(n - 2 * p - q, p, q)};
  const OrbitIndex f2 = triple(2 * n - 2 * p - q, p, q);
  if (family == ProductFamily::downup_n_2n) return {f1, f2};
  return {f2, f1};
}

SymbolicCombination closed_form_product(ProductFamily family, int n, const std::vector<int>& params) {
  require(n >= 1, "n >= 1");
  const auto factors = product_factors(family, n, params);
  for (const auto& f : {factors.first, factors.second})
    require(f.a >= 0 && f.b >= 0 && f.c >= 0, "factor indices are nonnegative");
  switch (family) {
    case ProductFamily::skew_nn: {
      const int i = params[0], j = params[1];
      require(n % 2 == 0, "n even");
      require(2 * i < n && 2 * j < n, "0 <= i, j < n/2");
      return normalize_all(NormalizeFamily::skew, n, skew_nn(n, i, j));
    }
    case ProductFamily::skew_2n_n_left:
    case ProductFamily::skew_2n_n_right: {
      const int i = params[0], j = params[1];
      require(n % 2 == 1, "n odd");
      require(i <= n, "0 <= i <= n");
      require(2 * j <= n - 1, "0 <= j <= (n-1)/2");
      return normalize_all(NormalizeFamily::skew, n,
                           skew_2n_n(n, i, j, family == ProductFamily::skew_2n_n_left));
    }
    case ProductFamily::downup_nn: {
      require(n % 2 == 0, "n even");
      return normalize_all(NormalizeFamily::downup_2n, n,
                           downup_nn(n, params[0], params[1], params[2], params[3]));
    }
    case ProductFamily::downup_n_2n: {
      require(n % 2 == 1, "n odd");
      const int i = params[0], j = params[1], p = params[2], q = params[3];
      return normalize_all(NormalizeFamily::downup_3n, n,
                           detail::downup_n_2n_block(odd_block(j, q), n, i, j, p, q));
    }
    case ProductFamily::downup_2n_n: {
      require(n % 2 == 1, "n odd");
      const int i = params[0], j = params[1], p = params[2], q = params[3];
      // O(2n-2p-q,p,q) O(n-2i-j,i,j) = O(n-2i-j,i,j) O(shifted degree-2n factor)
      int p2 = p, q2 = q;
      if (q % 2 == 1) {
        p2 = p + 1;
        q2 = q - 1;
      } else if (p != 0) {
        p2 = p - 1;
        q2 = q + 1;
      }
      return normalize_all(NormalizeFamily::downup_3n, n,
                           detail::downup_n_2n_block(odd_block(j, q2), n, i, j, p2, q2));
    }
  }
  throw FormulaError("unknown product family");
}

// --------------------------------------------------------- kernel vectors --

std::vector<CycloNum> kernel_vector(KernelFamily family, int n) {
  std::vector<CycloNum> x;
  switch (family) {
    case KernelFamily::skew_even: {
      require(n % 4 == 0, "n = 0 mod 4");
      // indexed by O(2n-p, p), p = 0..n
      for (int p = 0; p <= n; ++p) {
        const int e = (p + 1) / 2;
        x.push_back(signed_root(n, e, e));
      }
      break;
    }
    case KernelFamily::skew_odd: {
      require(n % 2 == 1, "n odd");
      const long long m = (3LL * n - 1) / 2;
      for (long long k = 0; k <= m; ++k) {
        const long long t = m - k;
        x.push_back(signed_root(n, t * (t + 1) / 2, (n - 1) / 2 * t));
      }
      break;
    }
    case KernelFamily::downup_even:
    case KernelFamily::downup_odd: {
      const bool even = family == KernelFamily::downup_even;
      require(even ? n % 2 == 0 : n % 2 == 1, even ? "n even" : "n odd");
      const int d = even ? 2 * n : 3 * n;
      const NormalizeFamily fam = even ? NormalizeFamily::downup_2n : NormalizeFamily::downup_3n;
      for (int l = 0; 2 * l <= d; ++l) {
        for (int k = 0; 2 * l + k <= d; ++k) {
          const OrbitIndex idx = triple(d - 2 * l - k, l, k);
          if (!is_canonical(fam, n, idx)) continue;
          if (even) {
            const int f = n - l - k;  // >= 0 on canonical triples
            x.push_back(root_power(n, -(f / 2)));
          } else {
            const long long s = l + k;
            const long long sign = (s * (s + n) + static_cast<long long>(l) * (l + 1)) / 2;
            const long long e = (static_cast<long long>(n) + 1) * (n + 1 + 2 * s) / 4;
            x.push_back(signed_root(n, sign, e));
          }
        }
      }
      break;
    }
  }
  return x;
}

// -------------------------------------------------------- canonical bases --

std::vector<std::pair<OrbitIndex, NcPolynomial>> canonical_basis(const GroupAction& act, int degree) {
  act.require_automorphism();
  const int n = act.n();
  std::vector<std::pair<OrbitIndex, NcPolynomial>> out;
  if (degree < 0 || degree % n != 0) return out;
  const int k = degree / n;
  if (act.spec().kind == AlgebraKind::skew) {
    for (int i = 0; 2 * i <= degree; ++i) {
      const OrbitIndex idx = skew_index(n, k, i);
      NcPolynomial s = act.orbit_sum(idx);
      if (!s.is_zero()) out.emplace_back(idx, std::move(s));
    }
    return out;
  }
  std::optional<NormalizeFamily> fam;
  if (k == 2 && n % 2 == 0) fam = NormalizeFamily::downup_2n;
  if (k == 3 && n % 2 == 1) fam = NormalizeFamily::downup_3n;
  if (!fam) return act.orbit_sum_basis(degree);
  for (int l = 0; 2 * l <= degree; ++l) {
    for (int c = 0; 2 * l + c <= degree; ++c) {
      const OrbitIndex idx = triple(degree - 2 * l - c, l, c);
      if (!is_canonical(*fam, n, idx)) continue;
      NcPolynomial s = act.orbit_sum(idx);
      if (!s.is_zero()) out.emplace_back(idx, std::move(s));
    }
  }
  return out;
}

NcPolynomial expand(const GroupAction& act, const SymbolicCombination& c) {
  NcPolynomial out = act.algebra().zero();
  for (const auto& t : c.terms) out += t.coeff * act.orbit_sum(t.index);
  return out;
}

// ----------------------------------------------------------- verification --

namespace {

const std::vector<std::pair<VerifyTarget, const char*>>& target_names() {
  static const std::vector<std::pair<VerifyTarget, const char*>> names = {
      {VerifyTarget::prop_invar, "prop-invar"},
      {VerifyTarget::eq_4n, "eq-4n"},
      {VerifyTarget::lemma_multi, "lemma-multi"},
      {VerifyTarget::prop_even_products, "prop-even-products"},
      {VerifyTarget::prop_odd_products, "prop-odd-products"},
      {VerifyTarget::normalize_2n, "normalize-2n"},
      {VerifyTarget::normalize_3n, "normalize-3n"},
      {VerifyTarget::kernel_2n, "kernel-2n"},
      {VerifyTarget::kernel_3n, "kernel-3n"},
  };
  return names;
}

std::string symbolic_string(const SymbolicCombination& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  for (const auto& t : c.terms) {
    if (!out.empty()) out += " + ";
    out += "(" + t.coeff.to_string() + ")*O" + tuple_string({t.index.a, t.index.b, t.index.c});
  }
  return out;
}

// Shared loop for the product identities: engine product vs closed form.
void check_product(const GroupAction& act, ProductFamily family, const std::vector<int>& params,
                   VerificationReport& report) {
  ++report.checked;
  const int n = act.n();
  const Algebra& alg = act.algebra();
  const auto [f1, f2] = product_factors(family, n, params);
  const NcPolynomial engine = alg.multiply(act.orbit_sum(f1), act.orbit_sum(f2));
  std::string closed;
  try {
    const SymbolicCombination sym = closed_form_product(family, n, params);
    if (expand(act, sym) == engine) return;
    closed = symbolic_string(sym) + " = " + expand(act, sym).to_string();
  } catch (const FormulaError& e) {
    closed = std::string("error: ") + e.what();
  }
  report.failures.push_back({params, closed, engine.to_string()});
}

AlgebraSpec a01(int n) { return AlgebraSpec::downup(0, 1, n); }

}  // namespace

std::string to_string(VerifyTarget t) {
  for (const auto& [v, name] : target_names())
    if (v == t) return name;
  return "?";
}

VerifyTarget parse_target(const std::string& name) {
  for (const auto& [v, s] : target_names())
    if (name == s) return v;
  throw std::invalid_argument("unknown verification target '" + name + "'");
}

const std::vector<VerifyTarget>& all_targets() {
  static const std::vector<VerifyTarget> all = [] {
    std::vector<VerifyTarget> v;
    for (const auto& [t, s] : target_names()) v.push_back(t);
    return v;
  }();
  return all;
}

VerificationReport verify_identity(VerifyTarget target, const AlgebraSpec& spec, unsigned threads) {
  spec.validate();
  const int n = spec.n;
  VerificationReport report;
  report.target = to_string(target);
  report.n = n;

  const bool skew_target = target == VerifyTarget::prop_invar || target == VerifyTarget::eq_4n ||
                           target == VerifyTarget::lemma_multi;
  const bool kernel_target = target == VerifyTarget::kernel_2n || target == VerifyTarget::kernel_3n;
  if (skew_target) require(spec.kind == AlgebraKind::skew, report.target + " is an identity in the skew ring");
  if (!skew_target && !kernel_target)
    require(spec == a01(n), report.target + " is an identity in A(0,1)");
  if (kernel_target && spec.kind == AlgebraKind::downup)
    require(spec == a01(n), "kernel certificates are stated for A(0,1)");

  const GroupAction act = GroupAction::standard(spec);
  act.require_automorphism();
  const Algebra& alg = act.algebra();

  switch (target) {
    case VerifyTarget::prop_invar: {
      // u^(kn-i) v^i + (-1)^((kn-i)i) lambda^i u^i v^(kn-i), built by hand.
      for (int k = 1; k <= 4; ++k) {
        for (int i = 0; i <= k * n; ++i) {
          ++report.checked;
          const int a = k * n - i;
          NcPolynomial closed = alg.monomial(Monomial{a, i, 0});
          closed.add_term(Monomial{i, a, 0}, signed_root(n, static_cast<long long>(a) * i, i));
          const NcPolynomial engine = act.orbit_sum(Monomial{a, i, 0});
          if (!(closed == engine)) report.failures.push_back({{k, i}, closed.to_string(), engine.to_string()});
        }
      }
      break;
    }
    case VerifyTarget::eq_4n: {
      require(n % 2 == 0, "n even");
      for (int i = 0; 2 * i < n; ++i)
        for (int j = 0; 2 * j < n; ++j) check_product(act, ProductFamily::skew_nn, {i, j}, report);
      // commutation of degree-n orbit sums
      for (int i = 0; 2 * i < n; ++i) {
        for (int j = i + 1; 2 * j < n; ++j) {
          ++report.checked;
          const NcPolynomial x = act.orbit_sum(skew_index(n, 1, i));
          const NcPolynomial y = act.orbit_sum(skew_index(n, 1, j));
          const NcPolynomial xy = alg.multiply(x, y), yx = alg.multiply(y, x);
          if (!(xy == yx)) report.failures.push_back({{i, j, -1}, xy.to_string(), yx.to_string()});
        }
      }
      break;
    }
    case VerifyTarget::lemma_multi: {
      require(n % 2 == 1, "n odd");
      for (int i = 0; i <= n; ++i) {
        for (int j = 0; 2 * j <= n - 1; ++j) {
          check_product(act, ProductFamily::skew_2n_n_left, {i, j}, report);
          check_product(act, ProductFamily::skew_2n_n_right, {i, j}, report);
        }
      }
      break;
    }
    case VerifyTarget::prop_even_products: {
      require(n % 2 == 0, "n even");
      for (int i = 0; 2 * i <= n; ++i)
        for (int j = 0; 2 * i + j <= n; ++j)
          for (int p = 0; 2 * p <= n; ++p)
            for (int q = 0; 2 * p + q <= n; ++q) check_product(act, ProductFamily::downup_nn, {i, j, p, q}, report);
      break;
    }
    case VerifyTarget::prop_odd_products: {
      require(n % 2 == 1, "n odd");
      for (int i = 0; 2 * i <= n; ++i)
        for (int j = 0; 2 * i + j <= n; ++j)
          for (int p = 0; 2 * p <= 2 * n; ++p)
            for (int q = 0; 2 * p + q <= 2 * n; ++q) {
              check_product(act, ProductFamily::downup_n_2n, {i, j, p, q}, report);
              check_product(act, ProductFamily::downup_2n_n, {i, j, p, q}, report);
            }
      break;
    }
    case VerifyTarget::normalize_2n:
    case VerifyTarget::normalize_3n: {
      const bool two = target == VerifyTarget::normalize_2n;
      require(two ? n % 2 == 0 : n % 2 == 1, two ? "n even" : "n odd");
      const int d = two ? 2 * n : 3 * n;
      const NormalizeFamily fam = two ? NormalizeFamily::downup_2n : NormalizeFamily::downup_3n;
      for (int l = 0; 2 * l <= d; ++l) {
        for (int k = 0; 2 * l + k <= d; ++k) {
          ++report.checked;
          const OrbitIndex raw = triple(d - 2 * l - k, l, k);
          const NcPolynomial engine = act.orbit_sum(raw);
          const auto [c, idx] = normalize_index(fam, n, raw);
          const NcPolynomial closed = c * act.orbit_sum(idx);
          std::string problem;
          if (!(closed == engine)) problem = closed.to_string();
          else if (!is_canonical(fam, n, idx)) problem = "result index is not canonical";
          else if (!(normalize_index(fam, n, idx).second == idx)) problem = "normalization is not idempotent";
          if (!problem.empty()) report.failures.push_back({{raw.a, raw.b, raw.c}, problem, engine.to_string()});
        }
      }
      break;
    }
    case VerifyTarget::kernel_2n:
    case VerifyTarget::kernel_3n: {
      const bool two = target == VerifyTarget::kernel_2n;
      const bool skew = spec.kind == AlgebraKind::skew;
      KernelFamily fam;
      if (two) {
        require(skew ? n % 4 == 0 : n % 2 == 0, skew ? "n = 0 mod 4" : "n even");
        fam = skew ? KernelFamily::skew_even : KernelFamily::downup_even;
      } else {
        require(n % 2 == 1, "n odd");
        fam = skew ? KernelFamily::skew_odd : KernelFamily::downup_odd;
      }
      const int d = two ? 2 * n : 3 * n;
      const auto basis = canonical_basis(act, d);
      std::vector<NcPolynomial> polys;
      for (const auto& [idx, p] : basis) polys.push_back(p);
      const std::vector<CycloNum> x = kernel_vector(fam, n);
      report.dimension = polys.size();
      if (x.size() != polys.size()) {
        report.failures.push_back({{static_cast<int>(x.size()), static_cast<int>(polys.size())},
                                   "kernel vector length " + std::to_string(x.size()),
                                   "basis dimension " + std::to_string(polys.size())});
        break;
      }
      const ProductMatrix pm = product_matrix(act, d, polys, threads);
      report.rank = rank(pm.rows);
      bool nonzero = false;
      for (const auto& v : x) nonzero = nonzero || !v.is_zero();
      if (!nonzero) report.failures.push_back({{}, "kernel vector is zero", ""});
      for (std::size_t r = 0; r < pm.rows.size(); ++r) {
        ++report.checked;
        if (kernel_annihilation(Matrix{pm.rows[r]}, x)) continue;
        const auto& [f1, f2] = pm.factors[r];
        std::string row;
        for (const auto& v : pm.rows[r]) row += (row.empty() ? "" : ", ") + v.to_string();
        report.failures.push_back({{f1.degree, f1.monomial.a, f1.monomial.b, f1.monomial.c, f2.degree,
                                    f2.monomial.a, f2.monomial.b, f2.monomial.c},
                                   "row [" + row + "] not annihilated", ""});
      }
      if (*report.rank >= *report.dimension)
        report.failures.push_back({{}, "rank " + std::to_string(*report.rank),
                                   "not below dimension " + std::to_string(*report.dimension)});
      break;
    }
  }
  return report;
}

}  // namespace ncinv
