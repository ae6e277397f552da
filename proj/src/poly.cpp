#include "sepack/poly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sepack {

int Monomial::degree() const { return std::accumulate(exponents.begin(), exponents.end(), 0); }

int Monomial::exponent(int var) const {
  if (var < 1) throw std::invalid_argument("variables are 1-based");
  if (var > static_cast<int>(exponents.size())) return 0;
  return exponents[var - 1];
}

std::string Monomial::to_string() const {
  std::ostringstream out;
  bool any = false;
  for (size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] == 0) continue;
    any = true;
    out << 'X' << (i + 1);
    if (exponents[i] > 1) out << '^' << exponents[i];
  }
  return any ? out.str() : "1";
}

FactoredPoly build_poly(PolyKind kind, int k, int n) {
  FactoredPoly p;
  switch (kind) {
    case PolyKind::kPath: {
      if (k < 1 || n < k) throw std::invalid_argument("path polynomial needs 1 <= k <= l");
      p.var_count = n;
      if (n > k) {
        p.factors.push_back({k + 1, k});
        for (int i = k + 2; i <= n; ++i) {
          p.factors.push_back({i, i - 2});
          p.factors.push_back({i, i - 1});
        }
      }
      return p;
    }
    case PolyKind::kCycle:
    case PolyKind::kChordedCycle: {
      if (n < 5) throw std::invalid_argument("cycle polynomial needs n >= 5");
      p.var_count = n;
      p.factors = {{1, n - 1}, {1, n}, {2, n}, {2, 1}};
      for (int i = 3; i <= n; ++i) {
        p.factors.push_back({i, i - 2});
        p.factors.push_back({i, i - 1});
      }
      if (kind == PolyKind::kChordedCycle) p.factors.push_back({2, n - 1});
      return p;
    }
    case PolyKind::kCycleTail: {
      if (n < 5) throw std::invalid_argument("tail polynomial needs n >= 5");
      p.var_count = n;
      p.factors = {{n - 1, n - 2}, {n - 1, n - 3}, {n, n - 1}, {n, n - 2},
                   {1, n - 1},     {1, n},         {2, n}};
      return p;
    }
    case PolyKind::kFourCycleLink: {
      p.var_count = 6;
      p.factors = {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5},
                   {2, 6}, {3, 5}, {3, 6}, {4, 6}, {4, 5}, {5, 6}};
      return p;
    }
  }
  throw std::invalid_argument("unknown polynomial kind");
}

namespace {

struct CoeffWalker {
  const std::vector<LinearFactor>& factors;
  std::vector<int> need;  // remaining exponent per variable (1-based)
  std::vector<int> rem;   // factors not yet passed that mention the variable
  long long total = 0;

  void dfs(size_t i, int sign) {
    if (i == factors.size()) {
      total += sign;
      return;
    }
    auto [p, q] = factors[i];
    --rem[p];
    --rem[q];
    // Take X_p (+) or X_q (-); a variable may only be taken while needed, and
    // every variable must remain satisfiable by the factors still ahead.
    if (need[p] > 0 && need[p] - 1 <= rem[p] && need[q] <= rem[q]) {
      --need[p];
      dfs(i + 1, sign);
      ++need[p];
    }
    if (need[q] > 0 && need[q] - 1 <= rem[q] && need[p] <= rem[p]) {
      --need[q];
      dfs(i + 1, -sign);
      ++need[q];
    }
    ++rem[p];
    ++rem[q];
  }
};

}  // namespace

long long coeff(const FactoredPoly& poly, const Monomial& m) {
  for (size_t i = poly.var_count; i < m.exponents.size(); ++i)
    if (m.exponents[i] != 0) throw std::invalid_argument("monomial variable beyond polynomial");
  if (m.degree() != static_cast<int>(poly.factors.size())) return 0;
  if (poly.factors.empty()) return 1;  // the empty product
  CoeffWalker walker{poly.factors, std::vector<int>(poly.var_count + 1, 0),
                     std::vector<int>(poly.var_count + 1, 0)};
  for (int v = 1; v <= poly.var_count; ++v) walker.need[v] = m.exponent(v);
  for (auto [p, q] : poly.factors) {
    ++walker.rem[p];
    ++walker.rem[q];
  }
  for (int v = 1; v <= poly.var_count; ++v)
    if (walker.need[v] > walker.rem[v]) return 0;
  walker.dfs(0, 1);
  return walker.total;
}

Monomial path_pattern_monomial(PathPattern pattern, int k, int l) {
  if (k < 1 || l < k + 2) throw std::invalid_argument("pattern monomials need k+2 <= l");
  Monomial m;
  m.exponents.assign(l, 0);
  auto set = [&](int var, int e) { m.exponents[var - 1] = e; };
  switch (pattern) {
    case PathPattern::kEndPair:
      set(k, 1);
      for (int i = k + 1; i <= l - 2; ++i) set(i, 2);
      set(l - 1, 1);
      set(l, 1);
      break;
    case PathPattern::kEndSquare:
      set(k, 1);
      for (int i = k + 1; i <= l - 1; ++i) set(i, 2);
      break;
    case PathPattern::kStartPair:
      set(k, 1);
      set(k + 1, 1);
      for (int i = k + 2; i <= l - 1; ++i) set(i, 2);
      set(l, 1);
      break;
    case PathPattern::kStartSquare:
      for (int i = k + 1; i <= l - 1; ++i) set(i, 2);
      set(l, 1);
      break;
  }
  return m;
}

int path_coeff_closed_form(PathPattern pattern, int k, int l) {
  if (k < 1 || l < k + 2) throw std::invalid_argument("closed form needs k+2 <= l");
  int r = (l - k) % 3;
  static constexpr int kEndPairTable[3] = {-1, 1, 0};
  static constexpr int kEndSquareTable[3] = {0, -1, 1};
  switch (pattern) {
    case PathPattern::kEndPair: return kEndPairTable[r];
    case PathPattern::kEndSquare: return kEndSquareTable[r];
    case PathPattern::kStartPair: return -kEndPairTable[r];
    case PathPattern::kStartSquare: return -kEndSquareTable[r];
  }
  throw std::invalid_argument("unknown pattern");
}

Monomial chord_target_monomial(int n) {
  if (n < 10) throw std::invalid_argument("target monomial needs n >= 10");
  Monomial m;
  m.exponents.assign(n, 0);
  auto set = [&](int var, int e) { m.exponents[var - 1] = e; };
  set(1, 2);
  set(2, 3);
  set(3, 1);
  set(4, 2);
  set(5, 4);
  set(6, 2);
  set(7, 1);
  for (int i = 8; i <= n - 2; ++i) set(i, 2);
  set(n - 1, 3);
  set(n, 1);
  return m;
}

ChordCoeffs chord_cycle_coeffs(int n) {
  Monomial target = chord_target_monomial(n);
  FactoredPoly cn = build_poly(PolyKind::kCycle, 0, n);
  FactoredPoly dn = build_poly(PolyKind::kChordedCycle, 0, n);

  Monomial ma = target;
  ma.exponents[1] = 2;  // X_2^2 instead of X_2^3
  Monomial mb = target;
  mb.exponents[n - 2] = 2;  // X_{n-1}^2 instead of X_{n-1}^3

  ChordCoeffs out;
  out.alpha = coeff(cn, ma);
  out.beta = -coeff(cn, mb);
  out.d = coeff(dn, target);
  return out;
}

BetaDecomposition beta_decomposition(int n) {
  if (n < 12) throw std::invalid_argument("decomposition needs n >= 12");
  FactoredPoly path = build_poly(PolyKind::kPath, 1, n - 2);

  // The six monomials of P_{1,n-2} paired with the X_{n-1}^2 X_n part of the
  // tail polynomial; each pairing carries tail coefficient 1. The common core
  // is X_3 X_4^2 X_5^4 X_6^2 X_7 X_8^2 .. X_{n-4}^2 with per-part adjustments
  // at X_1, X_2, X_{n-3}, X_{n-2}.
  auto base = [&]() {
    Monomial m;
    m.exponents.assign(n - 2, 0);
    m.exponents[2] = 1;  // X_3
    m.exponents[3] = 2;  // X_4
    m.exponents[4] = 4;  // X_5
    m.exponents[5] = 2;  // X_6
    m.exponents[6] = 1;  // X_7
    for (int i = 8; i <= n - 4; ++i) m.exponents[i - 1] = 2;
    return m;
  };
  auto part = [&](int e1, int e2, int e3, int e4) {
    Monomial m = base();
    m.exponents[0] = e1;      // X_1
    m.exponents[1] = e2;      // X_2
    m.exponents[n - 4] = e3;  // X_{n-3}
    m.exponents[n - 3] = e4;  // X_{n-2}
    return coeff(path, m);
  };

  BetaDecomposition out;
  out.parts[0] = part(0, 2, 1, 2);
  out.parts[1] = part(0, 3, 1, 1);
  out.parts[2] = part(1, 2, 1, 1);
  out.parts[3] = part(0, 3, 2, 0);
  out.parts[4] = part(1, 3, 1, 0);
  out.parts[5] = part(2, 2, 1, 0);
  out.beta = -std::accumulate(out.parts.begin(), out.parts.end(), 0ll);
  return out;
}

bool choosability_certificate(const FactoredPoly& poly, const std::vector<int>& list_sizes,
                              const Monomial& m) {
  if (static_cast<int>(list_sizes.size()) != poly.var_count)
    throw std::invalid_argument("list size count does not match variables");
  if (m.degree() != static_cast<int>(poly.factors.size())) return false;
  for (int v = 1; v <= poly.var_count; ++v)
    if (m.exponent(v) >= list_sizes[v - 1]) return false;
  return coeff(poly, m) != 0;
}

namespace {

bool find_certificate_dfs(const FactoredPoly& poly, const std::vector<int>& caps, int var,
                          int remaining, Monomial& m, std::optional<Monomial>& found) {
  if (var > poly.var_count) {
    if (remaining != 0) return false;
    if (coeff(poly, m) != 0) {
      found = m;
      return true;
    }
    return false;
  }
  int suffix_cap = 0;
  for (int v = var; v <= poly.var_count; ++v) suffix_cap += caps[v - 1];
  if (suffix_cap < remaining) return false;
  for (int e = std::min(caps[var - 1], remaining); e >= 0; --e) {
    m.exponents[var - 1] = e;
    if (find_certificate_dfs(poly, caps, var + 1, remaining - e, m, found)) return true;
  }
  m.exponents[var - 1] = 0;
  return false;
}

}  // namespace

std::optional<Monomial> find_certificate(const FactoredPoly& poly,
                                         const std::vector<int>& list_sizes) {
  if (static_cast<int>(list_sizes.size()) != poly.var_count)
    throw std::invalid_argument("list size count does not match variables");
  std::vector<int> caps(list_sizes.size());
  for (size_t i = 0; i < list_sizes.size(); ++i) caps[i] = std::max(0, list_sizes[i] - 1);
  Monomial m;
  m.exponents.assign(poly.var_count, 0);
  std::optional<Monomial> found;
  find_certificate_dfs(poly, caps, 1, static_cast<int>(poly.factors.size()), m, found);
  return found;
}

}  // namespace sepack
