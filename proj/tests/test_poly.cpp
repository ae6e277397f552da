#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>

#include "sepack/poly.hpp"

using namespace sepack;

namespace {

long long eval(const FactoredPoly& p, const std::vector<long long>& x) {
  long long out = 1;
  for (auto [pos, neg] : p.factors) out *= x[pos - 1] - x[neg - 1];
  return out;
}

// Full expansion by brute force; only for small factor counts.
std::map<std::vector<int>, long long> expand(const FactoredPoly& p) {
  std::map<std::vector<int>, long long> terms;
  std::vector<int> expo(p.var_count, 0);
  auto dfs = [&](auto&& self, size_t i, long long sign) -> void {
    if (i == p.factors.size()) {
      terms[expo] += sign;
      return;
    }
    auto [pos, neg] = p.factors[i];
    ++expo[pos - 1];
    self(self, i + 1, sign);
    --expo[pos - 1];
    ++expo[neg - 1];
    self(self, i + 1, -sign);
    --expo[neg - 1];
  };
  dfs(dfs, 0, 1);
  return terms;
}

}  // namespace

TEST_CASE("coefficients agree with full expansion on small polynomials") {
  for (auto [kind, k, n] : {std::tuple{PolyKind::kPath, 1, 6}, {PolyKind::kPath, 2, 7},
                            {PolyKind::kCycle, 0, 6}, {PolyKind::kChordedCycle, 0, 6},
                            {PolyKind::kCycleTail, 0, 7}}) {
    FactoredPoly p = build_poly(kind, k, n);
    auto terms = expand(p);
    for (const auto& [expo, value] : terms) {
      Monomial m{expo};
      CHECK(coeff(p, m) == value);
    }
    // A couple of absent monomials.
    Monomial zero;
    zero.exponents.assign(p.var_count, 0);
    zero.exponents[0] = static_cast<int>(p.factors.size());
    if (!terms.count(zero.exponents)) CHECK(coeff(p, zero) == 0);
  }
}

TEST_CASE("degree mismatch short-circuits to zero") {
  FactoredPoly p = build_poly(PolyKind::kCycle, 0, 6);
  Monomial m{{1, 1, 1, 1, 1, 1}};  // degree 6, but C_6 has 12 factors
  CHECK(coeff(p, m) == 0);
}

TEST_CASE("empty path product is the constant 1") {
  FactoredPoly p = build_poly(PolyKind::kPath, 4, 4);
  CHECK(p.factors.empty());
  Monomial one;
  one.exponents.assign(4, 0);
  CHECK(coeff(p, one) == 1);
}

TEST_CASE("cycle polynomial factors as tail times path") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> val(-20, 20);
  for (int n = 6; n <= 10; ++n) {
    FactoredPoly c = build_poly(PolyKind::kCycle, 0, n);
    FactoredPoly q = build_poly(PolyKind::kCycleTail, 0, n);
    FactoredPoly p = build_poly(PolyKind::kPath, 1, n - 2);
    p.var_count = n;  // same variable space
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> x(n);
      for (auto& xi : x) xi = val(rng);
      CHECK(eval(c, x) == eval(q, x) * eval(p, x));
    }
  }
}

TEST_CASE("chorded cycle polynomial is the cycle times the chord factor") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long long> val(-20, 20);
  for (int n = 5; n <= 9; ++n) {
    FactoredPoly c = build_poly(PolyKind::kCycle, 0, n);
    FactoredPoly d = build_poly(PolyKind::kChordedCycle, 0, n);
    CHECK(d.factors.size() == c.factors.size() + 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<long long> x(n);
      for (auto& xi : x) xi = val(rng);
      CHECK(eval(d, x) == eval(c, x) * (x[1] - x[n - 2]));
    }
  }
}

TEST_CASE("closed forms match direct extraction for all four patterns") {
  for (PathPattern pattern : {PathPattern::kEndPair, PathPattern::kEndSquare,
                              PathPattern::kStartPair, PathPattern::kStartSquare})
    for (int k = 1; k <= 3; ++k)
      for (int l = k + 2; l <= k + 12; ++l) {
        FactoredPoly p = build_poly(PolyKind::kPath, k, l);
        Monomial m = path_pattern_monomial(pattern, k, l);
        CHECK(coeff(p, m) == path_coeff_closed_form(pattern, k, l));
      }
}

TEST_CASE("end-pair coefficients follow the order-two recurrence") {
  // a_l = closed form at k=1; the recurrence holds from l=5 on.
  auto a = [](int l) { return path_coeff_closed_form(PathPattern::kEndPair, 1, l); };
  for (int l = 5; l <= 40; ++l) CHECK(a(l) == -a(l - 1) - a(l - 2));
  CHECK(a(3) == 0);
  CHECK(a(4) == -1);
  CHECK(a(5) == 1);
}

TEST_CASE("chord target monomial shape") {
  Monomial m = chord_target_monomial(12);
  CHECK(m.degree() == 25);  // matches the 2n+1 factors of D_12
  CHECK(m.exponent(1) == 2);
  CHECK(m.exponent(2) == 3);
  CHECK(m.exponent(5) == 4);
  CHECK(m.exponent(7) == 1);
  CHECK(m.exponent(10) == 2);
  CHECK(m.exponent(11) == 3);
  CHECK(m.exponent(12) == 1);
  CHECK_THROWS(chord_target_monomial(9));
}

TEST_CASE("chorded-cycle coefficient split") {
  for (int n = 10; n <= 14; ++n) {
    ChordCoeffs c = chord_cycle_coeffs(n);
    CHECK(c.alpha == 0);
    // With alpha vanishing the direct coefficient is determined by beta alone.
    CHECK(c.d == c.alpha + c.beta);
  }
  CHECK(chord_cycle_coeffs(12).beta == 1);
  CHECK(chord_cycle_coeffs(13).beta == -2);
  CHECK(chord_cycle_coeffs(14).beta == 1);
}

TEST_CASE("beta decomposition sums to beta with two vanishing parts") {
  for (int n = 12; n <= 14; ++n) {
    BetaDecomposition d = beta_decomposition(n);
    CHECK(d.beta == chord_cycle_coeffs(n).beta);
    CHECK(d.parts[4] == 0);
    CHECK(d.parts[5] == 0);
  }
}

TEST_CASE("four-cycle link polynomial") {
  FactoredPoly f = build_poly(PolyKind::kFourCycleLink, 0, 0);
  CHECK(f.factors.size() == 13);
  CHECK(f.var_count == 6);
  // The printed certificate monomial has coefficient zero; the corrected one
  // within the same list sizes does not.
  CHECK(coeff(f, Monomial{{2, 4, 2, 2, 3, 0}}) == 0);
  CHECK(coeff(f, Monomial{{2, 4, 1, 1, 3, 2}}) == 1);
  std::vector<int> sizes{3, 5, 3, 3, 5, 3};
  CHECK(!choosability_certificate(f, sizes, Monomial{{2, 4, 2, 2, 3, 0}}));
  CHECK(choosability_certificate(f, sizes, Monomial{{2, 4, 1, 1, 3, 2}}));
  auto found = find_certificate(f, sizes);
  REQUIRE(found.has_value());
  CHECK(coeff(f, *found) != 0);
}

TEST_CASE("certificate search respects list sizes") {
  FactoredPoly p = build_poly(PolyKind::kPath, 1, 4);
  // Degree 5 with caps (1,2,2,1): possible; caps (1,1,1,1): degree can't reach 5.
  CHECK(find_certificate(p, {2, 3, 3, 2}).has_value());
  CHECK(!find_certificate(p, {2, 2, 2, 2}).has_value());
  auto m = find_certificate(p, {2, 3, 3, 2});
  CHECK(choosability_certificate(p, {2, 3, 3, 2}, *m));
}

TEST_CASE("monomial helpers") {
  Monomial m{{0, 2, 1}};
  CHECK(m.degree() == 3);
  CHECK(m.exponent(2) == 2);
  CHECK(m.exponent(9) == 0);
  CHECK(m.to_string() == "X2^2X3");
  CHECK(Monomial{}.to_string() == "1");
  CHECK_THROWS(m.exponent(0));
}
