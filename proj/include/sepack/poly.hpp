#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace sepack {

// Monomial over variables X_1..X_n; exponents[i] belongs to X_{i+1}.
struct Monomial {
  std::vector<int> exponents;

  int degree() const;
  int exponent(int var) const;  // var is 1-based; 0 past the end
  std::string to_string() const;
  bool operator==(const Monomial&) const = default;
};

// The linear factor (X_pos - X_neg), variables 1-based.
struct LinearFactor {
  int pos = 0;
  int neg = 0;
};

// A product of linear difference factors; the expanded polynomial is
// homogeneous of degree factors.size().
struct FactoredPoly {
  int var_count = 0;
  std::vector<LinearFactor> factors;
};

// The coloring polynomials of strongly constrained line configurations:
//   kPath          P_{k,l} = (X_{k+1}-X_k) * prod_{i=k+2}^{l} (X_i-X_{i-2})(X_i-X_{i-1})
//   kCycle         C_n, the n-cycle version (2n factors)
//   kChordedCycle  D_n = C_n * (X_2 - X_{n-1})
//   kCycleTail     Q_n, the 7-factor polynomial with C_n = Q_n * P_{1,n-2}
//   kFourCycleLink f, the 13-factor 6-variable polynomial of the 4-cycle case
enum class PolyKind { kPath, kCycle, kChordedCycle, kCycleTail, kFourCycleLink };

// k is used only by kPath (the path runs over variables k..l); the second
// parameter is l resp. n and is ignored by kFourCycleLink.
FactoredPoly build_poly(PolyKind kind, int k, int n);

// Exact coefficient of m in the expansion, by factor-tree traversal pruned to
// partial products dividing m.
long long coeff(const FactoredPoly& poly, const Monomial& m);

// The four monomial families of the path polynomial with known closed forms:
//   kEndPair     X_k X_{k+1}^2..X_{l-2}^2 X_{l-1} X_l
//   kEndSquare   X_k X_{k+1}^2..X_{l-1}^2
//   kStartPair   X_k X_{k+1} X_{k+2}^2..X_{l-1}^2 X_l   (= -kEndPair)
//   kStartSquare X_{k+1}^2..X_{l-1}^2 X_l              (= -kEndSquare)
enum class PathPattern { kEndPair, kEndSquare, kStartPair, kStartSquare };

Monomial path_pattern_monomial(PathPattern pattern, int k, int l);   // requires k+2 <= l
int path_coeff_closed_form(PathPattern pattern, int k, int l);       // residue table on (l-k) mod 3

// Coefficients around the chorded-cycle target monomial
// X_1^2 X_2^3 X_3 X_4^2 X_5^4 X_6^2 X_7 X_8^2 .. X_{n-2}^2 X_{n-1}^3 X_n:
// alpha, beta are the two C_n coefficients of its decomposition (beta carries
// the conventional minus sign); d is the coefficient of the full monomial in
// D_n, computed directly.
struct ChordCoeffs {
  long long alpha = 0;
  long long beta = 0;
  long long d = 0;
};

ChordCoeffs chord_cycle_coeffs(int n);         // n >= 10
Monomial chord_target_monomial(int n);

// beta expressed through the six path coefficients obtained by splitting
// C_n = Q_n * P_{1,n-2} on the X_{n-1}^2 X_n part of Q_n; beta = -(sum of
// parts) since each of the six split monomials appears with coefficient 1.
struct BetaDecomposition {
  std::array<long long, 6> parts{};
  long long beta = 0;
};

BetaDecomposition beta_decomposition(int n);   // n >= 12

// True iff m certifies list-colorability: coeff != 0, deg(m) == number of
// factors, and every exponent is strictly below its list size.
bool choosability_certificate(const FactoredPoly& poly, const std::vector<int>& list_sizes,
                              const Monomial& m);

// Searches for a certificate monomial under the given list sizes.
std::optional<Monomial> find_certificate(const FactoredPoly& poly,
                                         const std::vector<int>& list_sizes);

}  // namespace sepack
