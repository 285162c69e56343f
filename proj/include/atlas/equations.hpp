#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/modular.hpp"

namespace atlas {

enum class RootTag { Zero, One, MinusOne, I, MinusI, OmegaCubeRoot, OmegaSquared, Parameter };

std::string_view to_string(RootTag t) noexcept;  // "zero", "one", ...
std::optional<RootTag> parse_root_tag(std::string_view s) noexcept;

/// A branch point on the affine line, kept symbolic. w = exp(2 pi i / 3).
struct SymbolicRoot {
  RootTag tag = RootTag::Zero;
  std::string name;                           // Parameter only
  std::optional<std::complex<double>> value;  // Parameter only

  static SymbolicRoot of(RootTag t) { return SymbolicRoot{t, {}, {}}; }
  static SymbolicRoot parameter(std::string name, std::optional<std::complex<double>> value);

  std::complex<double> evaluate() const;
  /// "0", "1", "-1", "i", "-i", "w", "w^2" or the parameter name.
  std::string text() const;

  friend bool operator==(const SymbolicRoot&, const SymbolicRoot&) = default;
};

enum class FactorKind { Linear, Binomial };

/// Linear: (x - root)^multiplicity.
/// Binomial: (x^degree + constant)^multiplicity; `constant_text` is the
/// display form including its sign, e.g. "-32" or "+1/32".
struct Factor {
  FactorKind kind = FactorKind::Linear;
  SymbolicRoot root;
  int degree = 1;
  std::complex<double> constant;
  std::string constant_text;
  int multiplicity = 1;

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Local data at one branch point: multiplicity m and rotation number sigma
/// with sigma * m = 1 mod the exponent.
struct RotationDatum {
  std::string point;
  int multiplicity = 1;
  int rotation = 1;

  friend bool operator==(const RotationDatum&, const RotationDatum&) = default;
};

/// y^exponent = prod of factors.
struct SuperellipticEquation {
  std::string family;
  int exponent = 2;
  std::vector<Factor> factors;
  int genus = 0;
  std::vector<RotationDatum> rotation;
  std::vector<std::string> generators;

  friend bool operator==(const SuperellipticEquation&, const SuperellipticEquation&) = default;
};

/// y^p = x (x-1)^k, genus (p-1)/2, rotation numbers {1, k^-1, (p-1-k)^-1}.
SuperellipticEquation lefschetz_equation(PrimeModulus p, int k);

/// y^2 = (x^p - a^p)(x^p + 1/a^p), genus p-1.
SuperellipticEquation hyperelliptic_equation(PrimeModulus p, std::complex<double> a);

/// y^p = (x-1)(x-w)^n (x-w^2)^m with p not dividing n+m+1.
SuperellipticEquation equilateral_equation(PrimeModulus p, int n, int m);

/// y^p = (x-1)(x-i)^a (x+1)^c (x+i)^b, c = 2p-1-a-b reduced into {1,...,p-1}.
SuperellipticEquation square_equation(PrimeModulus p, int a, int b);

/// Riemann-Hurwitz genus of the cyclic cover. Counts a branch point at
/// infinity when the total degree is not divisible by the exponent.
int genus_of(const SuperellipticEquation& eq);

bool rotation_multiplicity_check(int sigma, int m, PrimeModulus p);

/// Multiplicity sum including binomial degrees.
long long total_degree(const SuperellipticEquation& eq);

enum class Notation { Ascii, Unicode };

/// "y^7=x(x-1)^2" (Ascii) or "y⁷=x(x−1)²" (Unicode). Conjugate pairs with equal
/// multiplicity are merged: (x-i)(x+i) -> (x^2+1), (x-1)(x+1) -> (x^2-1),
/// (x-w)(x-w^2) -> (x^2+x+1), and (x-1)(x^2+x+1) -> x^3-1.
std::string render(const SuperellipticEquation& eq, Notation notation = Notation::Ascii);

/// Caret exponents to superscripts and '-' to U+2212.
std::string to_unicode(std::string_view ascii);

/// Formats a complex number compactly: "2", "-1.5", "i", "(1+2i)".
std::string format_complex(std::complex<double> z);

}  // namespace atlas
