#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/gimel.hpp"
#include "atlas/modular.hpp"

namespace atlas {

// Brute-force recounts. The orbit censuses use only residue arithmetic and a
// private copy of the twelve gluing maps; they never call the classification
// code or its closed forms.

inline constexpr int kDefaultOracleBound = 101;

/// Orbits of Sigma_p x {1,2,3} under the twelve-map closure. Equilateral
/// forgets subindices; square also joins (i,j)_1 with (j,i)_1.
std::int64_t lambda_orbit_census(PrimeModulus p, TilingFlavor flavor, int bound = kDefaultOracleBound);

enum class PermutationSymmetry {
  AllPermutations,  // S_n
  Alternating,      // A_n
  KleinFour,        // n = 4: {id, (12)(34), (13)(24), (14)(23)}
  SquareDihedral,   // n = 4: <(1234), (13)>
};

std::string_view to_string(PermutationSymmetry s) noexcept;

/// Orbits of {(a_1..a_n) : a_t in 1..p-1, sum = 0 mod p} under simultaneous
/// scaling by units and the permutation group. n is 3 or 4.
std::int64_t tuple_orbit_census(PrimeModulus p, int n, PermutationSymmetry symmetry,
                                int bound = kDefaultOracleBound);

/// One disagreement with a published table. `row` is a domain label, "kappa"
/// or "set".
struct FixtureMismatch {
  std::string column;
  std::string row;
  std::string expected;
  std::string actual;
  bool erratum = false;  // listed in fixture_errata()
};

struct FixtureReport {
  int p = 0;
  int columns = 0;
  int cells_checked = 0;
  int labels_checked = 0;
  std::vector<FixtureMismatch> mismatches;

  /// True when every mismatch is a listed erratum.
  bool passed() const;
  std::optional<FixtureMismatch> first_failure() const;
};

/// Compares every printed column (12 cells plus the κ label) with
/// domain_assignment and kappa_case. Throws OutOfRange for primes without a
/// table.
FixtureReport kappa_fixture_check(PrimeModulus p);

/// Compares partition_omega with the printed Omega sets as sets.
FixtureReport omega_fixture_check(PrimeModulus p);

/// κ of every equilateral class from the generator families
///   (1,1) -> κ1; (1,i), (i,1) for 2 <= i <= p-4 and (i,i) for 2 <= i <= p-2,
///   i != (p-3)^-1 -> κ2; (-1,-1) -> κ3; (-1,i) for 2 <= i <= p-2 -> κ5 when
///   i^2 = -1, else κ4; no family -> κ6,
/// over a locally computed equilateral closure, compared with kappa_case.
/// Returns the heads of disagreeing or ambiguous classes.
std::vector<std::string> kappa_generator_check(PrimeModulus p, int bound = kDefaultOracleBound);

}  // namespace atlas
