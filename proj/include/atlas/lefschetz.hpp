#pragma once

#include <array>
#include <string_view>
#include <vector>

#include "atlas/modular.hpp"

namespace atlas {

// Surfaces of genus (p-1)/2 carrying an order-p automorphism with three fixed
// points. Each isomorphism class is a block of the partition of {1,...,p-2}
// cut out by the six gluing numbers of the special domains [X,Y].

enum class CardinalityCase { Two, Three, Six };

std::string_view to_string(CardinalityCase c) noexcept;

struct OmegaClass {
  PrimeModulus p;
  std::vector<int> members;  // ascending
  int canonical_k;           // smallest member
  CardinalityCase cardinality;

  friend bool operator==(const OmegaClass&, const OmegaClass&) = default;
};

/// The six special domains over three branch points, in the order the gluing
/// numbers are listed: [A,B], [A,C], [B,A], [B,C], [C,A], [C,B].
enum class LefschetzDomain { AB, AC, BA, BC, CA, CB };

inline constexpr std::array<LefschetzDomain, 6> kLefschetzDomains = {
    LefschetzDomain::AB, LefschetzDomain::AC, LefschetzDomain::BA,
    LefschetzDomain::BC, LefschetzDomain::CA, LefschetzDomain::CB};

std::string_view to_string(LefschetzDomain d) noexcept;

struct LefschetzDomainValues {
  std::array<int, 6> values;  // indexed by LefschetzDomain

  int at(LefschetzDomain d) const noexcept { return values[static_cast<std::size_t>(d)]; }
};

/// s[X,Y] for all six domains given s[A,B] = k. Requires p > 3, 1 <= k <= p-2.
LefschetzDomainValues lefschetz_special_domains(PrimeModulus p, int k);

/// Closure of k under the six gluing formulas.
OmegaClass omega_set(PrimeModulus p, int k);

/// Classes sorted by canonical representative; their union is {1,...,p-2}.
std::vector<OmegaClass> partition_omega(PrimeModulus p);

/// Closed-form class count: (p+5)/6 if p = 1 mod 3, else (p+1)/6.
int lefschetz_count(PrimeModulus p);

CardinalityCase cardinality_case(const OmegaClass& omega);

}  // namespace atlas
