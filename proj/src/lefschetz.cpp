#include "atlas/lefschetz.hpp"

#include <algorithm>
#include <string>

#include "atlas/error.hpp"

namespace atlas {

namespace {

void require_lefschetz_prime(PrimeModulus p) {
  if (p.value() <= 3) {
    throw Error(ErrorCode::UnsupportedPrime,
                "three-point classification needs p > 3, got " + std::to_string(p.value()));
  }
}

void require_k(PrimeModulus p, int k) {
  if (k < 1 || k > p.value() - 2) {
    throw Error(ErrorCode::OutOfRange, "k = " + std::to_string(k) + " outside [1, " +
                                           std::to_string(p.value() - 2) + "]");
  }
}

}  // namespace

std::string_view to_string(CardinalityCase c) noexcept {
  switch (c) {
    case CardinalityCase::Two: return "Two";
    case CardinalityCase::Three: return "Three";
    case CardinalityCase::Six: return "Six";
  }
  return "?";
}

std::string_view to_string(LefschetzDomain d) noexcept {
  switch (d) {
    case LefschetzDomain::AB: return "[A,B]";
    case LefschetzDomain::AC: return "[A,C]";
    case LefschetzDomain::BA: return "[B,A]";
    case LefschetzDomain::BC: return "[B,C]";
    case LefschetzDomain::CA: return "[C,A]";
    case LefschetzDomain::CB: return "[C,B]";
  }
  return "?";
}

LefschetzDomainValues lefschetz_special_domains(PrimeModulus p, int k) {
  require_lefschetz_prime(p);
  require_k(p, k);
  const int n = p.value();
  const int k_inv = inverse_residue(k, n);
  const int k1_inv = inverse_residue(k + 1, n);
  auto in_range = [&](std::int64_t x) {
    return canonical_in_range(x, p, ResidueRange::OneToPMinus2);
  };
  return LefschetzDomainValues{{
      k,                        // [A,B]
      in_range(n - 1 - k),      // [A,C]
      in_range(k_inv),          // [B,A]
      in_range(n - 1 - k_inv),  // [B,C]
      in_range(n - k1_inv),     // [C,A]
      in_range(k1_inv - 1),     // [C,B]
  }};
}

OmegaClass omega_set(PrimeModulus p, int k) {
  const auto domains = lefschetz_special_domains(p, k);
  std::vector<int> members(domains.values.begin(), domains.values.end());
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  OmegaClass omega{p, members, members.front(), CardinalityCase::Six};
  omega.cardinality = cardinality_case(omega);
  return omega;
}

std::vector<OmegaClass> partition_omega(PrimeModulus p) {
  require_lefschetz_prime(p);
  std::vector<bool> seen(static_cast<std::size_t>(p.value()), false);
  std::vector<OmegaClass> out;
  for (int k = 1; k <= p.value() - 2; ++k) {
    if (seen[static_cast<std::size_t>(k)]) continue;
    OmegaClass omega = omega_set(p, k);
    for (int m : omega.members) seen[static_cast<std::size_t>(m)] = true;
    out.push_back(std::move(omega));
  }
  return out;
}

int lefschetz_count(PrimeModulus p) {
  require_lefschetz_prime(p);
  return p.value() % 3 == 1 ? (p.value() + 5) / 6 : (p.value() + 1) / 6;
}

CardinalityCase cardinality_case(const OmegaClass& omega) {
  const std::int64_t n = omega.p.value();
  const std::int64_t k = omega.canonical_k;
  if ((k * k + k + 1) % n == 0) return CardinalityCase::Two;
  const std::vector<int> omega_one{1, static_cast<int>((n - 1) / 2), static_cast<int>(n - 2)};
  if (omega.members == omega_one) return CardinalityCase::Three;
  return CardinalityCase::Six;
}

}  // namespace atlas
