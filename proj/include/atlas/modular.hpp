#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace atlas {

/// Deterministic trial division. Exact for every 64-bit input, intended for
/// the small moduli used here.
bool is_prime(std::uint64_t n) noexcept;

/// An odd prime p with 3 <= p < 2^31.
class PrimeModulus {
 public:
  static constexpr std::int64_t kLimit = std::int64_t{1} << 31;

  explicit PrimeModulus(std::int64_t p);

  int value() const noexcept { return p_; }

  /// Least nonnegative residue of x.
  int reduce(std::int64_t x) const noexcept {
    std::int64_t r = x % p_;
    return static_cast<int>(r < 0 ? r + p_ : r);
  }

  friend auto operator<=>(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  int p_;
};

/// Nonzero residue class, stored canonically in {1, ..., p-1}.
class ModularUnit {
 public:
  ModularUnit(PrimeModulus p, std::int64_t x);

  int value() const noexcept { return value_; }
  PrimeModulus modulus() const noexcept { return p_; }

  ModularUnit inverse() const;
  ModularUnit operator-() const;

  friend ModularUnit operator*(ModularUnit a, ModularUnit b);
  friend bool operator==(const ModularUnit&, const ModularUnit&) = default;

 private:
  PrimeModulus p_;
  int value_;
};

ModularUnit inverse(ModularUnit a);

/// Inverse of a nonzero residue a mod p via the extended Euclidean algorithm.
int inverse_residue(std::int64_t a, int p);

enum class ResidueRange {
  Units,         // {1, ..., p-1}
  OneToPMinus2,  // {1, ..., p-2}
};

/// Reduces x mod p and returns the representative in `range`; throws
/// OutOfRange when the reduction does not land in it.
int canonical_in_range(std::int64_t x, PrimeModulus p, ResidueRange range);

/// Table of inverses for all nonzero residues; index 0 is unused.
std::vector<int> inverse_table(PrimeModulus p);

/// All primes q with lo <= q <= hi.
std::vector<int> primes_in(int lo, int hi);

}  // namespace atlas
