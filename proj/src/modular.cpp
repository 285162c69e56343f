#include "atlas/modular.hpp"

#include <string>

#include "atlas/error.hpp"

namespace atlas {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::int64_t p) : p_(0) {
  if (p < 0 || p >= kLimit) {
    throw Error(ErrorCode::OutOfRange, "modulus " + std::to_string(p) + " outside [0, 2^31)");
  }
  if (!is_prime(static_cast<std::uint64_t>(p))) {
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  }
  if (p == 2) throw Error(ErrorCode::UnsupportedPrime, "p = 2 is not an odd prime");
  p_ = static_cast<int>(p);
}

ModularUnit::ModularUnit(PrimeModulus p, std::int64_t x) : p_(p), value_(p.reduce(x)) {
  if (value_ == 0) {
    throw Error(ErrorCode::OutOfRange,
                std::to_string(x) + " is not a unit mod " + std::to_string(p.value()));
  }
}

int inverse_residue(std::int64_t a, int p) {
  std::int64_t r0 = p, r1 = a % p;
  if (r1 < 0) r1 += p;
  if (r1 == 0) throw Error(ErrorCode::OutOfRange, "0 has no inverse");
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t r2 = r0 - q * r1;
    r0 = r1;
    r1 = r2;
    std::int64_t t2 = t0 - q * t1;
    t0 = t1;
    t1 = t2;
  }
  t0 %= p;
  return static_cast<int>(t0 < 0 ? t0 + p : t0);
}

ModularUnit ModularUnit::inverse() const { return ModularUnit(p_, inverse_residue(value_, p_.value())); }

ModularUnit ModularUnit::operator-() const { return ModularUnit(p_, p_.value() - value_); }

ModularUnit operator*(ModularUnit a, ModularUnit b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::OutOfRange, "mixed moduli");
  return ModularUnit(a.p_, std::int64_t{a.value_} * b.value_);
}

ModularUnit inverse(ModularUnit a) { return a.inverse(); }

int canonical_in_range(std::int64_t x, PrimeModulus p, ResidueRange range) {
  int r = p.reduce(x);
  int hi = range == ResidueRange::Units ? p.value() - 1 : p.value() - 2;
  if (r < 1 || r > hi) {
    throw Error(ErrorCode::OutOfRange, std::to_string(x) + " mod " + std::to_string(p.value()) +
                                           " = " + std::to_string(r) + " outside [1, " +
                                           std::to_string(hi) + "]");
  }
  return r;
}

std::vector<int> inverse_table(PrimeModulus p) {
  std::vector<int> inv(static_cast<std::size_t>(p.value()), 0);
  inv[1] = 1;
  // inv[a] = -(p / a) * inv[p % a]
  for (int a = 2; a < p.value(); ++a) {
    std::int64_t v = -std::int64_t{p.value() / a} * inv[static_cast<std::size_t>(p.value() % a)];
    inv[static_cast<std::size_t>(a)] = p.reduce(v);
  }
  return inv;
}

std::vector<int> primes_in(int lo, int hi) {
  std::vector<int> out;
  for (int q = lo < 2 ? 2 : lo; q <= hi; ++q) {
    if (is_prime(static_cast<std::uint64_t>(q))) out.push_back(q);
  }
  return out;
}

}  // namespace atlas
