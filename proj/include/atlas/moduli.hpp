#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/modular.hpp"

namespace atlas {

/// Surfaces of genus g with an order-p automorphism whose quotient has genus
/// g' and n branch points with rotation data `branch_data`.
struct ModuliSubscheme {
  int p = 0;
  int g_prime = 0;
  std::vector<int> branch_data;
  int genus = 0;      // from 2g-2 = p(2g'-2) + n(p-1)
  int dimension = 0;  // 3g'-3+n

  /// Validates the data: entries in 1..p-1 summing to 0 mod p.
  static ModuliSubscheme make(PrimeModulus p, int g_prime, std::vector<int> branch_data);
};

/// 3g'-3+n; throws NegativeDimension when that is negative or an input is.
int subscheme_dimension(int g_prime, int n);

/// Isolated singular points of M_g. 1 for g in {2,3}; for g >= 4 nonzero only
/// when 2g+1 is prime.
int isolated_singularities(int g);

/// One-dimensional components of the singular locus: g(g+2)/24 when g+1 > 3
/// is prime, else 0.
int dim_one_components(int g);

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s) noexcept;  // "pass", "fail", "skipped"

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// A family realizing one counted component.
struct Witness {
  std::string family;      // "lefschetz" or "gimel"
  int p = 0;
  std::string descriptor;  // Omega set or component head with κ label

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct SingularLocusReport {
  int g = 0;
  int isolated = 0;
  int dim_one = 0;
  std::vector<Witness> witnesses;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;

  friend bool operator==(const SingularLocusReport&, const SingularLocusReport&) = default;
};

/// Counts for genus g with witnesses from the three- and four-point
/// classifications at p = 2g+1 and p = g+1 when those are primes > 3.
SingularLocusReport singular_locus_report(int g);

struct CrossCheckReport {
  int p = 0;
  std::vector<Witness> witnesses;
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;

  bool passed() const;
};

/// Compares the closed forms with the classification at p:
/// isolated((p-1)/2) against Lefschetz classes with cyclic automorphism group
/// (only for (p-1)/2 >= 4), and dim_one(p-1) against components whose generic
/// sheets have cyclic normalizer. Throws VerificationFailure on a mismatch.
CrossCheckReport cross_check(PrimeModulus p);

/// Same checks without throwing.
CrossCheckReport run_cross_check(PrimeModulus p);

}  // namespace atlas
