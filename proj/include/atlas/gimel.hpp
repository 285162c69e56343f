#pragma once

#include <array>
#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "atlas/modular.hpp"

namespace atlas {

// Surfaces of genus p-1 carrying an order-p automorphism with four fixed
// points A, B, C, D. A surface is encoded by the gluing pair (i, j) of the
// special domain [AD]; the other eleven special domains carry derived pairs,
// each tagged with the angle (1, 2, 3) at the vertex opposite the center.

/// Two canonical residues in {1, ..., p-1}.
struct ResiduePair {
  int first = 0;
  int second = 0;

  /// "i.j", the notation used in the published tables.
  std::string dotted() const;
  ResiduePair transposed() const noexcept { return {second, first}; }

  friend auto operator<=>(const ResiduePair&, const ResiduePair&) = default;
};

struct SubindexedPair {
  ResiduePair pair;
  int angle = 1;  // 1 <-> alpha, 2 <-> beta, 3 <-> gamma

  std::string dotted() const;

  friend auto operator<=>(const SubindexedPair&, const SubindexedPair&) = default;
};

/// (i, j) with i, j, i+j+1 all nonzero mod p; k = -(i+j+1).
class GluingPair {
 public:
  static GluingPair make(PrimeModulus p, std::int64_t i, std::int64_t j);

  PrimeModulus modulus() const noexcept { return i_.modulus(); }
  ModularUnit i() const noexcept { return i_; }
  ModularUnit j() const noexcept { return j_; }
  ModularUnit k() const noexcept { return k_; }
  ResiduePair residues() const noexcept { return {i_.value(), j_.value()}; }

 private:
  GluingPair(ModularUnit i, ModularUnit j, ModularUnit k) : i_(i), j_(j), k_(k) {}

  ModularUnit i_;
  ModularUnit j_;
  ModularUnit k_;
};

/// The twelve special domains, in the row order of the published tables.
enum class DomainLabel { AD, AB, AC, BD, BC, BA, CD, CA, CB, DA, DC, DB };

inline constexpr std::array<DomainLabel, 12> kDomainOrder = {
    DomainLabel::AD, DomainLabel::AB, DomainLabel::AC, DomainLabel::BD,
    DomainLabel::BC, DomainLabel::BA, DomainLabel::CD, DomainLabel::CA,
    DomainLabel::CB, DomainLabel::DA, DomainLabel::DC, DomainLabel::DB};

std::string_view to_string(DomainLabel d) noexcept;  // "AD", ...
int angle_of(DomainLabel d) noexcept;

struct DomainAssignment {
  PrimeModulus p;
  std::array<SubindexedPair, 12> slots;  // indexed by DomainLabel

  const SubindexedPair& at(DomainLabel d) const noexcept {
    return slots[static_cast<std::size_t>(d)];
  }
};

enum class TilingFlavor { Generic, Equilateral, Square };

std::string_view to_string(TilingFlavor f) noexcept;
std::optional<TilingFlavor> parse_flavor(std::string_view s) noexcept;

enum class KappaCase { K1 = 1, K2, K3, K4, K5, K6 };

std::string_view to_string(KappaCase k) noexcept;  // "κ1", ...
int index_of(KappaCase k) noexcept;

/// An isomorphism class for one tiling flavor.
///
/// Generic: `members` are the distinct subindexed pairs; `key` the sorted
/// angle-1 pairs. Equilateral: `members` empty; `key` the sorted pairs.
/// Square: union of the generic classes of (i, j) and (j, i), keyed by the
/// union's angle-1 pairs. `pairs` always holds the distinct pairs with
/// subindices stripped.
struct LambdaClass {
  PrimeModulus p;
  TilingFlavor flavor;
  std::vector<ResiduePair> key;
  std::vector<SubindexedPair> members;
  std::vector<ResiduePair> pairs;
  KappaCase kappa;

  ResiduePair head() const { return key.front(); }
  bool contains_angle_one(ResiduePair pr) const;

  friend bool operator==(const LambdaClass&, const LambdaClass&) = default;
};

/// The canonical tiling: equilateral, square, or generic with its coordinate
/// on the line of canonical tilings.
class TilingShape {
 public:
  static TilingShape equilateral() { return TilingShape(TilingFlavor::Equilateral, {}); }
  static TilingShape square() { return TilingShape(TilingFlavor::Square, {}); }
  static TilingShape generic(std::complex<double> parameter) {
    return TilingShape(TilingFlavor::Generic, parameter);
  }

  TilingFlavor flavor() const noexcept { return flavor_; }
  std::optional<std::complex<double>> parameter() const noexcept { return parameter_; }

 private:
  TilingShape(TilingFlavor f, std::optional<std::complex<double>> z) : flavor_(f), parameter_(z) {}

  TilingFlavor flavor_;
  std::optional<std::complex<double>> parameter_;
};

bool sigma_contains(PrimeModulus p, std::int64_t i, std::int64_t j) noexcept;

/// All of Sigma_p in lexicographic order.
std::vector<ResiduePair> sigma_pairs(PrimeModulus p);

DomainAssignment domain_assignment(const GluingPair& pair);

LambdaClass lambda_class(const GluingPair& pair, TilingFlavor flavor);

enum class KappaMode { Lenient, Strict };

/// Case of the class of `pair`. Constant over angle-permuted siblings.
KappaCase kappa_case(const GluingPair& pair, KappaMode mode = KappaMode::Lenient);

/// Pattern test over a set of unsubscripted pairs, first match wins:
/// (1,1) -> κ1; (-1,-1) -> κ3; (a,-a) with a^2 = -1 -> κ5; a coordinate 1 -> κ2;
/// a coordinate -1 -> κ4; otherwise κ6.
KappaCase detect_kappa(PrimeModulus p, std::span<const ResiduePair> pairs);

std::vector<LambdaClass> enumerate_classes(PrimeModulus p, TilingFlavor flavor);

/// Closed-form class counts for a fixed tiling.
std::int64_t gimel_class_count(PrimeModulus p, TilingFlavor flavor);

}  // namespace atlas
