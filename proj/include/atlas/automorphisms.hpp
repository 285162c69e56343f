#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "atlas/gimel.hpp"
#include "atlas/lefschetz.hpp"

namespace atlas {

enum class GroupStructure {
  Cyclic,               // Z/nZ
  Dihedral,             // D_m, order 2m
  SemidirectCyclic,     // Z/pZ x| Z/qZ
  TwoByTwoPSemidirect,  // (Z/2Z x Z/2pZ) x| Z/2Z
  ExceptionalOrder48,   // GL(2, F_3)
  ExceptionalOrder120,  // S_5
  ExceptionalOrder168,  // PSL(2, F_7)
};

// Classification: follows from the case analysis here. ExternalLiterature:
// an order quoted from the standard literature rather than derived.
enum class AutSource { Classification, ExternalLiterature };

std::string_view to_string(GroupStructure s) noexcept;
std::string_view to_string(AutSource s) noexcept;

/// Structural description of a finite group: a presentation tag plus its
/// order. Built only through the named constructors so the order always
/// matches the structure.
class AutGroupDescriptor {
 public:
  static AutGroupDescriptor cyclic(int n);
  static AutGroupDescriptor dihedral(int m);
  static AutGroupDescriptor semidirect_cyclic(int p, int q);
  static AutGroupDescriptor two_by_two_p(int p);
  static AutGroupDescriptor exceptional48();
  static AutGroupDescriptor exceptional120();
  static AutGroupDescriptor exceptional168();

  /// Rebuilds a descriptor from its serialized fields; throws ParseError when
  /// they are inconsistent.
  static AutGroupDescriptor from_parts(GroupStructure s, int n, int q, AutSource source);

  GroupStructure structure() const noexcept { return structure_; }
  std::int64_t order() const noexcept { return order_; }
  AutSource source() const noexcept { return source_; }
  /// Cyclic: n. Dihedral: m. SemidirectCyclic / TwoByTwoPSemidirect: p.
  int n() const noexcept { return n_; }
  /// SemidirectCyclic: q.
  int q() const noexcept { return q_; }

  /// Compact tag, e.g. "Z/26Z", "D_13", "Z/13Z x| Z/4Z".
  std::string tag() const;

  friend bool operator==(const AutGroupDescriptor&, const AutGroupDescriptor&) = default;

 private:
  AutGroupDescriptor(GroupStructure s, int n, int q, std::int64_t order, AutSource src)
      : structure_(s), n_(n), q_(q), order_(order), source_(src) {}

  GroupStructure structure_;
  int n_;
  int q_;
  std::int64_t order_;
  AutSource source_;
};

/// Full automorphism group of a three-point surface.
AutGroupDescriptor lefschetz_aut(const OmegaClass& omega);

/// Normalizer of the order-p subgroup, by κ case, tiling and subclass.
AutGroupDescriptor gimel_aut_prime(const LambdaClass& cls, const TilingShape& shape);

/// Full automorphism group; equals the normalizer except for the genus-2
/// curve with 48 automorphisms and Bring's curve.
AutGroupDescriptor gimel_full_aut(const LambdaClass& cls, const TilingShape& shape);

bool is_hyperelliptic(const LambdaClass& cls) noexcept;

/// Square subclasses singled out by the normalizer table.
bool is_square_diagonal_class(const LambdaClass& cls);       // holds (a, a)_1
bool is_square_minus_one_class(const LambdaClass& cls);      // holds (-1, -1)_1
bool is_square_quarter_turn_class(const LambdaClass& cls);   // holds (a, -a)_1, a^2 = -1

using CoincidenceProfile = std::vector<std::pair<SubindexedPair, int>>;

/// Occurrence count of each distinct subindexed pair over the twelve slots,
/// sorted by pair.
CoincidenceProfile coincidence_profile(const DomainAssignment& assignment);

/// Normalizer order predicted from coincidences: p times the number of slots
/// carrying the same subindexed pair as [AD]. Valid for generic tilings.
std::int64_t coincidence_order(const DomainAssignment& assignment);

/// Largest order allowed for genus g >= 2: 84(g-1).
std::int64_t hurwitz_bound(int genus) noexcept;

}  // namespace atlas
