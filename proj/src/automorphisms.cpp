#include "atlas/automorphisms.hpp"

#include <algorithm>
#include <map>

#include "atlas/error.hpp"

namespace atlas {

std::string_view to_string(GroupStructure s) noexcept {
  switch (s) {
    case GroupStructure::Cyclic: return "Cyclic";
    case GroupStructure::Dihedral: return "Dihedral";
    case GroupStructure::SemidirectCyclic: return "SemidirectCyclic";
    case GroupStructure::TwoByTwoPSemidirect: return "TwoByTwoPSemidirect";
    case GroupStructure::ExceptionalOrder48: return "ExceptionalOrder48";
    case GroupStructure::ExceptionalOrder120: return "ExceptionalOrder120";
    case GroupStructure::ExceptionalOrder168: return "ExceptionalOrder168";
  }
  return "?";
}

std::string_view to_string(AutSource s) noexcept {
  return s == AutSource::Classification ? "classification" : "external-literature";
}

AutGroupDescriptor AutGroupDescriptor::cyclic(int n) {
  return {GroupStructure::Cyclic, n, 0, n, AutSource::Classification};
}

AutGroupDescriptor AutGroupDescriptor::dihedral(int m) {
  return {GroupStructure::Dihedral, m, 0, std::int64_t{2} * m, AutSource::Classification};
}

AutGroupDescriptor AutGroupDescriptor::semidirect_cyclic(int p, int q) {
  return {GroupStructure::SemidirectCyclic, p, q, std::int64_t{p} * q, AutSource::Classification};
}

AutGroupDescriptor AutGroupDescriptor::two_by_two_p(int p) {
  return {GroupStructure::TwoByTwoPSemidirect, p, 0, std::int64_t{8} * p, AutSource::Classification};
}

AutGroupDescriptor AutGroupDescriptor::exceptional48() {
  return {GroupStructure::ExceptionalOrder48, 0, 0, 48, AutSource::Classification};
}

AutGroupDescriptor AutGroupDescriptor::exceptional120() {
  return {GroupStructure::ExceptionalOrder120, 0, 0, 120, AutSource::Classification};
}

// The Klein quartic's group order is standard literature, not derived here.
AutGroupDescriptor AutGroupDescriptor::exceptional168() {
  return {GroupStructure::ExceptionalOrder168, 0, 0, 168, AutSource::ExternalLiterature};
}

AutGroupDescriptor AutGroupDescriptor::from_parts(GroupStructure s, int n, int q, AutSource source) {
  AutGroupDescriptor d = [&] {
    switch (s) {
      case GroupStructure::Cyclic: return cyclic(n);
      case GroupStructure::Dihedral: return dihedral(n);
      case GroupStructure::SemidirectCyclic: return semidirect_cyclic(n, q);
      case GroupStructure::TwoByTwoPSemidirect: return two_by_two_p(n);
      case GroupStructure::ExceptionalOrder48: return exceptional48();
      case GroupStructure::ExceptionalOrder120: return exceptional120();
      case GroupStructure::ExceptionalOrder168: return exceptional168();
    }
    throw Error(ErrorCode::ParseError, "unknown group structure");
  }();
  if (d.source_ != source) throw Error(ErrorCode::ParseError, "source does not match structure");
  if (n < 0 || q < 0 || (d.n_ != n) || (d.q_ != q)) {
    throw Error(ErrorCode::ParseError, "parameters do not match structure");
  }
  return d;
}

std::string AutGroupDescriptor::tag() const {
  const std::string ns = std::to_string(n_);
  switch (structure_) {
    case GroupStructure::Cyclic: return "Z/" + ns + "Z";
    case GroupStructure::Dihedral: return "D_" + ns;
    case GroupStructure::SemidirectCyclic:
      return "Z/" + ns + "Z x| Z/" + std::to_string(q_) + "Z";
    case GroupStructure::TwoByTwoPSemidirect:
      return "(Z/2Z x Z/" + std::to_string(2 * n_) + "Z) x| Z/2Z";
    case GroupStructure::ExceptionalOrder48: return "GL(2,F3)";
    case GroupStructure::ExceptionalOrder120: return "S5";
    case GroupStructure::ExceptionalOrder168: return "PSL(2,F7)";
  }
  return "?";
}

AutGroupDescriptor lefschetz_aut(const OmegaClass& omega) {
  const int p = omega.p.value();
  const bool klein = p == 7 && std::binary_search(omega.members.begin(), omega.members.end(), 2);
  if (klein) return AutGroupDescriptor::exceptional168();
  switch (omega.cardinality) {
    case CardinalityCase::Two: return AutGroupDescriptor::semidirect_cyclic(p, 3);
    case CardinalityCase::Three: return AutGroupDescriptor::cyclic(2 * p);
    case CardinalityCase::Six: return AutGroupDescriptor::cyclic(p);
  }
  return AutGroupDescriptor::cyclic(p);
}

bool is_square_diagonal_class(const LambdaClass& cls) {
  return std::any_of(cls.key.begin(), cls.key.end(),
                     [](ResiduePair r) { return r.first == r.second; });
}

bool is_square_minus_one_class(const LambdaClass& cls) {
  const int m = cls.p.value() - 1;
  return cls.contains_angle_one({m, m});
}

bool is_square_quarter_turn_class(const LambdaClass& cls) {
  const std::int64_t p = cls.p.value();
  return std::any_of(cls.key.begin(), cls.key.end(), [p](ResiduePair r) {
    const std::int64_t a = r.first;
    return (a * a + 1) % p == 0 && r.second == p - a;
  });
}

AutGroupDescriptor gimel_aut_prime(const LambdaClass& cls, const TilingShape& shape) {
  if (cls.flavor != shape.flavor()) {
    throw Error(ErrorCode::FlavorMismatch, std::string("class is ") +
                                               std::string(to_string(cls.flavor)) +
                                               ", tiling is " +
                                               std::string(to_string(shape.flavor())));
  }
  const int p = cls.p.value();
  const TilingFlavor f = cls.flavor;
  using D = AutGroupDescriptor;
  switch (cls.kappa) {
    case KappaCase::K1:
      if (f == TilingFlavor::Equilateral) return D::cyclic(3 * p);
      if (f == TilingFlavor::Square) return D::cyclic(2 * p);
      return D::cyclic(p);
    case KappaCase::K2:
      if (f == TilingFlavor::Square && is_square_diagonal_class(cls)) return D::cyclic(2 * p);
      return D::cyclic(p);
    case KappaCase::K3:
      if (f == TilingFlavor::Square && is_square_minus_one_class(cls)) return D::two_by_two_p(p);
      return D::dihedral(2 * p);
    case KappaCase::K4:
      return D::dihedral(p);
    case KappaCase::K5:
      if (f == TilingFlavor::Square && is_square_quarter_turn_class(cls)) {
        return D::semidirect_cyclic(p, 4);
      }
      return D::dihedral(p);
    case KappaCase::K6:
      return D::cyclic(p);
  }
  return D::cyclic(p);
}

AutGroupDescriptor gimel_full_aut(const LambdaClass& cls, const TilingShape& shape) {
  AutGroupDescriptor normalizer = gimel_aut_prime(cls, shape);
  if (cls.flavor == TilingFlavor::Square) {
    const int p = cls.p.value();
    if (p == 3 && cls.kappa == KappaCase::K3 && is_square_minus_one_class(cls)) {
      return AutGroupDescriptor::exceptional48();
    }
    if (p == 5 && cls.kappa == KappaCase::K5 && is_square_quarter_turn_class(cls)) {
      return AutGroupDescriptor::exceptional120();
    }
  }
  return normalizer;
}

bool is_hyperelliptic(const LambdaClass& cls) noexcept { return cls.kappa == KappaCase::K3; }

CoincidenceProfile coincidence_profile(const DomainAssignment& assignment) {
  std::map<SubindexedPair, int> counts;
  for (const auto& slot : assignment.slots) ++counts[slot];
  return {counts.begin(), counts.end()};
}

std::int64_t coincidence_order(const DomainAssignment& assignment) {
  const SubindexedPair& ad = assignment.at(DomainLabel::AD);
  const auto same = std::count(assignment.slots.begin(), assignment.slots.end(), ad);
  return std::int64_t{assignment.p.value()} * same;
}

std::int64_t hurwitz_bound(int genus) noexcept { return std::int64_t{84} * (genus - 1); }

}  // namespace atlas
