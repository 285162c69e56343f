#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string_view>
#include <vector>

#include "atlas/gimel.hpp"

namespace atlas {

// The space of canonical tilings for fixed p. Each generic class contributes
// one copy of the complex line (a sheet, named by its head pair); sheets are
// glued at equilateral and square points.

enum class ComponentType { Type1 = 1, Type2 = 2, Type3 = 3 };

std::string_view to_string(ComponentType t) noexcept;  // "Type1", ...

/// κ1 -> Type1; κ2, κ3, κ5 -> Type2; κ4, κ6 -> Type3.
ComponentType component_type_for(KappaCase kappa) noexcept;

/// Number of sheets in a component of the given type: 1, 3 or 6.
int sheet_count(ComponentType t) noexcept;

/// Sheets meeting at one special point, and the head of the special class.
struct GluingSite {
  std::vector<ResiduePair> sheets;
  ResiduePair key;

  friend bool operator==(const GluingSite&, const GluingSite&) = default;
};

struct Component {
  int id = 0;
  ComponentType type = ComponentType::Type1;
  KappaCase kappa = KappaCase::K1;
  std::vector<ResiduePair> sheets;  // ascending generic heads
  std::vector<GluingSite> equilateral_points;
  std::vector<GluingSite> square_points;

  friend bool operator==(const Component&, const Component&) = default;
};

/// Components ordered by smallest sheet head; ids are positions in that order.
struct ComponentGraph {
  PrimeModulus p;
  std::vector<Component> components;

  friend bool operator==(const ComponentGraph&, const ComponentGraph&) = default;
};

/// Joins generic classes that reduce to the same equilateral class and
/// generic classes merged by a square class.
ComponentGraph build_component_graph(PrimeModulus p);

struct ComponentRef {
  int id = 0;
  ComponentType type = ComponentType::Type1;

  friend bool operator==(const ComponentRef&, const ComponentRef&) = default;
};

ComponentRef component_of(const ComponentGraph& graph, const GluingPair& pair);
ComponentRef component_of(PrimeModulus p, const GluingPair& pair);

struct ComponentCounts {
  std::int64_t type1 = 0;
  std::int64_t type2 = 0;
  std::int64_t type3 = 0;
  std::int64_t total = 0;

  friend bool operator==(const ComponentCounts&, const ComponentCounts&) = default;
};

/// Counts taken from the constructed graph.
ComponentCounts component_counts(PrimeModulus p);
ComponentCounts component_counts(const ComponentGraph& graph);

/// The closed forms; p = 3 has a single Type2 component.
ComponentCounts component_counts_closed_form(PrimeModulus p);

/// A point of the extended complex line.
struct ExtendedComplex {
  std::complex<double> value;
  bool infinite = false;

  static ExtendedComplex finite(std::complex<double> z) { return {z, false}; }
  static ExtendedComplex infinity() { return {{}, true}; }
};

enum class SpecialPoint { Generic, EquilateralPoint, SquarePoint };

std::string_view to_string(SpecialPoint s) noexcept;

struct TilingParameter {
  std::complex<double> value;
  SpecialPoint special = SpecialPoint::Generic;
};

/// Cross-ratio of four points in the given order; infinity is handled by
/// dropping the factors that contain it.
std::complex<double> cross_ratio(const std::array<ExtendedComplex, 4>& points);

/// j(λ) = 256(λ²-λ+1)³ / (λ²(λ-1)²): independent of the ordering and of
/// Möbius transformations. Square configurations give 1728, equilateral 0.
TilingParameter four_point_parameter(const std::array<ExtendedComplex, 4>& points);

}  // namespace atlas
