#include "atlas/parameter_space.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "atlas/error.hpp"

namespace atlas {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

constexpr double kSpecialTolerance = 1e-9;

bool same_point(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.infinite || b.infinite) return a.infinite && b.infinite;
  double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
  return std::abs(a.value - b.value) <= 1e-12 * scale;
}

std::complex<double> difference(const ExtendedComplex& a, const ExtendedComplex& b) {
  if (a.infinite || b.infinite) return {1.0, 0.0};
  return a.value - b.value;
}

}  // namespace

std::string_view to_string(ComponentType t) noexcept {
  switch (t) {
    case ComponentType::Type1: return "Type1";
    case ComponentType::Type2: return "Type2";
    case ComponentType::Type3: return "Type3";
  }
  return "?";
}

std::string_view to_string(SpecialPoint s) noexcept {
  switch (s) {
    case SpecialPoint::Generic: return "Generic";
    case SpecialPoint::EquilateralPoint: return "EquilateralPoint";
    case SpecialPoint::SquarePoint: return "SquarePoint";
  }
  return "?";
}

ComponentType component_type_for(KappaCase kappa) noexcept {
  switch (kappa) {
    case KappaCase::K1: return ComponentType::Type1;
    case KappaCase::K2:
    case KappaCase::K3:
    case KappaCase::K5: return ComponentType::Type2;
    case KappaCase::K4:
    case KappaCase::K6: return ComponentType::Type3;
  }
  return ComponentType::Type3;
}

int sheet_count(ComponentType t) noexcept {
  switch (t) {
    case ComponentType::Type1: return 1;
    case ComponentType::Type2: return 3;
    case ComponentType::Type3: return 6;
  }
  return 0;
}

ComponentGraph build_component_graph(PrimeModulus p) {
  const int n = p.value();
  auto generic = enumerate_classes(p, TilingFlavor::Generic);
  auto equilateral = enumerate_classes(p, TilingFlavor::Equilateral);
  auto square = enumerate_classes(p, TilingFlavor::Square);

  auto slot = [n](ResiduePair r) { return static_cast<std::size_t>(r.first) * n + r.second; };
  constexpr int kNone = -1;
  std::vector<int> generic_of(static_cast<std::size_t>(n) * n, kNone);
  std::vector<int> equilateral_of(static_cast<std::size_t>(n) * n, kNone);
  for (std::size_t g = 0; g < generic.size(); ++g)
    for (const auto& r : generic[g].key) generic_of[slot(r)] = static_cast<int>(g);
  for (std::size_t e = 0; e < equilateral.size(); ++e)
    for (const auto& r : equilateral[e].key) equilateral_of[slot(r)] = static_cast<int>(e);

  UnionFind uf(generic.size());
  std::vector<int> eq_of_generic(generic.size());
  std::vector<int> first_with_eq(equilateral.size(), kNone);
  for (std::size_t g = 0; g < generic.size(); ++g) {
    int e = equilateral_of[slot(generic[g].head())];
    eq_of_generic[g] = e;
    if (first_with_eq[e] == kNone) first_with_eq[e] = static_cast<int>(g);
    else uf.unite(static_cast<std::size_t>(first_with_eq[e]), g);
  }
  std::vector<std::vector<int>> square_sheets(square.size());
  for (std::size_t s = 0; s < square.size(); ++s) {
    auto& sheets = square_sheets[s];
    for (const auto& r : square[s].key) {
      int g = generic_of[slot(r)];
      if (std::find(sheets.begin(), sheets.end(), g) == sheets.end()) sheets.push_back(g);
    }
    std::sort(sheets.begin(), sheets.end());
    for (int g : sheets) uf.unite(static_cast<std::size_t>(sheets.front()), static_cast<std::size_t>(g));
  }

  // Generic classes are sorted by head, so the smallest index in each root's
  // set also has the smallest head.
  std::map<std::size_t, int> index_of_root;
  ComponentGraph graph{p, {}};
  std::vector<int> component_of_generic(generic.size());
  for (std::size_t g = 0; g < generic.size(); ++g) {
    std::size_t root = uf.find(g);
    auto [it, inserted] = index_of_root.emplace(root, static_cast<int>(graph.components.size()));
    if (inserted) {
      Component c;
      c.id = it->second;
      c.kappa = generic[g].kappa;
      c.type = component_type_for(c.kappa);
      graph.components.push_back(std::move(c));
    }
    component_of_generic[g] = it->second;
    graph.components[it->second].sheets.push_back(generic[g].head());
  }

  std::vector<GluingSite> eq_sites(equilateral.size());
  for (std::size_t e = 0; e < equilateral.size(); ++e) eq_sites[e].key = equilateral[e].head();
  for (std::size_t g = 0; g < generic.size(); ++g) eq_sites[eq_of_generic[g]].sheets.push_back(generic[g].head());
  for (std::size_t e = 0; e < equilateral.size(); ++e) {
    int c = component_of_generic[first_with_eq[e]];
    graph.components[c].equilateral_points.push_back(std::move(eq_sites[e]));
  }
  for (std::size_t s = 0; s < square.size(); ++s) {
    GluingSite site;
    site.key = square[s].head();
    for (int g : square_sheets[s]) site.sheets.push_back(generic[g].head());
    int c = component_of_generic[square_sheets[s].front()];
    graph.components[c].square_points.push_back(std::move(site));
  }
  auto by_key = [](const GluingSite& a, const GluingSite& b) { return a.key < b.key; };
  for (auto& c : graph.components) {
    std::sort(c.equilateral_points.begin(), c.equilateral_points.end(), by_key);
    std::sort(c.square_points.begin(), c.square_points.end(), by_key);
  }
  return graph;
}

ComponentRef component_of(const ComponentGraph& graph, const GluingPair& pair) {
  if (pair.modulus() != graph.p) throw Error(ErrorCode::OutOfRange, "pair and graph use different primes");
  ResiduePair head = lambda_class(pair, TilingFlavor::Generic).head();
  for (const auto& c : graph.components)
    if (std::binary_search(c.sheets.begin(), c.sheets.end(), head)) return {c.id, c.type};
  throw Error(ErrorCode::VerificationFailure, "class " + head.dotted() + " lies in no component");
}

ComponentRef component_of(PrimeModulus p, const GluingPair& pair) {
  return component_of(build_component_graph(p), pair);
}

ComponentCounts component_counts(const ComponentGraph& graph) {
  ComponentCounts out;
  for (const auto& c : graph.components) {
    switch (c.type) {
      case ComponentType::Type1: ++out.type1; break;
      case ComponentType::Type2: ++out.type2; break;
      case ComponentType::Type3: ++out.type3; break;
    }
  }
  out.total = out.type1 + out.type2 + out.type3;
  return out;
}

ComponentCounts component_counts(PrimeModulus p) { return component_counts(build_component_graph(p)); }

ComponentCounts component_counts_closed_form(PrimeModulus p) {
  const std::int64_t q = p.value();
  if (q == 3) return {0, 1, 0, 1};
  ComponentCounts out;
  out.type1 = 1;
  if (q % 4 == 1) {
    out.type2 = (q - 1) / 2;
    out.type3 = (q * q - 6 * q + 5) / 24;
    out.total = (q * q + 6 * q + 17) / 24;
  } else {
    out.type2 = (q - 3) / 2;
    out.type3 = (q * q - 6 * q + 17) / 24;
    out.total = (q + 5) * (q + 1) / 24;
  }
  return out;
}

std::complex<double> cross_ratio(const std::array<ExtendedComplex, 4>& z) {
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a + 1; b < 4; ++b)
      if (same_point(z[a], z[b]))
        throw Error(ErrorCode::DegeneratePoints,
                    "points " + std::to_string(a + 1) + " and " + std::to_string(b + 1) + " coincide");
  return difference(z[0], z[2]) * difference(z[1], z[3]) / (difference(z[0], z[3]) * difference(z[1], z[2]));
}

TilingParameter four_point_parameter(const std::array<ExtendedComplex, 4>& points) {
  std::complex<double> l = cross_ratio(points);
  std::complex<double> num = l * l - l + 1.0;
  std::complex<double> j = 256.0 * num * num * num / (l * l * (l - 1.0) * (l - 1.0));
  double scale = std::max(1.0, std::abs(j));
  TilingParameter out{j, SpecialPoint::Generic};
  if (std::abs(j) <= kSpecialTolerance * scale) out.special = SpecialPoint::EquilateralPoint;
  else if (std::abs(j - 1728.0) <= kSpecialTolerance * scale) out.special = SpecialPoint::SquarePoint;
  return out;
}

}  // namespace atlas
