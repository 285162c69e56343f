#include "atlas/oracle.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>

#include "atlas/fixtures.hpp"
#include "atlas/error.hpp"
#include "atlas/lefschetz.hpp"

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

void require_bound(PrimeModulus p, int bound) {
  if (p.value() > bound)
    throw Error(ErrorCode::BoundExceeded,
                "p = " + std::to_string(p.value()) + " exceeds the oracle bound " + std::to_string(bound));
}

// Inverses by exhaustive search.
std::vector<int> scan_inverses(int p) {
  std::vector<int> inv(p, 0);
  for (int a = 1; a < p; ++a)
    for (int b = 1; b < p; ++b)
      if (a * b % p == 1) {
        inv[a] = b;
        break;
      }
  return inv;
}

struct Slot {
  int x;
  int y;
  int angle;
};

// The twelve special domains of the surface glued by (i, j), row order
// AD AB AC BD BC BA CD CA CB DA DC DB.
std::array<Slot, 12> twelve_slots(int p, int i, int j, const std::vector<int>& inv) {
  auto m = [p](long long v) { return static_cast<int>(((v % p) + p) % p); };
  int k = m(-(i + j + 1));
  int ii = inv[i], ji = inv[j], ki = inv[k];
  return {{
      {i, j, 1},
      {j, k, 3},
      {k, i, 2},
      {m(1LL * ii * j), ii, 2},
      {ii, m(1LL * ii * k), 1},
      {m(1LL * ii * k), m(1LL * ii * j), 3},
      {ji, m(1LL * i * ji), 3},
      {m(1LL * i * ji), m(1LL * ji * k), 2},
      {m(1LL * ji * k), ji, 1},
      {m(1LL * j * ki), m(1LL * i * ki), 1},
      {m(1LL * i * ki), ki, 3},
      {ki, m(1LL * j * ki), 2},
  }};
}

bool in_sigma(int p, int i, int j) { return i != 0 && j != 0 && (i + j + 1) % p != 0; }

int primitive_root(int p) {
  for (int g = 2; g < p; ++g) {
    int order = 1;
    long long x = g;
    while (x != 1) {
      x = x * g % p;
      ++order;
    }
    if (order == p - 1) return g;
  }
  return 1;  // p = 2 only
}

using Perm = std::vector<int>;

std::vector<Perm> generators(int n, PermutationSymmetry s) {
  if (n == 3) {
    switch (s) {
      case PermutationSymmetry::AllPermutations: return {{1, 0, 2}, {1, 2, 0}};
      case PermutationSymmetry::Alternating: return {{1, 2, 0}};
      default: break;
    }
    throw Error(ErrorCode::OutOfRange, "symmetry " + std::string(to_string(s)) + " needs n = 4");
  }
  switch (s) {
    case PermutationSymmetry::AllPermutations: return {{1, 0, 2, 3}, {1, 2, 3, 0}};
    case PermutationSymmetry::Alternating: return {{1, 2, 0, 3}, {1, 0, 3, 2}};
    case PermutationSymmetry::KleinFour: return {{1, 0, 3, 2}, {2, 3, 0, 1}};
    case PermutationSymmetry::SquareDihedral: return {{1, 2, 3, 0}, {2, 1, 0, 3}};
  }
  return {};
}

KappaCase parse_kappa_label(int k) { return static_cast<KappaCase>(k); }

ResiduePair parse_dotted(std::string_view s) {
  auto dot = s.find('.');
  return {std::stoi(std::string(s.substr(0, dot))), std::stoi(std::string(s.substr(dot + 1)))};
}

}  // namespace

std::string_view to_string(PermutationSymmetry s) noexcept {
  switch (s) {
    case PermutationSymmetry::AllPermutations: return "AllPermutations";
    case PermutationSymmetry::Alternating: return "Alternating";
    case PermutationSymmetry::KleinFour: return "KleinFour";
    case PermutationSymmetry::SquareDihedral: return "SquareDihedral";
  }
  return "?";
}

std::int64_t lambda_orbit_census(PrimeModulus p, TilingFlavor flavor, int bound) {
  require_bound(p, bound);
  const int n = p.value();
  const auto inv = scan_inverses(n);
  const bool strip = flavor == TilingFlavor::Equilateral;
  auto index = [n, strip](int x, int y, int angle) {
    std::size_t base = static_cast<std::size_t>(x) * n + y;
    return strip ? base : base * 3 + static_cast<std::size_t>(angle - 1);
  };
  UnionFind uf(static_cast<std::size_t>(n) * n * (strip ? 1 : 3));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if (!in_sigma(n, i, j)) continue;
      auto slots = twelve_slots(n, i, j, inv);
      for (const auto& s : slots) uf.unite(index(i, j, 1), index(s.x, s.y, s.angle));
      if (flavor == TilingFlavor::Square) uf.unite(index(i, j, 1), index(j, i, 1));
    }
  }
  std::set<std::size_t> roots;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (!in_sigma(n, i, j)) continue;
      if (strip) roots.insert(uf.find(index(i, j, 1)));
      else
        for (int a = 1; a <= 3; ++a) roots.insert(uf.find(index(i, j, a)));
    }
  return static_cast<std::int64_t>(roots.size());
}

std::int64_t tuple_orbit_census(PrimeModulus p, int n, PermutationSymmetry symmetry, int bound) {
  require_bound(p, bound);
  if (n != 3 && n != 4) throw Error(ErrorCode::OutOfRange, "tuple length must be 3 or 4");
  const int q = p.value();
  const int base = q - 1;
  auto gens = generators(n, symmetry);
  const int g = primitive_root(q);

  std::size_t size = 1;
  for (int t = 0; t < n - 1; ++t) size *= static_cast<std::size_t>(base);

  // A tuple is indexed by its first n-1 entries; the last one is forced.
  auto encode = [&](const std::array<int, 4>& a) {
    std::size_t id = 0;
    for (int t = 0; t < n - 1; ++t) id = id * base + static_cast<std::size_t>(a[t] - 1);
    return id;
  };
  auto decode = [&](std::size_t id, std::array<int, 4>& a) {
    int sum = 0;
    for (int t = n - 2; t >= 0; --t) {
      a[t] = static_cast<int>(id % base) + 1;
      id /= base;
      sum += a[t];
    }
    a[n - 1] = (q - sum % q) % q;
    return a[n - 1] != 0;
  };

  UnionFind uf(size);
  std::array<int, 4> a{}, b{};
  std::vector<char> valid(size, 0);
  for (std::size_t id = 0; id < size; ++id) {
    if (!decode(id, a)) continue;
    valid[id] = 1;
    for (int t = 0; t < n; ++t) b[t] = static_cast<int>(1LL * a[t] * g % q);
    uf.unite(id, encode(b));
    for (const auto& perm : gens) {
      for (int t = 0; t < n; ++t) b[t] = a[perm[t]];
      uf.unite(id, encode(b));
    }
  }
  std::int64_t orbits = 0;
  for (std::size_t id = 0; id < size; ++id)
    if (valid[id] && uf.find(id) == id) ++orbits;
  return orbits;
}

bool FixtureReport::passed() const {
  return std::all_of(mismatches.begin(), mismatches.end(), [](const FixtureMismatch& m) { return m.erratum; });
}

std::optional<FixtureMismatch> FixtureReport::first_failure() const {
  for (const auto& m : mismatches)
    if (!m.erratum) return m;
  return std::nullopt;
}

FixtureReport kappa_fixture_check(PrimeModulus p) {
  auto columns = lambda_fixtures(p.value());
  if (columns.empty()) throw Error(ErrorCode::OutOfRange, "no printed table for p = " + std::to_string(p.value()));
  FixtureReport report;
  report.p = p.value();
  for (const auto& col : columns) {
    ++report.columns;
    std::string name(col.cells[0]);
    ResiduePair head = parse_dotted(col.cells[0]);
    GluingPair pair = GluingPair::make(p, head.first, head.second);
    DomainAssignment assignment = domain_assignment(pair);
    for (DomainLabel d : kDomainOrder) {
      ++report.cells_checked;
      std::string printed(col.cells[static_cast<std::size_t>(d)]);
      std::string actual = assignment.at(d).pair.dotted();
      if (printed == actual) continue;
      FixtureMismatch m{name, "[" + std::string(to_string(d)) + "]_" + std::to_string(angle_of(d)), printed, actual,
                        false};
      m.erratum = corrected_cell(col, d) == actual;
      report.mismatches.push_back(std::move(m));
    }
    ++report.labels_checked;
    KappaCase expected = parse_kappa_label(col.kappa);
    KappaCase actual = kappa_case(pair, KappaMode::Lenient);
    if (expected != actual)
      report.mismatches.push_back(
          {name, "kappa", std::string(to_string(expected)), std::string(to_string(actual)), false});
  }
  return report;
}

FixtureReport omega_fixture_check(PrimeModulus p) {
  auto fixtures = omega_fixtures(p.value());
  if (fixtures.empty()) throw Error(ErrorCode::OutOfRange, "no printed table for p = " + std::to_string(p.value()));
  auto to_text = [](const std::vector<int>& v) {
    std::string s = "{";
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s + "}";
  };
  FixtureReport report;
  report.p = p.value();
  std::set<std::vector<int>> computed;
  for (const auto& omega : partition_omega(p)) computed.insert(omega.members);
  std::set<std::vector<int>> printed;
  for (const auto& f : fixtures) {
    ++report.columns;
    ++report.cells_checked;
    auto sorted = f.members;
    std::sort(sorted.begin(), sorted.end());
    printed.insert(sorted);
    if (!computed.count(sorted))
      report.mismatches.push_back({"k=" + std::to_string(f.k), "set", to_text(f.members), "absent", false});
  }
  for (const auto& c : computed)
    if (!printed.count(c)) report.mismatches.push_back({"extra", "set", "absent", to_text(c), false});
  return report;
}

std::vector<std::string> kappa_generator_check(PrimeModulus p, int bound) {
  require_bound(p, bound);
  const int n = p.value();
  const auto inv = scan_inverses(n);
  auto index = [n](int x, int y) { return static_cast<std::size_t>(x) * n + y; };
  UnionFind uf(static_cast<std::size_t>(n) * n);
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j)
      if (in_sigma(n, i, j))
        for (const auto& s : twelve_slots(n, i, j, inv)) uf.unite(index(i, j), index(s.x, s.y));

  std::map<std::size_t, std::set<int>> hits;
  auto hit = [&](int x, int y, int kappa) {
    if (in_sigma(n, x, y)) hits[uf.find(index(x, y))].insert(kappa);
  };
  const int minus_one = n - 1;
  const int skip = n > 3 ? inv[(n - 3) % n] : 0;
  hit(1, 1, 1);
  for (int i = 2; i <= n - 4; ++i) {
    hit(1, i, 2);
    hit(i, 1, 2);
  }
  for (int i = 2; i <= n - 2; ++i)
    if (i != skip) hit(i, i, 2);
  hit(minus_one, minus_one, 3);
  for (int i = 2; i <= n - 2; ++i) hit(minus_one, i, (1LL * i * i) % n == n - 1 ? 5 : 4);

  std::vector<std::string> bad;
  std::set<std::size_t> seen;
  for (int i = 1; i < n; ++i)
    for (int j = 1; j < n; ++j) {
      if (!in_sigma(n, i, j)) continue;
      std::size_t root = uf.find(index(i, j));
      if (!seen.insert(root).second) continue;
      auto it = hits.find(root);
      int expected = 6;
      if (it != hits.end()) {
        if (it->second.size() > 1) {
          bad.push_back(std::to_string(i) + "." + std::to_string(j) + " (ambiguous)");
          continue;
        }
        expected = *it->second.begin();
      }
      KappaCase actual = kappa_case(GluingPair::make(p, i, j), KappaMode::Lenient);
      if (index_of(actual) != expected)
        bad.push_back(std::to_string(i) + "." + std::to_string(j) + " (families give κ" + std::to_string(expected) +
                      ", detector gives " + std::string(to_string(actual)) + ")");
    }
  return bad;
}

}  // namespace atlas
