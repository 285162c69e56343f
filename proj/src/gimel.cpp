#include "atlas/gimel.hpp"

#include <algorithm>
#include <string>

#include "atlas/error.hpp"

namespace atlas {

namespace {

using Slots = std::array<SubindexedPair, 12>;

/// Gluing pairs of all twelve special domains from s[AD] = (i, j)_1, with
/// k = -(i+j+1). `inv` maps a nonzero residue to its inverse.
template <typename Inverse>
Slots assign_slots(int p, int i, int j, Inverse&& inv) {
  auto r = [p](std::int64_t x) {
    x %= p;
    return static_cast<int>(x < 0 ? x + p : x);
  };
  const std::int64_t I = i, J = j;
  const std::int64_t K = r(-(I + J + 1));
  const std::int64_t iv = inv(i), jv = inv(j), kv = inv(static_cast<int>(K));
  auto s = [&](std::int64_t a, std::int64_t b, int angle) {
    return SubindexedPair{{r(a), r(b)}, angle};
  };
  return Slots{
      s(I, J, 1),             // AD
      s(J, K, 3),             // AB
      s(K, I, 2),             // AC
      s(iv * J, iv, 2),       // BD
      s(iv, iv * K, 1),       // BC
      s(iv * K, iv * J, 3),   // BA
      s(jv, I * jv, 3),       // CD
      s(I * jv, jv * K, 2),   // CA
      s(jv * K, jv, 1),       // CB
      s(J * kv, I * kv, 1),   // DA
      s(I * kv, kv, 3),       // DC
      s(kv, J * kv, 2),       // DB
  };
}

template <typename T>
void sort_unique(std::vector<T>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

std::vector<ResiduePair> angle_one_pairs(const std::vector<SubindexedPair>& members) {
  std::vector<ResiduePair> out;
  for (const auto& m : members) {
    if (m.angle == 1) out.push_back(m.pair);
  }
  sort_unique(out);
  return out;
}

std::vector<ResiduePair> stripped(const std::vector<SubindexedPair>& members) {
  std::vector<ResiduePair> out;
  out.reserve(members.size());
  for (const auto& m : members) out.push_back(m.pair);
  sort_unique(out);
  return out;
}

/// Builds classes for one prime with a shared inverse table.
class ClassBuilder {
 public:
  explicit ClassBuilder(PrimeModulus p) : p_(p), inv_(inverse_table(p)) {}

  Slots slots(ResiduePair pr) const {
    return assign_slots(p_.value(), pr.first, pr.second,
                        [this](int a) { return inv_[static_cast<std::size_t>(a)]; });
  }

  std::vector<SubindexedPair> generic_members(ResiduePair pr) const {
    const Slots s = slots(pr);
    std::vector<SubindexedPair> out(s.begin(), s.end());
    sort_unique(out);
    return out;
  }

  LambdaClass build(ResiduePair pr, TilingFlavor flavor) const {
    LambdaClass c{p_, flavor, {}, {}, {}, KappaCase::K6};
    switch (flavor) {
      case TilingFlavor::Generic:
        c.members = generic_members(pr);
        c.key = angle_one_pairs(c.members);
        c.pairs = stripped(c.members);
        break;
      case TilingFlavor::Equilateral:
        c.pairs = stripped(generic_members(pr));
        c.key = c.pairs;
        break;
      case TilingFlavor::Square: {
        c.members = generic_members(pr);
        auto other = generic_members(pr.transposed());
        c.members.insert(c.members.end(), other.begin(), other.end());
        sort_unique(c.members);
        c.key = angle_one_pairs(c.members);
        c.pairs = stripped(c.members);
        break;
      }
    }
    c.kappa = detect_kappa(p_, c.pairs);
    return c;
  }

 private:
  PrimeModulus p_;
  std::vector<int> inv_;
};

}  // namespace

std::string ResiduePair::dotted() const {
  return std::to_string(first) + "." + std::to_string(second);
}

std::string SubindexedPair::dotted() const {
  return pair.dotted() + "_" + std::to_string(angle);
}

GluingPair GluingPair::make(PrimeModulus p, std::int64_t i, std::int64_t j) {
  if (!sigma_contains(p, i, j)) {
    throw Error(ErrorCode::NotInSigma, "(" + std::to_string(i) + "," + std::to_string(j) +
                                           ") is not in Sigma_" + std::to_string(p.value()));
  }
  ModularUnit ui(p, i), uj(p, j);
  ModularUnit uk(p, -(std::int64_t{ui.value()} + uj.value() + 1));
  return GluingPair(ui, uj, uk);
}

std::string_view to_string(DomainLabel d) noexcept {
  static constexpr std::array<std::string_view, 12> names = {
      "AD", "AB", "AC", "BD", "BC", "BA", "CD", "CA", "CB", "DA", "DC", "DB"};
  return names[static_cast<std::size_t>(d)];
}

int angle_of(DomainLabel d) noexcept {
  static constexpr std::array<int, 12> angles = {1, 3, 2, 2, 1, 3, 3, 2, 1, 1, 3, 2};
  return angles[static_cast<std::size_t>(d)];
}

std::string_view to_string(TilingFlavor f) noexcept {
  switch (f) {
    case TilingFlavor::Generic: return "generic";
    case TilingFlavor::Equilateral: return "equilateral";
    case TilingFlavor::Square: return "square";
  }
  return "?";
}

std::optional<TilingFlavor> parse_flavor(std::string_view s) noexcept {
  if (s == "generic") return TilingFlavor::Generic;
  if (s == "equilateral") return TilingFlavor::Equilateral;
  if (s == "square") return TilingFlavor::Square;
  return std::nullopt;
}

std::string_view to_string(KappaCase k) noexcept {
  static constexpr std::array<std::string_view, 6> names = {"κ1", "κ2", "κ3", "κ4", "κ5", "κ6"};
  return names[static_cast<std::size_t>(index_of(k) - 1)];
}

int index_of(KappaCase k) noexcept { return static_cast<int>(k); }

bool LambdaClass::contains_angle_one(ResiduePair pr) const {
  if (flavor == TilingFlavor::Equilateral) return std::binary_search(pairs.begin(), pairs.end(), pr);
  return std::binary_search(key.begin(), key.end(), pr);
}

bool sigma_contains(PrimeModulus p, std::int64_t i, std::int64_t j) noexcept {
  const int a = p.reduce(i), b = p.reduce(j);
  return a != 0 && b != 0 && p.reduce(std::int64_t{a} + b + 1) != 0;
}

std::vector<ResiduePair> sigma_pairs(PrimeModulus p) {
  std::vector<ResiduePair> out;
  const int n = p.value();
  out.reserve(static_cast<std::size_t>(n - 1) * static_cast<std::size_t>(n - 1));
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      if ((i + j + 1) % n != 0) out.push_back({i, j});
    }
  }
  return out;
}

DomainAssignment domain_assignment(const GluingPair& pair) {
  const PrimeModulus p = pair.modulus();
  const ResiduePair r = pair.residues();
  return DomainAssignment{
      p, assign_slots(p.value(), r.first, r.second,
                      [&](int a) { return inverse_residue(a, p.value()); })};
}

LambdaClass lambda_class(const GluingPair& pair, TilingFlavor flavor) {
  return ClassBuilder(pair.modulus()).build(pair.residues(), flavor);
}

KappaCase detect_kappa(PrimeModulus p, std::span<const ResiduePair> pairs) {
  const int n = p.value();
  const int minus_one = n - 1;
  auto has = [&](auto&& pred) { return std::any_of(pairs.begin(), pairs.end(), pred); };
  if (has([](ResiduePair r) { return r.first == 1 && r.second == 1; })) return KappaCase::K1;
  if (has([&](ResiduePair r) { return r.first == minus_one && r.second == minus_one; })) {
    return KappaCase::K3;
  }
  if (has([&](ResiduePair r) {
        const std::int64_t a = r.first;
        return (a * a + 1) % n == 0 && r.second == n - r.first;
      })) {
    return KappaCase::K5;
  }
  if (has([](ResiduePair r) { return r.first == 1 || r.second == 1; })) return KappaCase::K2;
  if (has([&](ResiduePair r) { return r.first == minus_one || r.second == minus_one; })) {
    return KappaCase::K4;
  }
  return KappaCase::K6;
}

KappaCase kappa_case(const GluingPair& pair, KappaMode mode) {
  const PrimeModulus p = pair.modulus();
  if (p.value() == 3) {
    if (mode == KappaMode::Strict) {
      throw Error(ErrorCode::UnsupportedPrime, "κ cases are defined for p > 3");
    }
    return KappaCase::K3;
  }
  return lambda_class(pair, TilingFlavor::Equilateral).kappa;
}

std::vector<LambdaClass> enumerate_classes(PrimeModulus p, TilingFlavor flavor) {
  const ClassBuilder builder(p);
  const int n = p.value();
  std::vector<char> seen(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  auto idx = [n](ResiduePair r) {
    return static_cast<std::size_t>(r.first) * static_cast<std::size_t>(n) +
           static_cast<std::size_t>(r.second);
  };
  std::vector<LambdaClass> out;
  for (const ResiduePair& pr : sigma_pairs(p)) {
    if (seen[idx(pr)]) continue;
    LambdaClass c = builder.build(pr, flavor);
    for (const ResiduePair& m : c.key) seen[idx(m)] = 1;
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(),
            [](const LambdaClass& a, const LambdaClass& b) { return a.key < b.key; });
  return out;
}

std::int64_t gimel_class_count(PrimeModulus p, TilingFlavor flavor) {
  const std::int64_t n = p.value();
  switch (flavor) {
    case TilingFlavor::Equilateral: return n == 3 ? 1 : (n * n + 11) / 12;
    case TilingFlavor::Generic: return n == 3 ? 3 : (n * n + 3) / 4;
    case TilingFlavor::Square:
      return n % 4 == 1 ? (n * n + 2 * n + 5) / 8 : (n * n + 2 * n + 1) / 8;
  }
  return 0;
}

}  // namespace atlas
