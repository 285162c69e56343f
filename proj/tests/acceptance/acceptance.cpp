// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "atlas/fixtures.hpp"
#include "atlas/automorphisms.hpp"
#include "atlas/equations.hpp"
#include "atlas/error.hpp"
#include "atlas/gimel.hpp"
#include "atlas/lefschetz.hpp"
#include "atlas/moduli.hpp"
#include "atlas/oracle.hpp"
#include "atlas/parameter_space.hpp"

using namespace atlas;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (pass) detail << what;
    pass = false;
  }
};

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

constexpr TilingFlavor kFlavors[] = {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square};

TilingShape shape_for(TilingFlavor f) {
  if (f == TilingFlavor::Equilateral) return TilingShape::equilateral();
  if (f == TilingFlavor::Square) return TilingShape::square();
  return TilingShape::generic({0.31, 0.17});
}

void omega_fidelity(Outcome& out) {
  auto t0 = Clock::now();
  int sets = 0;
  for (int q : kOmegaFixturePrimes) {
    auto classes = partition_omega(PrimeModulus(q));
    std::set<std::set<int>> produced;
    for (const auto& c : classes) produced.insert(std::set<int>(c.members.begin(), c.members.end()));
    auto printed = omega_fixtures(q);
    if (printed.size() != classes.size()) out.fail("p=" + std::to_string(q) + " class count differs");
    for (const auto& f : printed) {
      ++sets;
      if (!produced.count(std::set<int>(f.members.begin(), f.members.end())))
        out.fail("p=" + std::to_string(q) + " k=" + std::to_string(f.k) + " not reproduced");
    }
  }
  double s = seconds_since(t0);
  if (s >= 1.0) out.fail("runtime " + std::to_string(s) + " s");
  if (out.pass) out.detail << sets << " sets, " << s << " s";
}

void lambda_fidelity(Outcome& out) {
  auto t0 = Clock::now();
  int cells = 0, labels = 0, errata = 0;
  for (int q : kLambdaFixturePrimes) {
    auto r = kappa_fixture_check(PrimeModulus(q));
    cells += r.cells_checked;
    labels += r.labels_checked;
    for (const auto& m : r.mismatches) errata += m.erratum ? 1 : 0;
    if (auto bad = r.first_failure())
      out.fail("p=" + std::to_string(q) + " column " + bad->column + " row " + bad->row + ": printed " + bad->expected +
               ", computed " + bad->actual);
  }
  double s = seconds_since(t0);
  if (s >= 1.0) out.fail("runtime " + std::to_string(s) + " s");
  if (out.pass) out.detail << cells << " cells, " << labels << " labels, " << errata << " listed errata, " << s << " s";
}

void count_identities(Outcome& out) {
  auto t0 = Clock::now();
  auto primes = primes_in(5, 199);
  for (int q : primes) {
    PrimeModulus p(q);
    std::string at = "p=" + std::to_string(q) + " ";
    std::int64_t ll = static_cast<std::int64_t>(q);
    std::int64_t lef = q % 3 == 1 ? (ll + 5) / 6 : (ll + 1) / 6;
    std::int64_t gen = (ll * ll + 3) / 4;
    std::int64_t equi = (ll * ll + 11) / 12;
    std::int64_t sq = q % 4 == 1 ? (ll * ll + 2 * ll + 5) / 8 : (ll * ll + 2 * ll + 1) / 8;
    if (static_cast<std::int64_t>(partition_omega(p).size()) != lef) out.fail(at + "Lefschetz count");
    auto g = static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Generic).size());
    auto e = static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Equilateral).size());
    auto s = static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Square).size());
    if (g != gen) out.fail(at + "generic count");
    if (e != equi) out.fail(at + "equilateral count");
    if (s != sq) out.fail(at + "square count");
    if (3 * (e - 1) + 1 != g) out.fail(at + "3(E-1)+1 != G");
    auto counts = component_counts(p);
    std::int64_t total = q % 4 == 1 ? (ll * ll + 6 * ll + 17) / 24 : (ll + 5) * (ll + 1) / 24;
    if (counts.total != total) out.fail(at + "component total");
    if (counts != component_counts_closed_form(p)) out.fail(at + "component types");
  }
  double s = seconds_since(t0);
  if (s >= 30.0) out.fail("runtime " + std::to_string(s) + " s");
  if (out.pass) out.detail << primes.size() << " primes, " << s << " s";
}

void oracle_equivalence(Outcome& out, std::string& info) {
  double slowest = 0;
  int censuses = 0;
  auto timed = [&](const std::function<std::int64_t()>& f) {
    auto t0 = Clock::now();
    auto v = f();
    double s = seconds_since(t0);
    slowest = std::max(slowest, s);
    ++censuses;
    if (s >= 10.0) out.fail("census took " + std::to_string(s) + " s");
    return v;
  };
  std::ostringstream s4;
  int s4_mismatch = 0;
  for (int q : primes_in(5, 101)) {
    PrimeModulus p(q);
    std::string at = "p=" + std::to_string(q) + " ";
    for (auto f : kFlavors) {
      auto n = static_cast<std::int64_t>(enumerate_classes(p, f).size());
      if (timed([&] { return lambda_orbit_census(p, f); }) != n)
        out.fail(at + "lambda census " + std::string(to_string(f)));
    }
    if (timed([&] { return tuple_orbit_census(p, 3, PermutationSymmetry::AllPermutations); }) !=
        static_cast<std::int64_t>(partition_omega(p).size()))
      out.fail(at + "n=3 census");
    auto equi = static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Equilateral).size());
    if (timed([&] { return tuple_orbit_census(p, 4, PermutationSymmetry::Alternating); }) != equi)
      out.fail(at + "n=4 alternating census");
    if (timed([&] { return tuple_orbit_census(p, 4, PermutationSymmetry::KleinFour); }) !=
        static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Generic).size()))
      out.fail(at + "n=4 Klein census");
    if (timed([&] { return tuple_orbit_census(p, 4, PermutationSymmetry::SquareDihedral); }) !=
        static_cast<std::int64_t>(enumerate_classes(p, TilingFlavor::Square).size()))
      out.fail(at + "n=4 dihedral census");
    if (q <= 31) {
      auto all = timed([&] { return tuple_orbit_census(p, 4, PermutationSymmetry::AllPermutations); });
      if (all != equi) {
        ++s4_mismatch;
        s4 << " p=" << q << ":" << all << "/" << equi;
      }
    }
  }
  if (out.pass) out.detail << censuses << " censuses, slowest " << slowest << " s";
  if (s4_mismatch) info = "n=4 full symmetric group vs equilateral count (census/expected):" + s4.str();
}

void moduli_cross_check(Outcome& out) {
  int primes = 0;
  for (int q : primes_in(5, 199)) {
    ++primes;
    auto r = run_cross_check(PrimeModulus(q));
    if (!r.passed()) out.fail("p=" + std::to_string(q) + " cross-check failed");
  }
  const std::pair<int, int> spots[] = {{4, 1}, {6, 2}, {12, 7}, {7, 0}};
  for (auto [g, want] : spots)
    if (dim_one_components(g) != want) out.fail("dim_one(" + std::to_string(g) + ")");
  if (out.pass) out.detail << primes << " primes, spot values ok";
}

void structural_censuses(Outcome& out) {
  for (int q : primes_in(5, 47)) {
    PrimeModulus p(q);
    std::string at = "p=" + std::to_string(q) + " ";
    int order8p = 0, order3p = 0, k1 = 0, k3 = 0, k5 = 0;
    for (auto f : kFlavors) {
      for (const auto& cls : enumerate_classes(p, f)) {
        auto aut = gimel_aut_prime(cls, shape_for(f));
        order8p += aut.order() == 8LL * q;
        order3p += aut.order() == 3LL * q;
        if (f == TilingFlavor::Equilateral) {
          k1 += cls.kappa == KappaCase::K1;
          k3 += cls.kappa == KappaCase::K3;
          k5 += cls.kappa == KappaCase::K5;
        }
        if (is_hyperelliptic(cls) != (cls.kappa == KappaCase::K3)) out.fail(at + "hyperelliptic flag vs κ3");
      }
    }
    if (order8p != 1) out.fail(at + "order 8p classes: " + std::to_string(order8p));
    if (order3p != 1) out.fail(at + "order 3p classes: " + std::to_string(order3p));
    if (k1 != 1 || k3 != 1) out.fail(at + "κ1/κ3 family count");
    if ((k5 > 0) != (q % 4 == 1)) out.fail(at + "κ5 presence");
  }
  if (out.pass) out.detail << "primes 5..47";
}

void equation_suite(Outcome& out) {
  int emitted = 0;
  auto rotations_ok = [&](const SuperellipticEquation& eq, PrimeModulus p) {
    for (const auto& r : eq.rotation)
      if (!rotation_multiplicity_check(r.rotation, r.multiplicity, p)) return false;
    return true;
  };
  for (int q : primes_in(5, 47)) {
    PrimeModulus p(q);
    std::string at = "p=" + std::to_string(q) + " ";
    for (const auto& omega : partition_omega(p)) {
      auto eq = lefschetz_equation(p, omega.canonical_k);
      ++emitted;
      if (genus_of(eq) != (q - 1) / 2) out.fail(at + "Lefschetz genus");
      if (!rotations_ok(eq, p)) out.fail(at + "Lefschetz rotation data");
    }
    for (const auto& cls : enumerate_classes(p, TilingFlavor::Equilateral)) {
      auto eq = equilateral_equation(p, cls.head().first, cls.head().second);
      ++emitted;
      if (genus_of(eq) != q - 1) out.fail(at + "equilateral genus");
      if (!rotations_ok(eq, p)) out.fail(at + "equilateral rotation data");
    }
    for (const auto& cls : enumerate_classes(p, TilingFlavor::Square)) {
      auto eq = square_equation(p, cls.head().first, cls.head().second);
      ++emitted;
      if (genus_of(eq) != q - 1) out.fail(at + "square genus");
      if (!rotations_ok(eq, p)) out.fail(at + "square rotation data");
    }
    for (std::complex<double> a : {std::complex<double>{1.0, 0.0}, std::complex<double>{2.0, 0.5}}) {
      auto eq = hyperelliptic_equation(p, a);
      ++emitted;
      if (genus_of(eq) != q - 1) out.fail(at + "hyperelliptic genus");
    }
    if (render(hyperelliptic_equation(p, {1.0, 0.0}), Notation::Unicode) !=
        "y²=x" + to_unicode("^" + std::to_string(2 * q)) + "−1")
      out.fail(at + "y^2=x^2p-1 model");
  }
  const std::pair<SuperellipticEquation, std::string> named[] = {
      {lefschetz_equation(PrimeModulus(7), 2), "y⁷=x(x−1)²"},
      {equilateral_equation(PrimeModulus(7), 1, 1), "y⁷=x³−1"},
      {square_equation(PrimeModulus(5), 2, 4), "y⁵=(x−1)(x−i)²(x+1)³(x+i)⁴"},
  };
  for (const auto& [eq, want] : named)
    if (render(eq, Notation::Unicode) != want) out.fail("model " + want + " rendered as " + render(eq, Notation::Unicode));
  if (out.pass) out.detail << emitted << " equations, named models verbatim";
}

void four_point(Outcome& out) {
  std::mt19937_64 rng(20261015);
  std::normal_distribution<double> normal;
  auto rnd = [&] { return std::complex<double>(normal(rng), normal(rng)); };
  auto close = [](std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(b));
  };
  int configs = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::array<ExtendedComplex, 4> z;
    for (auto& x : z) x = ExtendedComplex::finite(rnd());
    auto base = four_point_parameter(z).value;
    ++configs;
    std::array<int, 4> perm{0, 1, 2, 3};
    while (std::next_permutation(perm.begin(), perm.end())) {
      std::array<ExtendedComplex, 4> y;
      for (int t = 0; t < 4; ++t) y[t] = z[perm[t]];
      if (!close(four_point_parameter(y).value, base)) out.fail("permutation invariance, trial " + std::to_string(trial));
    }
    // Random Moebius map; keep it well conditioned.
    std::complex<double> a = rnd(), b = rnd(), c = rnd(), d = rnd();
    if (std::abs(a * d - b * c) < 0.5) d += 1.0;
    std::array<ExtendedComplex, 4> m;
    for (int t = 0; t < 4; ++t) m[t] = ExtendedComplex::finite((a * z[t].value + b) / (c * z[t].value + d));
    if (!close(four_point_parameter(m).value, base)) out.fail("projective invariance, trial " + std::to_string(trial));
  }
  const std::complex<double> i{0.0, 1.0};
  const std::complex<double> w = std::polar(1.0, 2.0 * 3.14159265358979323846 / 3.0);
  auto sq = four_point_parameter({ExtendedComplex::finite(1.0), ExtendedComplex::finite(i), ExtendedComplex::finite(-1.0),
                                  ExtendedComplex::finite(-i)});
  if (std::abs(sq.value - 1728.0) > 1e-9 * 1728.0) out.fail("j(1,i,-1,-i) != 1728");
  auto eq = four_point_parameter({ExtendedComplex::finite(1.0), ExtendedComplex::finite(w),
                                  ExtendedComplex::finite(w * w), ExtendedComplex::infinity()});
  if (std::abs(eq.value) > 1e-9) out.fail("j(1,w,w^2,inf) != 0");
  if (out.pass) out.detail << configs << " random configurations";
}

}  // namespace

int main() {
  std::string info;
  const std::pair<const char*, std::function<void(Outcome&)>> criteria[] = {
      {"omega table fidelity", omega_fidelity},
      {"lambda table fidelity", lambda_fidelity},
      {"count identities", count_identities},
      {"oracle equivalence", [&](Outcome& o) { oracle_equivalence(o, info); }},
      {"moduli cross-check", moduli_cross_check},
      {"structural censuses", structural_censuses},
      {"equation suite", equation_suite},
      {"four-point parameter", four_point},
  };
  int failed = 0, n = 0;
  for (const auto& [name, run] : criteria) {
    ++n;
    Outcome out;
    try {
      run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    failed += out.pass ? 0 : 1;
    std::printf("%s criterion %d (%s): %s\n", out.pass ? "PASS" : "FAIL", n, name, out.detail.str().c_str());
    if (n == 4 && !info.empty()) std::printf("INFO criterion 4: %s\n", info.c_str());
  }
  std::printf("%d/%d criteria passed\n", n - failed, n);
  return failed == 0 ? 0 : 1;
}
