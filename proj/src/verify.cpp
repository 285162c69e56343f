#include "atlas/verify.hpp"

#include <algorithm>

#include "atlas/fixtures.hpp"
#include "atlas/atlas_file.hpp"
#include "atlas/error.hpp"
#include "atlas/lefschetz.hpp"
#include "atlas/moduli.hpp"

namespace atlas {

namespace {

std::string mismatch_text(std::int64_t expected, std::int64_t actual) {
  return "expected " + std::to_string(expected) + ", got " + std::to_string(actual);
}

void compare(VerifyReport& r, std::string suite, int p, std::int64_t expected, std::int64_t actual) {
  r.items.push_back({std::move(suite), p, expected == actual, expected == actual ? "" : mismatch_text(expected, actual)});
}

void fixture_item(VerifyReport& r, std::string suite, const FixtureReport& f) {
  VerifyItem item{std::move(suite), f.p, f.passed(), {}};
  if (auto bad = f.first_failure())
    item.detail = "column " + bad->column + " row " + bad->row + ": printed " + bad->expected + ", computed " + bad->actual;
  else if (!f.mismatches.empty())
    item.detail = std::to_string(f.mismatches.size()) + " listed errata";
  r.items.push_back(std::move(item));
}

bool contains(const auto& range, int p) { return std::find(range.begin(), range.end(), p) != range.end(); }

void template_item(VerifyReport& r, PrimeModulus p) {
  const int q = p.value();
  // κ1 square model (x-1)(x^2+1)(x+1)^(p-3) and the hyperelliptic square
  // model (x^2-1)(x^2+1)^(p-1): both must have multiplicity sum 0 mod p.
  std::vector<std::string> bad;
  auto k1 = square_equation(p, 1, 1);
  if (render(k1) != "y^" + std::to_string(q) + "=(x-1)(x^2+1)(x+1)^" + std::to_string(q - 3)) bad.push_back("κ1 model");
  auto k3 = square_equation(p, q - 1, q - 1);
  if (render(k3) != "y^" + std::to_string(q) + "=(x^2-1)(x^2+1)^" + std::to_string(q - 1)) bad.push_back("κ3 model");
  for (const auto* eq : {&k1, &k3})
    if (total_degree(*eq) % q != 0 || genus_of(*eq) != q - 1) bad.push_back("sum or genus");
  VerifyItem item{"square-templates", q, bad.empty(), {}};
  for (const auto& b : bad) item.detail += (item.detail.empty() ? "" : "; ") + b;
  r.items.push_back(std::move(item));
}

}  // namespace

int VerifyReport::failures() const {
  return static_cast<int>(std::count_if(items.begin(), items.end(), [](const VerifyItem& i) { return !i.pass; }));
}

VerifyReport run_verification(int max_p, int oracle_bound) {
  if (max_p < 3) throw Error(ErrorCode::OutOfRange, "max-p must be at least 3");
  VerifyReport r;
  r.max_p = max_p;
  for (int q : primes_in(3, max_p)) {
    PrimeModulus p(q);
    if (contains(kOmegaFixturePrimes, q)) fixture_item(r, "omega-fixture", omega_fixture_check(p));
    if (contains(kLambdaFixturePrimes, q)) fixture_item(r, "lambda-fixture", kappa_fixture_check(p));

    if (q > 3) compare(r, "count-lefschetz", q, lefschetz_count(p), static_cast<std::int64_t>(partition_omega(p).size()));
    std::int64_t sizes[3];
    const TilingFlavor flavors[3] = {TilingFlavor::Generic, TilingFlavor::Equilateral, TilingFlavor::Square};
    for (int f = 0; f < 3; ++f) {
      sizes[f] = static_cast<std::int64_t>(enumerate_classes(p, flavors[f]).size());
      compare(r, "count-" + std::string(to_string(flavors[f])), q, gimel_class_count(p, flavors[f]), sizes[f]);
    }
    if (q > 3) compare(r, "count-identity", q, sizes[0], 3 * (sizes[1] - 1) + 1);
    {
      ComponentCounts closed = component_counts_closed_form(p), built = component_counts(p);
      bool ok = closed == built;
      r.items.push_back({"count-components", q, ok,
                         ok ? "" : "closed form total " + std::to_string(closed.total) + ", graph " + std::to_string(built.total)});
    }

    if (q <= oracle_bound) {
      for (int f = 0; f < 3; ++f)
        compare(r, "oracle-lambda-" + std::string(to_string(flavors[f])), q, sizes[f],
                lambda_orbit_census(p, flavors[f], oracle_bound));
      if (q > 3) {
        compare(r, "oracle-tuple-3", q, lefschetz_count(p),
                tuple_orbit_census(p, 3, PermutationSymmetry::AllPermutations, oracle_bound));
        compare(r, "oracle-tuple-4-alternating", q, sizes[1],
                tuple_orbit_census(p, 4, PermutationSymmetry::Alternating, oracle_bound));
        compare(r, "oracle-tuple-4-klein", q, sizes[0], tuple_orbit_census(p, 4, PermutationSymmetry::KleinFour, oracle_bound));
        compare(r, "oracle-tuple-4-dihedral", q, sizes[2],
                tuple_orbit_census(p, 4, PermutationSymmetry::SquareDihedral, oracle_bound));
      }
      auto bad = kappa_generator_check(p, oracle_bound);
      VerifyItem item{"kappa-families", q, bad.empty(), {}};
      for (const auto& b : bad) item.detail += (item.detail.empty() ? "" : "; ") + b;
      r.items.push_back(std::move(item));
    }

    if (q > 3) {
      CrossCheckReport cc = run_cross_check(p);
      VerifyItem item{"moduli", q, cc.passed(), {}};
      for (const auto& c : cc.checks)
        if (c.status == CheckStatus::Fail) item.detail += c.name + ": " + c.detail + " ";
      r.items.push_back(std::move(item));
      template_item(r, p);
    }
  }
  return r;
}

VerifyReport verify_atlas_dir(const std::filesystem::path& dir, int max_p) {
  if (max_p < 3) throw Error(ErrorCode::OutOfRange, "max-p must be at least 3");
  VerifyReport r;
  r.max_p = max_p;
  for (int q : primes_in(3, max_p)) {
    auto path = atlas_path(dir, q);
    VerifyItem item{"atlas", q, true, {}};
    if (!std::filesystem::exists(path)) {
      item.pass = false;
      item.detail = "missing " + path.string();
    } else {
      Json stored = load_atlas(path);
      Json fresh = build_atlas(PrimeModulus(q));
      if (stored != fresh) {
        item.pass = false;
        Json diff = Json::diff(stored, fresh);
        item.detail = std::to_string(diff.size()) + " differences, first at " + diff[0].value("path", std::string{});
      }
    }
    r.items.push_back(std::move(item));
  }
  return r;
}

Json to_json(const VerifyReport& report) {
  Json items = Json::array();
  for (const auto& i : report.items)
    items.push_back({{"suite", i.suite}, {"p", i.p}, {"pass", i.pass}, {"detail", i.detail}});
  return {{"max_p", report.max_p}, {"failures", report.failures()}, {"passed", report.passed()}, {"items", items}};
}

std::string render_verify(const VerifyReport& report, OutputFormat format) {
  if (format == OutputFormat::Json) return document("verify", to_json(report)).dump(2) + "\n";
  if (format == OutputFormat::Csv) {
    std::string out = "suite,p,pass,detail\n";
    for (const auto& i : report.items)
      out += csv_field(i.suite) + "," + std::to_string(i.p) + "," + (i.pass ? "true" : "false") + "," +
             csv_field(i.detail) + "\n";
    return out;
  }
  if (format == OutputFormat::Dot) throw Error(ErrorCode::OutOfRange, "dot output is only available for components");
  std::string out;
  for (const auto& i : report.items) {
    out += (i.pass ? "PASS " : "FAIL ") + i.suite + " p=" + std::to_string(i.p);
    if (!i.detail.empty()) out += " (" + i.detail + ")";
    out += "\n";
  }
  return out + "checks=" + std::to_string(report.items.size()) + " failures=" + std::to_string(report.failures()) + "\n";
}

}  // namespace atlas
