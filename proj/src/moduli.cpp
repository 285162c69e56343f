#include "atlas/moduli.hpp"

#include <algorithm>

#include "atlas/automorphisms.hpp"
#include "atlas/error.hpp"
#include "atlas/lefschetz.hpp"
#include "atlas/parameter_space.hpp"

namespace atlas {

namespace {

std::string set_text(const std::vector<int>& members) {
  std::string out = "{";
  for (std::size_t t = 0; t < members.size(); ++t) {
    if (t) out += ",";
    out += std::to_string(members[t]);
  }
  return out + "}";
}

std::vector<Witness> cyclic_lefschetz(PrimeModulus p) {
  std::vector<Witness> out;
  for (const auto& omega : partition_omega(p))
    if (lefschetz_aut(omega) == AutGroupDescriptor::cyclic(p.value()))
      out.push_back({"lefschetz", p.value(), set_text(omega.members)});
  return out;
}

std::vector<Witness> cyclic_components(PrimeModulus p) {
  std::vector<Witness> out;
  for (const auto& c : build_component_graph(p).components) {
    ResiduePair head = c.sheets.front();
    LambdaClass cls = lambda_class(GluingPair::make(p, head.first, head.second), TilingFlavor::Generic);
    if (gimel_aut_prime(cls, TilingShape::generic({})) == AutGroupDescriptor::cyclic(p.value()))
      out.push_back({"gimel", p.value(),
                     std::string(to_string(c.type)) + " " + std::string(to_string(c.kappa)) + " " + head.dotted()});
  }
  return out;
}

CheckResult compare(std::string name, std::int64_t expected, std::int64_t actual) {
  CheckResult r{std::move(name), expected == actual ? CheckStatus::Pass : CheckStatus::Fail, expected, actual, {}};
  if (r.status == CheckStatus::Fail)
    r.detail = "closed form " + std::to_string(expected) + " vs census " + std::to_string(actual);
  return r;
}

bool all_pass(const std::vector<CheckResult>& checks) {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::Fail; });
}

}  // namespace

std::string_view to_string(CheckStatus s) noexcept {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

ModuliSubscheme ModuliSubscheme::make(PrimeModulus p, int g_prime, std::vector<int> branch_data) {
  const int q = p.value();
  long long sum = 0;
  for (int a : branch_data) {
    if (a < 1 || a > q - 1)
      throw Error(ErrorCode::InvalidExponents, "branch data entries must lie in 1.." + std::to_string(q - 1));
    sum += a;
  }
  if (sum % q != 0) throw Error(ErrorCode::InvalidExponents, "branch data must sum to 0 mod p");
  const int n = static_cast<int>(branch_data.size());
  ModuliSubscheme s;
  s.p = q;
  s.g_prime = g_prime;
  s.dimension = subscheme_dimension(g_prime, n);
  long long two_g_minus_2 = static_cast<long long>(q) * (2LL * g_prime - 2) + static_cast<long long>(n) * (q - 1);
  s.genus = static_cast<int>(two_g_minus_2 / 2 + 1);
  s.branch_data = std::move(branch_data);
  return s;
}

int subscheme_dimension(int g_prime, int n) {
  if (g_prime < 0 || n < 0) throw Error(ErrorCode::NegativeDimension, "g' and n must be nonnegative");
  int d = 3 * g_prime - 3 + n;
  if (d < 0) throw Error(ErrorCode::NegativeDimension, "3g'-3+n = " + std::to_string(d) + " is negative");
  return d;
}

int isolated_singularities(int g) {
  if (g < 2) throw Error(ErrorCode::OutOfRange, "genus must be at least 2");
  if (g <= 3) return 1;
  int q = 2 * g + 1;
  if (!is_prime(static_cast<std::uint64_t>(q))) return 0;
  return q % 3 == 2 ? (g - 2) / 3 : (g - 3) / 3;
}

int dim_one_components(int g) {
  if (g < 2) throw Error(ErrorCode::OutOfRange, "genus must be at least 2");
  int q = g + 1;
  if (q <= 3 || !is_prime(static_cast<std::uint64_t>(q))) return 0;
  return static_cast<int>(static_cast<long long>(g) * (g + 2) / 24);
}

bool SingularLocusReport::passed() const { return all_pass(checks); }
bool CrossCheckReport::passed() const { return all_pass(checks); }

SingularLocusReport singular_locus_report(int g) {
  SingularLocusReport r;
  r.g = g;
  r.isolated = isolated_singularities(g);
  r.dim_one = dim_one_components(g);
  if (g <= 3) r.notes.push_back("small-genus clause: one isolated singularity");
  int q = 2 * g + 1;
  if (is_prime(static_cast<std::uint64_t>(q))) {
    auto w = cyclic_lefschetz(PrimeModulus(q));
    if (g >= 4) r.checks.push_back(compare("isolated", r.isolated, static_cast<std::int64_t>(w.size())));
    r.witnesses.insert(r.witnesses.end(), w.begin(), w.end());
  } else if (g >= 4) {
    r.notes.push_back("2g+1 composite: isolated count taken as 0 (interpretive extension)");
  }
  if (g + 1 > 3 && is_prime(static_cast<std::uint64_t>(g + 1))) {
    auto w = cyclic_components(PrimeModulus(g + 1));
    r.checks.push_back(compare("dim_one", r.dim_one, static_cast<std::int64_t>(w.size())));
    r.witnesses.insert(r.witnesses.end(), w.begin(), w.end());
  }
  return r;
}

CrossCheckReport run_cross_check(PrimeModulus p) {
  const int q = p.value();
  if (q <= 3) throw Error(ErrorCode::UnsupportedPrime, "cross check needs p > 3");
  CrossCheckReport r;
  r.p = q;
  const int g = (q - 1) / 2;
  auto lw = cyclic_lefschetz(p);
  if (g >= 4) {
    r.checks.push_back(compare("isolated(" + std::to_string(g) + ")", isolated_singularities(g),
                               static_cast<std::int64_t>(lw.size())));
  } else {
    r.checks.push_back({"isolated(" + std::to_string(g) + ")", CheckStatus::Skipped, isolated_singularities(g),
                        static_cast<std::int64_t>(lw.size()), "small-genus clause overrides the census"});
    r.notes.push_back("g = " + std::to_string(g) + " uses the small-genus clause");
  }
  auto gw = cyclic_components(p);
  r.checks.push_back(compare("dim_one(" + std::to_string(q - 1) + ")", dim_one_components(q - 1),
                             static_cast<std::int64_t>(gw.size())));
  r.witnesses = std::move(lw);
  r.witnesses.insert(r.witnesses.end(), gw.begin(), gw.end());
  return r;
}

CrossCheckReport cross_check(PrimeModulus p) {
  CrossCheckReport r = run_cross_check(p);
  if (!r.passed()) {
    std::string msg = "cross check failed at p=" + std::to_string(p.value());
    for (const auto& c : r.checks)
      if (c.status == CheckStatus::Fail) msg += "; " + c.name + ": " + c.detail;
    throw Error(ErrorCode::VerificationFailure, msg);
  }
  return r;
}

}  // namespace atlas
