// Command-line front end: one subcommand per table or check.
// Exit status: 0 success, 1 invalid input, 2 verification failure.

#include <CLI11.hpp>

#include <array>
#include <complex>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "atlas/atlas_file.hpp"
#include "atlas/error.hpp"
#include "atlas/json_io.hpp"
#include "atlas/render.hpp"
#include "atlas/verify.hpp"

namespace {

constexpr int kExitInvalid = 1;
constexpr int kExitVerification = 2;

atlas::OutputFormat format_from(const std::string& s, bool allow_dot = false) {
  auto f = atlas::parse_format(s);
  if (!f || (*f == atlas::OutputFormat::Dot && !allow_dot))
    throw atlas::Error(atlas::ErrorCode::ParseError, "unsupported format '" + s + "'");
  return *f;
}

std::complex<double> parse_complex(const std::string& s) {
  try {
    std::size_t used = 0;
    auto comma = s.find(',');
    if (comma == std::string::npos) {
      double re = std::stod(s, &used);
      if (used != s.size()) throw std::invalid_argument(s);
      return {re, 0.0};
    }
    std::string a = s.substr(0, comma), b = s.substr(comma + 1);
    double re = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(s);
    double im = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(s);
    return {re, im};
  } catch (const std::logic_error&) {
    throw atlas::Error(atlas::ErrorCode::ParseError, "expected re,im but got '" + s + "'");
  }
}

atlas::ExtendedComplex parse_point(const std::string& s) {
  if (s == "inf") return atlas::ExtendedComplex::infinity();
  return atlas::ExtendedComplex::finite(parse_complex(s));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification tables for Riemann surfaces with an automorphism of prime order p > g"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&format](CLI::App* cmd, bool dot = false) {
    cmd->add_option("--format", format, dot ? "text, json, csv or dot" : "text, json or csv")->capture_default_str();
  };

  std::int64_t p = 0;
  auto add_prime = [&p](CLI::App* cmd) { cmd->add_option("-p,--prime", p, "odd prime")->required(); };

  auto* lefschetz = app.add_subcommand("lefschetz", "three-point classes Ω_k^p");
  add_prime(lefschetz);
  add_format(lefschetz);

  auto* domains = app.add_subcommand("domains", "the twelve special domains of (i,j)");
  std::optional<std::int64_t> di, dj;
  std::vector<std::string> pairs;
  add_prime(domains);
  domains->add_option("-i", di, "first residue");
  domains->add_option("-j", dj, "second residue");
  domains->add_option("--pair", pairs, "a pair I.J; repeat for more columns");
  add_format(domains);

  auto* gimel = app.add_subcommand("gimel", "four-point classes for one tiling");
  std::string tiling = "generic";
  add_prime(gimel);
  gimel->add_option("--tiling", tiling, "generic, equilateral or square")->capture_default_str();
  add_format(gimel);

  auto* components = app.add_subcommand("components", "components of the parameter space");
  add_prime(components);
  add_format(components, true);

  auto* moduli = app.add_subcommand("moduli", "singular-locus counts for genus g");
  int g = 0;
  moduli->add_option("-g,--genus", g, "genus")->required();
  add_format(moduli);

  auto* equation = app.add_subcommand("equation", "affine models");
  equation->require_subcommand(1);
  bool ascii = false;
  int k = 0, n = 0, m = 0, ea = 0, eb = 0;
  std::string param = "1";
  auto* eq_lef = equation->add_subcommand("lefschetz", "y^p = x(x-1)^k");
  add_prime(eq_lef);
  eq_lef->add_option("-k", k, "exponent")->required();
  auto* eq_hyp = equation->add_subcommand("hyperelliptic", "y^2 = (x^p-a^p)(x^p+a^-p)");
  add_prime(eq_hyp);
  eq_hyp->add_option("-a", param, "nonzero complex a as re,im")->capture_default_str();
  auto* eq_equi = equation->add_subcommand("equilateral", "y^p = (x-1)(x-w)^n(x-w^2)^m");
  add_prime(eq_equi);
  eq_equi->add_option("-n", n, "exponent of x-w")->required();
  eq_equi->add_option("-m", m, "exponent of x-w^2")->required();
  auto* eq_sq = equation->add_subcommand("square", "y^p = (x-1)(x-i)^a(x+1)^c(x+i)^b");
  add_prime(eq_sq);
  eq_sq->add_option("-a", ea, "exponent of x-i")->required();
  eq_sq->add_option("-b", eb, "exponent of x+i")->required();
  for (auto* sub : {eq_lef, eq_hyp, eq_equi, eq_sq}) {
    add_format(sub);
    sub->add_flag("--ascii", ascii, "caret exponents instead of superscripts");
  }

  auto* fourpoint = app.add_subcommand("fourpoint", "j-invariant of four points on the line");
  std::vector<std::string> points;
  fourpoint->add_option("--point", points, "re,im or inf; give exactly four")->required()->expected(4);
  add_format(fourpoint);

  auto* verify = app.add_subcommand("verify", "run the verification suites");
  int max_p = 0;
  int oracle_bound = atlas::kDefaultOracleBound;
  std::string atlas_dir;
  verify->add_option("--max-p", max_p, "largest prime to check")->required();
  verify->add_option("--oracle-bound", oracle_bound, "largest prime for brute-force censuses")->capture_default_str();
  verify->add_option("--atlas-dir", atlas_dir, "compare against a persisted atlas instead");
  add_format(verify);

  auto* persist = app.add_subcommand("persist", "write one atlas file per prime");
  std::string out_dir;
  persist->add_option("--out", out_dir, "output directory")->required();
  persist->add_option("--max-p", max_p, "largest prime")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }

  try {
    std::string output;
    if (lefschetz->parsed()) {
      output = atlas::render_lefschetz(atlas::PrimeModulus(p), format_from(format));
    } else if (domains->parsed()) {
      std::vector<atlas::ResiduePair> cols;
      if (di || dj) {
        if (!di || !dj) throw atlas::Error(atlas::ErrorCode::ParseError, "-i and -j go together");
        cols.push_back({static_cast<int>(*di), static_cast<int>(*dj)});
        atlas::PrimeModulus q(p);
        if (!atlas::sigma_contains(q, *di, *dj))
          throw atlas::Error(atlas::ErrorCode::NotInSigma, "(" + std::to_string(*di) + "," + std::to_string(*dj) +
                                                               ") is not a gluing pair mod " + std::to_string(p));
      }
      for (const auto& s : pairs) cols.push_back(atlas::parse_dotted_pair(s));
      if (cols.empty()) throw atlas::Error(atlas::ErrorCode::ParseError, "give -i/-j or --pair");
      output = atlas::render_domains(atlas::PrimeModulus(p), cols, format_from(format));
    } else if (gimel->parsed()) {
      auto flavor = atlas::parse_flavor(tiling);
      if (!flavor) throw atlas::Error(atlas::ErrorCode::ParseError, "unknown tiling '" + tiling + "'");
      output = atlas::render_gimel(atlas::PrimeModulus(p), *flavor, format_from(format));
    } else if (components->parsed()) {
      output = atlas::render_components(atlas::PrimeModulus(p), format_from(format, true));
    } else if (moduli->parsed()) {
      output = atlas::render_moduli(g, format_from(format));
    } else if (equation->parsed()) {
      atlas::PrimeModulus q(p);
      atlas::SuperellipticEquation eq;
      if (eq_lef->parsed()) eq = atlas::lefschetz_equation(q, k);
      else if (eq_hyp->parsed()) eq = atlas::hyperelliptic_equation(q, parse_complex(param));
      else if (eq_equi->parsed()) eq = atlas::equilateral_equation(q, n, m);
      else eq = atlas::square_equation(q, ea, eb);
      output = atlas::render_equation(eq, format_from(format), ascii ? atlas::Notation::Ascii : atlas::Notation::Unicode);
    } else if (fourpoint->parsed()) {
      std::array<atlas::ExtendedComplex, 4> z;
      for (std::size_t t = 0; t < 4; ++t) z[t] = parse_point(points[t]);
      output = atlas::render_fourpoint(atlas::four_point_parameter(z), format_from(format));
    } else if (verify->parsed()) {
      auto report = atlas_dir.empty() ? atlas::run_verification(max_p, oracle_bound)
                                      : atlas::verify_atlas_dir(atlas_dir, max_p);
      std::cout << atlas::render_verify(report, format_from(format));
      return report.passed() ? 0 : kExitVerification;
    } else if (persist->parsed()) {
      for (const auto& path : atlas::persist_atlas(out_dir, max_p)) output += path.string() + "\n";
    }
    std::cout << output;
    return 0;
  } catch (const atlas::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == atlas::ErrorCode::VerificationFailure ? kExitVerification : kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}
