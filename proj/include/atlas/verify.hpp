#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "atlas/json_io.hpp"
#include "atlas/oracle.hpp"
#include "atlas/render.hpp"

namespace atlas {

struct VerifyItem {
  std::string suite;
  int p = 0;
  bool pass = true;
  std::string detail;
};

struct VerifyReport {
  int max_p = 0;
  std::vector<VerifyItem> items;

  int failures() const;
  bool passed() const { return failures() == 0; }
};

/// Runs the fixture, count, oracle, κ-family, moduli and equation-template
/// suites for every prime up to max_p. Oracle suites stop at `oracle_bound`.
VerifyReport run_verification(int max_p, int oracle_bound = kDefaultOracleBound);

/// Rebuilds the atlas for each prime up to max_p and compares it with the
/// persisted file in `dir`.
VerifyReport verify_atlas_dir(const std::filesystem::path& dir, int max_p);

Json to_json(const VerifyReport& report);
std::string render_verify(const VerifyReport& report, OutputFormat format);

}  // namespace atlas
