#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "fansub/explorer.hpp"
#include "fansub/pressure.hpp"
#include "fansub/verifier.hpp"

namespace fansub {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitExhausted = 3;

struct PressureConfig {
  enum class Kind { polytropic, tabulated };
  Kind kind = Kind::polytropic;
  double coefficient = 1.0;
  double exponent = 2.0;
  std::filesystem::path csv_path;
};

struct RunConfig {
  PressureConfig pressure;
  double rho0 = 0.0;
  double u0 = 0.0;
  std::optional<double> rho_star;  // default: rho0
  double theta = 0.1;
  std::optional<double> tol_eq;
  std::optional<double> tol_strict;

  // construct / verify
  std::filesystem::path subsolution_out = "subsolution.json";
  std::filesystem::path report_out = "report.json";
  std::filesystem::path candidate_path;

  // scan
  std::optional<GridAxis> a_axis;
  std::optional<GridAxis> eps_axis;
  std::size_t grid_cap = 1000000;
  bool serial = false;
  std::filesystem::path csv_out = "scan.csv";
  std::filesystem::path svg_out = "scan.svg";

  // infeasible
  int n_interior = 1;
  std::uint64_t seed = 1;
  std::size_t random_samples = 0;
  std::filesystem::path summary_out;
  std::filesystem::path cells_csv;
};

/// Load a config JSON document (same keys as the flag names). Flags given on
/// the command line override it afterwards.
RunConfig config_from_json_file(const std::filesystem::path& path);

/// Parse "polytropic:K,gamma" or "tabulated:path.csv".
PressureConfig parse_pressure_spec(const std::string& spec);

/// All violations of the datum/pressure invariants, empty when valid.
std::vector<std::string> validate_config(const RunConfig& config);

PressureLaw make_law(const PressureConfig& pressure);

int cmd_construct(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_scan(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_infeasible(const RunConfig& config, std::ostream& out, std::ostream& err);

/// The per-condition table printed by construct and verify.
void print_report_table(const VerificationReport& report, std::ostream& out);

}  // namespace fansub
