#pragma once

// Shared fixtures and small utilities for the unit and acceptance suites.

#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "aapopt/errors.hpp"
#include "aapopt/scenario.hpp"

namespace testsupport {

// Reference urban deployment used throughout the suites: 20 MHz downlink,
// 10 dBm transmit power, 43-degree elevation mask, 0.005 users/m^2, a
// 400 s hover, a 20 Mbps per-UE rate floor, and the fitted quadrotor
// climb/hover energy constants.
inline aapopt::ScenarioParams baseline() {
  aapopt::ScenarioParams p;
  p.h0 = 1.42e-4;
  p.p_t_dbm = 10.0;
  p.p_h_w = 5.0;
  p.bandwidth_hz = 2e7;
  p.noise_psd_dbm_hz = -169.0;
  p.phi_deg = 43.0;
  p.rho_ue = 0.005;
  p.hover_time_s = 400.0;
  p.r0_bps = 2e7;
  p.h_min_m = 10.0;
  p.h_max_m = 150.0;
  p.energy.alpha_cl = 315.0;
  p.energy.beta_cl = -211.261;
  p.energy.alpha_ho = 4.917;
  p.energy.beta_ho = 275.204;
  return p;
}

// Same scenario with every altitude-dependent rotor term removed: only the
// constant communication energy remains.
inline aapopt::ScenarioParams zero_rotor_baseline() {
  aapopt::ScenarioParams p = baseline();
  p.energy = aapopt::EnergyConstants{};
  return p;
}

// Values re-derived by hand from the unit conventions (dBm -> W via
// 10^(x/10) * 1e-3, noise variance = PSD * bandwidth) and frozen here so the
// suites do not depend on the library's own arithmetic.
namespace frozen {
inline constexpr double kPtW = 0.01;
inline constexpr double kSigma2W = 2.5178508235883427e-13;
inline constexpr double kBeta = 145216801.00531045;           // m^4
inline constexpr double kCRate = 7.2255038260169622;          // bits/Hz per m^2
inline constexpr double kHCap = 109.7751947759585;            // m at 20 Mbps
inline constexpr double kRBar100 = 107.23687100246825;        // m
inline constexpr double kNUsers100 = 180.63759565042406;
inline constexpr double kEdgeSnr100 = 1.4521680100531045;
inline constexpr double kSumRate100 = 93502.19791099694;      // bits/Hz
inline constexpr double kEcl100 = 31288.739;                  // J
inline constexpr double kEho100 = 306761.6;                   // J
inline constexpr double kEc = 2004.0;                         // J
inline constexpr double kGee100 = 0.27496251977245595;        // bits/(J*Hz)
inline constexpr double kHOpt = 59.432636893783027;           // m, interior GEE argmax
inline constexpr double kGeeOpt = 0.37741876264615432;        // bits/(J*Hz)
inline constexpr double kHRateArgmax = 78.008095809372449;    // m, sum-rate argmax
inline constexpr double kRateCrossover = 73196281.73629795;   // bps where the cap binds
}  // namespace frozen

inline bool rel_close(double a, double b, double tol) {
  const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
  return std::fabs(a - b) <= tol * scale;
}

// Draws scenario parameters uniformly from wide physical ranges until the
// draw passes validation and has a nonempty altitude interval.
inline aapopt::ScenarioParams random_feasible_scenario(std::mt19937_64& rng) {
  auto uni = [&rng](double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
  };
  for (int attempt = 0; attempt < 1000; ++attempt) {
    aapopt::ScenarioParams p;
    p.h0 = 1.42e-4 * uni(0.5, 2.0);
    p.p_t_dbm = uni(0.0, 20.0);
    p.p_h_w = uni(1.0, 10.0);
    p.bandwidth_hz = 2e7;
    p.noise_psd_dbm_hz = uni(-172.0, -160.0);
    p.phi_deg = uni(30.0, 60.0);
    p.rho_ue = uni(0.001, 0.02);
    p.hover_time_s = uni(100.0, 1000.0);
    p.r0_bps = uni(1e6, 4e7);
    p.h_min_m = uni(1.0, 20.0);
    p.h_max_m = uni(80.0, 300.0);
    p.energy.alpha_cl = uni(150.0, 500.0);
    p.energy.beta_cl = uni(-300.0, 100.0);
    p.energy.alpha_ho = uni(2.0, 8.0);
    p.energy.beta_ho = uni(100.0, 400.0);
    try {
      (void)aapopt::derive_coefficients(p);
      return p;
    } catch (const aapopt::Error&) {
      // Invalid or infeasible draw (e.g. negative climb energy at h_min or a
      // rate cap below h_min); try again.
    }
  }
  throw std::runtime_error("could not draw a feasible scenario");
}

// --- filesystem helpers -----------------------------------------------------

// Fresh unique directory under the system temp root.
inline std::filesystem::path make_temp_dir(const std::string& label) {
  static std::atomic<int> counter{0};
  const auto base = std::filesystem::temp_directory_path();
  const auto dir = base / ("aapopt_" + label + "_" + std::to_string(::getpid()) + "_" +
                           std::to_string(counter.fetch_add(1)));
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

inline std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.push_back("");
  return fields;
}

// Blanks one zero-based CSV column in every data row; used to compare solve
// outputs across runs without their wall-clock timing field.
inline std::string mask_csv_column(const std::string& csv, std::size_t column) {
  std::ostringstream out;
  for (const std::string& line : split_lines(csv)) {
    if (!line.empty() && line[0] == '#') {
      out << line << '\n';
      continue;
    }
    std::vector<std::string> fields = split_csv(line);
    if (column < fields.size()) fields[column] = "*";
    for (std::size_t i = 0; i < fields.size(); ++i) {
      if (i) out << ',';
      out << fields[i];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace testsupport
