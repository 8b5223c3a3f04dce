#pragma once

#include <span>
#include <string>
#include <vector>

#include "altes/chirplet.hpp"

namespace altes {

/// One measured grid point of the parameter study.
struct SweepRecord {
  ChirpletParams params;
  double bandwidth = 0.0;     ///< measured -40 dB width, rad/s
  double delay_spread = 0.0;  ///< measured -40 dB envelope width, samples
  double oscillations = 0.0;  ///< full oscillations inside the delay spread
  std::size_t n_fft_used = 0;
  bool fits = true;  ///< false when the envelope exceeds the maximum transform size
};

/// Pareto-minimal subset of (delay_spread, bandwidth).
struct FrontierResult {
  std::vector<SweepRecord> records;
  std::vector<std::size_t> frontier;  ///< indices into records, ascending
};

/// Parameter grid: omega0 and omega_c/omega0 log-spaced, the top ratio chosen
/// so omega_c = pi is always a grid point; lambda linear.
struct SweepGrid {
  std::size_t n_omega0 = 24;
  std::size_t n_ratio = 16;
  std::size_t n_lambda = 10;
  double omega0_min = kPi / 32.0;
  double omega0_max = 3.0 * kPi / 4.0;
  double lambda_min = 0.05;
  double lambda_max = 0.95;
  double kc_level = kDefaultKcLevel;

  std::size_t size() const { return n_omega0 * n_ratio * n_lambda; }
  std::vector<ChirpletParams> points() const;
};

/// Largest transform size a sweep record may use.
inline constexpr std::size_t kMaxSweepFft = 1u << 16;

/// Measure bandwidth, delay spread and oscillation count at every grid point.
/// The transform size starts at 256 and doubles until the envelope fits with
/// at least 4 guard samples each side; records that still do not fit at 2^16
/// are flagged, not dropped.
std::vector<SweepRecord> run_sweep(const SweepGrid& grid);

/// Measure one parameter set (the per-record body of run_sweep).
SweepRecord measure_record(const ChirpletParams& p);

/// Pareto-minimal set under (delay_spread, bandwidth); ties kept. Records
/// flagged as not fitting are excluded from the frontier but retained.
FrontierResult pareto_frontier(std::span<const SweepRecord> records);

/// Advisory parameter bounds for discrete-time implementation.
struct Table2Verdict {
  struct Check {
    std::string bound;
    bool pass = false;
    std::string note;
  };
  std::vector<Check> checks;

  bool all_pass() const;
  std::string summary() const;
};

/// omega0 < pi/4 (wideband chirping), omega_c = pi (critical sampling),
/// lambda in (1/4, 3/4) or (4/3, 4) (bounded oscillation count).
Table2Verdict table2_gate(const ChirpletParams& p);

/// Smallest power of two >= the measured delay spread in samples.
/// Throws if the spread exceeds 2^16.
std::size_t fft_size_advisor(const ChirpletParams& p);

}  // namespace altes
