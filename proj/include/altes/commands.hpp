#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "altes/common.hpp"

namespace altes::cmd {

// Command bodies live in the library so they can be driven both by the CLI
// and by tests. Each returns a process exit code: 0 success, 1 detection or
// verification failure, 2 usage/config error. Output files are removed again
// if a command aborts partway.

struct SynthConfig {
  bool classic = false;  // parameterize via {nu, k, c} instead of {omega0, ...}
  double nu = 0.0, k = 0.0, c = 0.0;
  double omega0 = 0.0;
  std::optional<double> omega_c;
  std::optional<double> bandwidth;
  double lambda = 0.0;
  double kc_db = -40.0;
  std::size_t n_fft = 4096;
  bool pi_units = false;
  bool plot = false;
  std::filesystem::path out_dir = ".";
};
int run_synth(const SynthConfig& cfg);

struct SweepConfig {
  std::size_t n_omega0 = 24, n_ratio = 16, n_lambda = 10;
  double omega0_min = kPi / 32.0, omega0_max = 3.0 * kPi / 4.0;
  double lambda_min = 0.05, lambda_max = 0.95;
  double kc_db = -40.0;
  bool pi_units = false;
  bool plot = false;
  std::filesystem::path out_dir = ".";
};
int run_sweep(const SweepConfig& cfg);

struct BenchmarkConfig {
  std::optional<std::filesystem::path> spec_path;  // JSON benchmark spec
  std::optional<double> snr_db;
  std::optional<std::uint64_t> seed;
  bool noiseless = false;
  // analyzing chirplet
  double omega0 = kPi / 5.0, omega_c = kPi, lambda = 0.5;
  double kc_db = -40.0;
  // transforms
  std::size_t window_len = 128, hop = 64;
  double scale_min = 0.6, scale_max = 1.0 / 0.6;
  std::size_t n_scales = 96;
  double morlet_center = 0.8 * kPi;
  double morlet_scale_factor = 10.0;
  // detection
  std::size_t max_ridges = 3, min_len = 0 /* 0 = n_scales/3 */, tol = 16;
  bool pi_units = false;
  bool plot = false;
  std::filesystem::path out_dir = ".";
};
int run_benchmark(const BenchmarkConfig& cfg);

struct VerifyConfig {
  double omega0 = kPi / 5.0, omega_c = kPi, lambda = 0.5;
  double kc_db = -40.0;
  bool pi_units = false;
  std::optional<std::filesystem::path> out;  // JSON report location
};
int run_verify(const VerifyConfig& cfg);

}  // namespace altes::cmd
