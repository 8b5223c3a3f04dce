#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "altes/chirplet.hpp"

namespace altes {

/// Identifier of the noise generator, recorded in outputs for replay.
inline constexpr const char* kNoiseAlgorithm = "mt19937_64/box-muller-v1";

struct ChirpPlacement {
  ChirpletParams params;
  std::size_t center = 0;  ///< envelope-peak sample position
  double amplitude = 1.0;
};

/// Recipe for the synthetic detection benchmark: log-periodic chirps plus a
/// tone in complex white Gaussian noise at a calibrated SNR.
struct BenchmarkSpec {
  std::vector<ChirpPlacement> chirps;
  double tone_freq = kPi / 3.0;  ///< rad/sample
  double tone_amplitude = 0.05;
  double snr_db = 0.0;
  bool noiseless = false;  ///< skip the noise term entirely (snr -> infinity)
  std::size_t total_len = 4096;
  std::uint64_t seed = 0;
};

struct GroundTruth {
  std::vector<std::size_t> chirp_centers;
  AnalyticSignal clean_signal;  ///< chirps + tone, no noise
};

/// Unit-energy chirp with its envelope peak moved to sample n_fft/2.
AnalyticSignal make_lp_chirp(const ChirpletParams& p, std::size_t n_fft);

/// Deterministic benchmark signal. Noise is scaled against the measured power
/// of the summed clean components so the realized SNR equals snr_db exactly.
std::pair<AnalyticSignal, GroundTruth> make_benchmark(const BenchmarkSpec& spec);

/// Three Table-II-compliant chirps with distinct chirp rates around 1/2,
/// a pi/3 tone, 0 dB SNR, 4096 samples, fixed seed.
BenchmarkSpec default_benchmark();

}  // namespace altes
