#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "altes/chirplet.hpp"
#include "altes/detect.hpp"
#include "altes/sweep.hpp"
#include "altes/transform.hpp"

namespace altes::io {

// Signal container: 32-byte little-endian header
//   bytes  0..7   magic "ALTESSIG"
//   bytes  8..11  u32 version (1)
//   bytes 12..15  u32 reserved (0)
//   bytes 16..23  u64 sample count
//   bytes 24..31  f64 dt
// followed by interleaved (re, im) f64 pairs.
void write_signal_binary(const std::filesystem::path& path, const AnalyticSignal& sig);
AnalyticSignal read_signal_binary(const std::filesystem::path& path);

/// CSV with columns index,real,imag; `config` is emitted as a leading comment.
void write_signal_csv(const std::filesystem::path& path, const AnalyticSignal& sig,
                      const std::string& config);
AnalyticSignal read_signal_csv(const std::filesystem::path& path);

/// CSV with columns omega,real,imag,magnitude.
void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s,
                        const std::string& config);

/// CSV with columns omega0,omega_c,lambda,bandwidth,delay_spread,oscillations,n_fft,on_frontier.
void write_sweep_csv(const std::filesystem::path& path, const FrontierResult& fr,
                     const std::string& config, bool frontier_only);

/// Matrix CSV: header row of shift/bin positions, one row per scale/bin.
void write_scalogram_csv(const std::filesystem::path& path, const Scalogram& sc,
                         const std::string& config);
void write_spectrogram_csv(const std::filesystem::path& path, const Spectrogram& sg,
                           const std::string& config);

/// CSV with columns ridge_id,scale_idx,scale,shift,magnitude.
void write_ridges_csv(const std::filesystem::path& path, const std::vector<Ridge>& ridges,
                      const Scalogram& sc, const std::string& config);

std::string detection_report_json(const DetectionReport& rep);
std::string ground_truth_json(const GroundTruth& truth, const BenchmarkSpec& spec);
BenchmarkSpec read_benchmark_spec_json(const std::filesystem::path& path);

/// Format a double with full round-trip precision (%.17g).
std::string fmt(double v);

// --- minimal SVG renderings (derived artifacts; CSVs stay authoritative) ---

void write_line_svg(const std::filesystem::path& path, const std::vector<double>& x,
                    const std::vector<std::vector<double>>& series, const std::string& title);
void write_heatmap_svg(const std::filesystem::path& path,
                       const std::vector<std::vector<double>>& grid, const std::string& title);
void write_scatter_svg(const std::filesystem::path& path, const std::vector<double>& x,
                       const std::vector<double>& y, const std::vector<bool>& highlight,
                       const std::string& title);

}  // namespace altes::io
