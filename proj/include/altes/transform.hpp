#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "altes/chirplet.hpp"

namespace altes {

/// Complex CWT coefficient grid over (scale, shift). Shifts enumerate every
/// sample of the analyzed signal.
struct Scalogram {
  enum class Wavelet { altes, morlet };

  std::vector<std::vector<cplx>> coefficients;  // [scale index][shift index]
  std::vector<double> scales;                   // strictly increasing, > 0
  std::vector<double> shifts;                   // sample positions
  Wavelet wavelet_id = Wavelet::altes;

  std::size_t n_scales() const { return coefficients.size(); }
  std::size_t n_shifts() const { return coefficients.empty() ? 0 : coefficients[0].size(); }
};

/// STFT magnitude grid: magnitudes[bin][frame].
struct Spectrogram {
  std::vector<std::vector<double>> magnitudes;
  std::size_t frame_hop = 0;
  std::size_t window_len = 0;

  std::size_t n_bins() const { return magnitudes.size(); }
  std::size_t n_frames() const { return magnitudes.empty() ? 0 : magnitudes[0].size(); }
};

/// Empirical check of the claimed transform scale invariance
/// C(m*a, b) = g(m) * C(a, b): per multiplier, the max over shifts of
/// |g(m)C(a,b) - C(ma,b)| divided by max |C(ma,b)|.
struct ScaleLawReport {
  double base_scale = 1.0;
  std::vector<double> multipliers;
  std::vector<double> relative_errors;
};

/// Mother-wavelet spectrum evaluator; must return 0 for w <= 0.
using SpectrumFn = std::function<cplx(double)>;

/// Frequency-domain CWT: C(a,b) = (sqrt(a)/2pi) int S(w) Psi*(aw) e^{jwb} dw.
/// Per scale, Psi*(aw) is re-evaluated on the signal's frequency grid (no
/// interpolation) and one inverse transform yields all integer shifts at once.
/// Throws on a scale so large that the scaled wavelet has no support above
/// the first positive bin.
Scalogram cwt_frequency_domain(const AnalyticSignal& signal, const SpectrumFn& wavelet,
                               std::span<const double> scales,
                               Scalogram::Wavelet id = Scalogram::Wavelet::altes);

/// Hyperbolic chirplet transform: the CWT with the Altes chirplet as mother
/// wavelet, unit-energy normalized and re-centered so the envelope peak sits
/// at zero shift. Parameters outside the discrete-time design bounds are
/// accepted with a warning on stderr.
Scalogram hct(const AnalyticSignal& signal, const ChirpletParams& p,
              std::span<const double> scales);

/// g(a) = a^(1 + 2 kappa_c log w0) * exp(j 2 pi log(a)/log(lambda))
cplx hct_scale_gain(const ChirpletParams& p, double a);

/// Computes one direct HCT row at base_scale and derives rows at
/// base_scale*m as g(m) times the base row; the report compares every fast
/// row against the directly computed transform at that scale. Rows are not
/// peak-re-centered here: the re-centering phase is scale-dependent and would
/// contaminate the invariance measurement.
std::pair<Scalogram, ScaleLawReport> scale_law_fast_path(const AnalyticSignal& signal,
                                                         const ChirpletParams& p,
                                                         double base_scale,
                                                         std::span<const double> multipliers);

/// Complex Morlet CWT: Psi(w) = exp(-(w - wm)^2 / (2 s^2)) for w > 0, with
/// s = kMorletRelWidth * wm, unit-energy normalized.
Scalogram morlet_cwt(const AnalyticSignal& signal, double center_freq,
                     std::span<const double> scales);

/// Relative Gaussian width of the Morlet: -40 dB support [0.586, 1.414]*wm,
/// about one octave.
inline constexpr double kMorletRelWidth = 0.1364854872935257;

/// Hamming-window magnitude spectrogram; hop in (0, window_len].
Spectrogram stft(const AnalyticSignal& signal, std::size_t window_len, std::size_t hop);

}  // namespace altes
