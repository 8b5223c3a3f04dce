#include "altes/transform.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <stdexcept>

#include "altes/fft.hpp"
#include "altes/parallel.hpp"
#include "altes/properties.hpp"
#include "altes/sweep.hpp"

namespace altes {

namespace {

void check_scales(std::span<const double> scales) {
  if (scales.empty()) throw std::invalid_argument("cwt: empty scale axis");
  for (std::size_t i = 0; i < scales.size(); ++i) {
    if (!(scales[i] > 0.0)) throw std::invalid_argument("cwt: scales must be positive");
    if (i > 0 && !(scales[i] > scales[i - 1]))
      throw std::invalid_argument("cwt: scales must be strictly increasing");
  }
}

// One row: sqrt(a) * IDFT{ S[k] * conj(Psi(a*w_k)) } over the one-sided bins.
std::vector<cplx> cwt_row(const std::vector<cplx>& sig_fft, const SpectrumFn& wavelet,
                          double a) {
  const std::size_t n = sig_fft.size();
  const std::size_t half = n / 2;
  std::vector<cplx> prod(n, cplx(0.0, 0.0));
  double support = 0.0;
  for (std::size_t k = 1; k <= half; ++k) {
    const double w = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n);
    const cplx psi = wavelet(a * w);
    support = std::max(support, std::abs(psi));
    prod[k] = sig_fft[k] * std::conj(psi);
  }
  if (support < 1e-14)
    throw std::domain_error("cwt: degenerate scale, wavelet support below the first bin");
  ifft_inplace(prod);
  const double g = std::sqrt(a);
  for (auto& v : prod) v *= g;
  return prod;
}

// Peak time of the chirplet synthesized at length n, in signed samples.
double chirplet_peak_time(const ChirpletParams& p, std::size_t n) {
  const AnalyticSignal u = synth_time(p, n);
  std::size_t peak = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < u.samples.size(); ++i) {
    const double m = std::abs(u.samples[i]);
    if (m > best) {
      best = m;
      peak = i;
    }
  }
  return peak <= n / 2 ? static_cast<double>(peak)
                       : static_cast<double>(peak) - static_cast<double>(n);
}

SpectrumFn altes_mother(const ChirpletParams& p, double tau0) {
  const double rho = 1.0 / std::sqrt(analytic_energy(p));
  return [p, rho, tau0](double w) -> cplx {
    if (w <= 0.0) return cplx(0.0, 0.0);
    const cplx shift(std::cos(w * tau0), std::sin(w * tau0));
    return rho * chirplet_value(p, w) * shift;
  };
}

}  // namespace

Scalogram cwt_frequency_domain(const AnalyticSignal& signal, const SpectrumFn& wavelet,
                               std::span<const double> scales, Scalogram::Wavelet id) {
  check_scales(scales);
  const std::size_t n = signal.samples.size();
  if (!is_pow2(n)) throw std::invalid_argument("cwt: signal length must be a power of two");

  const std::vector<cplx> sig_fft = fft(signal.samples);

  Scalogram sc;
  sc.wavelet_id = id;
  sc.scales.assign(scales.begin(), scales.end());
  sc.shifts.resize(n);
  for (std::size_t b = 0; b < n; ++b) sc.shifts[b] = static_cast<double>(b) * signal.dt;
  sc.coefficients.resize(scales.size());
  parallel_for(scales.size(),
               [&](std::size_t i) { sc.coefficients[i] = cwt_row(sig_fft, wavelet, scales[i]); });
  return sc;
}

Scalogram hct(const AnalyticSignal& signal, const ChirpletParams& p,
              std::span<const double> scales) {
  p.validate();
  const Table2Verdict verdict = table2_gate(p);
  if (!verdict.all_pass())
    std::cerr << "hct: analyzing chirplet outside discrete-time design bounds: "
              << verdict.summary() << "\n";
  const double tau0 = chirplet_peak_time(p, signal.samples.size());
  return cwt_frequency_domain(signal, altes_mother(p, tau0), scales,
                              Scalogram::Wavelet::altes);
}

cplx hct_scale_gain(const ChirpletParams& p, double a) {
  if (!(a > 0.0)) throw std::invalid_argument("hct_scale_gain: scale must be positive");
  const double mag = std::pow(a, 1.0 + 2.0 * p.kappa_c() * std::log(p.omega0));
  const double phase = 2.0 * kPi * std::log(a) / std::log(p.lambda);
  return cplx(mag * std::cos(phase), mag * std::sin(phase));
}

std::pair<Scalogram, ScaleLawReport> scale_law_fast_path(const AnalyticSignal& signal,
                                                         const ChirpletParams& p,
                                                         double base_scale,
                                                         std::span<const double> multipliers) {
  p.validate();
  if (!(base_scale > 0.0))
    throw std::invalid_argument("scale_law_fast_path: base_scale must be positive");
  if (multipliers.empty())
    throw std::invalid_argument("scale_law_fast_path: no multipliers given");
  for (double m : multipliers)
    if (!(m > 0.0)) throw std::invalid_argument("scale_law_fast_path: multipliers must be positive");

  const std::size_t n = signal.samples.size();
  if (!is_pow2(n)) throw std::invalid_argument("cwt: signal length must be a power of two");
  const std::vector<cplx> sig_fft = fft(signal.samples);
  const SpectrumFn mother = altes_mother(p, 0.0);  // no re-centering phase

  const std::vector<cplx> base_row = cwt_row(sig_fft, mother, base_scale);

  ScaleLawReport report;
  report.base_scale = base_scale;
  report.multipliers.assign(multipliers.begin(), multipliers.end());
  report.relative_errors.assign(multipliers.size(), 0.0);

  Scalogram sc;
  sc.wavelet_id = Scalogram::Wavelet::altes;
  sc.shifts.resize(n);
  for (std::size_t b = 0; b < n; ++b) sc.shifts[b] = static_cast<double>(b) * signal.dt;
  sc.scales.resize(multipliers.size());
  sc.coefficients.resize(multipliers.size());

  for (std::size_t i = 0; i < multipliers.size(); ++i) {
    const double m = multipliers[i];
    sc.scales[i] = m * base_scale;
    const cplx g = hct_scale_gain(p, m);

    std::vector<cplx> fast(n);
    for (std::size_t b = 0; b < n; ++b) fast[b] = g * base_row[b];

    const std::vector<cplx> direct = cwt_row(sig_fft, mother, m * base_scale);
    double worst = 0.0, peak = 0.0;
    for (std::size_t b = 0; b < n; ++b) {
      worst = std::max(worst, std::abs(fast[b] - direct[b]));
      peak = std::max(peak, std::abs(direct[b]));
    }
    report.relative_errors[i] = peak > 0.0 ? worst / peak : worst;
    sc.coefficients[i] = std::move(fast);
  }
  return {std::move(sc), std::move(report)};
}

Scalogram morlet_cwt(const AnalyticSignal& signal, double center_freq,
                     std::span<const double> scales) {
  if (!(center_freq > 0.0 && center_freq < kPi))
    throw std::invalid_argument("morlet_cwt: center frequency must lie in (0, pi)");
  const double s = kMorletRelWidth * center_freq;
  // unit energy: (1/2pi) int |Psi|^2 dw = s*sqrt(pi)/(2pi)
  const double rho = 1.0 / std::sqrt(s * std::sqrt(kPi) / (2.0 * kPi));
  const SpectrumFn mother = [center_freq, s, rho](double w) -> cplx {
    if (w <= 0.0) return cplx(0.0, 0.0);
    const double d = (w - center_freq) / s;
    return cplx(rho * std::exp(-0.5 * d * d), 0.0);
  };
  return cwt_frequency_domain(signal, mother, scales, Scalogram::Wavelet::morlet);
}

Spectrogram stft(const AnalyticSignal& signal, std::size_t window_len, std::size_t hop) {
  if (!is_pow2(window_len)) throw std::invalid_argument("stft: window length must be a power of two");
  if (hop == 0 || hop > window_len) throw std::invalid_argument("stft: hop must lie in (0, window]");
  const std::size_t n = signal.samples.size();
  if (n < window_len) throw std::invalid_argument("stft: signal shorter than the window");

  std::vector<double> window(window_len);
  for (std::size_t m = 0; m < window_len; ++m)
    window[m] = 0.54 - 0.46 * std::cos(2.0 * kPi * static_cast<double>(m) /
                                       static_cast<double>(window_len - 1));

  const std::size_t n_frames = 1 + (n - window_len) / hop;
  Spectrogram sg;
  sg.frame_hop = hop;
  sg.window_len = window_len;
  sg.magnitudes.assign(window_len, std::vector<double>(n_frames, 0.0));

  std::vector<cplx> frame(window_len);
  for (std::size_t f = 0; f < n_frames; ++f) {
    const std::size_t start = f * hop;
    for (std::size_t m = 0; m < window_len; ++m)
      frame[m] = signal.samples[start + m] * window[m];
    fft_inplace(frame);
    for (std::size_t k = 0; k < window_len; ++k) sg.magnitudes[k][f] = std::abs(frame[k]);
  }
  return sg;
}

}  // namespace altes
