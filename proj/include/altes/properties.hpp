#pragma once

#include <functional>

#include "altes/chirplet.hpp"

namespace altes {

/// Threshold-based time localization of an envelope: the peak position and
/// the outermost samples at which the envelope still reaches kc_level of the
/// peak (measured after circular re-centering, so wrapped waveforms are fine).
struct TimeLocalization {
  double tau_minus = 0.0;    ///< first crossing, seconds
  double tau_plus = 0.0;     ///< last crossing, seconds
  double tau_peak = 0.0;     ///< envelope peak, seconds
  double delay_spread = 0.0; ///< tau_plus - tau_minus
};

struct WaveletDiagnostics {
  double energy = 0.0;
  double admissibility_constant = 0.0;
  double bandwidth_measured = 0.0;
  double oscillation_count = 0.0;
  int vanishing_moment_order_verified = 0;
};

/// Closed-form energy (1/2pi) int |U|^2 dw = w0/sqrt(8 pi kappa) * exp(1/(8 kappa)).
double analytic_energy(const ChirpletParams& p);

/// Closed-form admissibility constant int |U|^2 / w dw = sqrt(pi/(2 kappa)).
double analytic_admissibility(const ChirpletParams& p);

/// Closed-form frequency-weighted magnitude integral
///   int (1 + w^alpha) |U(w)| dw = I1 + I2,
///   I2 = w0^(alpha+1) sqrt(pi/kappa) exp((1+alpha)^2/(4 kappa)),  I1 = I2 at alpha=0.
/// Evaluated in the log domain; finite for any alpha >= 0.
double regularity_integral(const ChirpletParams& p, double alpha);

/// Numerically verify that d^m U / dw^m -> 0 as w -> 0+ for m = 1..max_order
/// (max_order <= 12). The 0th order (the value of U itself) must also vanish.
/// Returns the largest m with all orders <= m verified below 1e-8; the Altes
/// spectrum verifies every order, a spectrum without vanishing moments returns 0.
int vanishing_moments_check(const ChirpletParams& p, int max_order);

/// Same probe for an arbitrary spectrum evaluator; omega_scale locates the
/// probe ladder (use the spectrum's passband frequency).
int vanishing_moments_check(const std::function<cplx(double)>& spectrum, double omega_scale,
                            int max_order);

/// Width between the outermost crossings of |U| = kc_level * max|U|, located by
/// linear interpolation on log magnitude. Throws if the upper crossing does not
/// occur within (0, pi] (not band-limited at this level before Nyquist).
double measure_bandwidth(const Spectrum& s, double kc_level);

/// -40 dB style delay spread: outermost samples with envelope >= kc_level*peak,
/// after circular re-centering on the envelope peak.
TimeLocalization measure_delay_spread(const AnalyticSignal& sig, double kc_level);

/// Full oscillations inside [tau_minus, tau_plus]: unwrapped phase advance / 2pi.
double count_oscillations(const AnalyticSignal& sig, const TimeLocalization& loc);

/// Convenience: measure everything for one parameter set at a given n_fft.
WaveletDiagnostics diagnose(const ChirpletParams& p, std::size_t n_fft);

}  // namespace altes
