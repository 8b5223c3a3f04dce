#pragma once

#include <cstddef>
#include <vector>

#include "altes/common.hpp"

namespace altes {

// The Altes log-periodic chirplet, frequency-domain definition:
//
//   U(w) = exp(-kappa_c * log^2(w/w0)) * exp(j*2*pi*log(w)/log(lambda)),  w > 0
//   U(w) = 0,                                                             w <= 0
//
// with kappa_c = -log(Kc) / log^2(wc/w0). The magnitude peaks at 1 at the
// center frequency w0 and falls to Kc at the cutoffs wc+ = wc and
// wc- = w0^2/wc. lambda is the chirp rate (ratio of local periods of
// successive oscillations); lambda -> 1/lambda conjugates the spectrum,
// i.e. time-reverses and conjugates the waveform.

/// Original four-constant parameterization {A, nu, k, c}:
///   U(w) = A w^nu exp(-log^2(w)/(2 log k)) exp(j 2 pi c log(w)/log(k))
struct ClassicAltesParams {
  double nu = 0.0;      ///< dimensionless exponent
  double k = 0.0;       ///< scaling constant, > 1
  double c = 0.0;       ///< phase constant, != 0
  double a_gain = 0.0;  ///< amplitude A = k^(-nu^2/2) for unit passband gain

  static ClassicAltesParams make(double nu, double k, double c);
  void validate() const;
};

/// Re-parameterized triplet {w0, wc, lambda} plus the cutoff level Kc.
struct ChirpletParams {
  double omega0 = 0.0;              ///< center frequency, rad/s, > 0
  double omega_c = 0.0;             ///< upper cutoff, rad/s, > omega0
  double lambda = 0.0;              ///< chirp rate, > 0 and != 1
  double kc_level = kDefaultKcLevel;  ///< cutoff magnitude Kc in (0,1)

  static ChirpletParams make(double omega0, double omega_c, double lambda,
                             double kc_level = kDefaultKcLevel);
  /// Construct from {w0, B, lambda}, solving B = w0*(wc/w0 - w0/wc) for wc.
  static ChirpletParams from_bandwidth(double omega0, double bandwidth, double lambda,
                                       double kc_level = kDefaultKcLevel);
  void validate() const;

  /// kappa_c = -log(Kc)/log^2(wc/w0) > 0
  double kappa_c() const;
  /// B = w0*(wc/w0 - w0/wc) = wc - w0^2/wc
  double bandwidth() const;
  /// wc- = w0^2/wc
  double lower_cutoff() const;
};

/// One-sided uniformly sampled spectrum on [0, pi]: values[i] = U(i*domega),
/// length n_fft/2+1, values[0] = 0 (the waveform is analytic, U(w)=0 for w<=0).
struct Spectrum {
  std::vector<cplx> values;
  double domega = 0.0;
  std::size_t n_fft = 0;
};

/// Complex time-domain samples at uniform spacing dt (defaults to 1).
struct AnalyticSignal {
  std::vector<cplx> samples;
  double dt = 1.0;

  /// sum |samples|^2 * dt
  double energy() const;
};

ChirpletParams classic_to_modern(const ClassicAltesParams& p,
                                 double kc_level = kDefaultKcLevel);
ClassicAltesParams modern_to_classic(const ChirpletParams& p);

/// Solve B = w0*(wc/w0 - w0/wc) for the upper cutoff wc > w0.
double bandwidth_to_cutoff(double omega0, double b);

/// Log-magnitude response M(w) = log|U(w)| = -kappa_c*log^2(w/w0), w > 0.
double magnitude_response(const ChirpletParams& p, double omega);

/// Closed-form U(omega); returns 0 for omega <= 0.
cplx chirplet_value(const ChirpletParams& p, double omega);

/// Proportionality constant C(n) of the self-similarity identity
///   w^n U(w) = C(n) U(w / k^n),  k = exp(1/(2 kappa_c)),
/// C(n) = k^(n*nu + n^2/2) * exp(+j*2*pi*n*c) with nu, c from modern_to_classic.
cplx homogeneity_constant(const ChirpletParams& p, double n);

/// Sample U on the one-sided grid w_i = i*pi/(n_fft/2), i = 0..n_fft/2.
/// n_fft must be a power of two >= 8.
Spectrum synth_spectrum(const ChirpletParams& p, std::size_t n_fft);

/// Inverse transform of the one-sided spectrum zero-padded over (pi, 2pi);
/// output length n_fft, unit sampling interval.
AnalyticSignal synth_time(const ChirpletParams& p, std::size_t n_fft);

}  // namespace altes
