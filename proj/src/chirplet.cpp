#include "altes/chirplet.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "altes/fft.hpp"

namespace altes {

namespace {

void check_kc(double kc_level) {
  if (!(kc_level > 0.0 && kc_level < 1.0))
    throw std::invalid_argument("kc_level must lie in (0,1), got " + std::to_string(kc_level));
}

}  // namespace

ClassicAltesParams ClassicAltesParams::make(double nu, double k, double c) {
  ClassicAltesParams p;
  p.nu = nu;
  p.k = k;
  p.c = c;
  p.validate();
  p.a_gain = std::pow(k, -0.5 * nu * nu);
  return p;
}

void ClassicAltesParams::validate() const {
  if (!(k > 1.0)) throw std::invalid_argument("classic params: k must exceed 1");
  if (c == 0.0) throw std::invalid_argument("classic params: c must be nonzero");
  if (!std::isfinite(nu) || !std::isfinite(k) || !std::isfinite(c))
    throw std::invalid_argument("classic params: non-finite value");
}

ChirpletParams ChirpletParams::make(double omega0, double omega_c, double lambda,
                                    double kc_level) {
  ChirpletParams p;
  p.omega0 = omega0;
  p.omega_c = omega_c;
  p.lambda = lambda;
  p.kc_level = kc_level;
  p.validate();
  return p;
}

ChirpletParams ChirpletParams::from_bandwidth(double omega0, double bandwidth, double lambda,
                                              double kc_level) {
  return make(omega0, bandwidth_to_cutoff(omega0, bandwidth), lambda, kc_level);
}

void ChirpletParams::validate() const {
  if (!(omega0 > 0.0)) throw std::invalid_argument("chirplet params: omega0 must be positive");
  if (!(omega_c > omega0))
    throw std::invalid_argument("chirplet params: omega_c must exceed omega0");
  if (!(lambda > 0.0)) throw std::invalid_argument("chirplet params: lambda must be positive");
  if (lambda == 1.0)
    throw std::invalid_argument("chirplet params: singular chirp rate lambda = 1");
  check_kc(kc_level);
}

double ChirpletParams::kappa_c() const {
  const double r = std::log(omega_c / omega0);
  return -std::log(kc_level) / (r * r);
}

double ChirpletParams::bandwidth() const {
  return omega0 * (omega_c / omega0 - omega0 / omega_c);
}

double ChirpletParams::lower_cutoff() const { return omega0 * omega0 / omega_c; }

double AnalyticSignal::energy() const {
  double e = 0.0;
  for (const cplx& s : samples) e += std::norm(s);
  return e * dt;
}

ChirpletParams classic_to_modern(const ClassicAltesParams& p, double kc_level) {
  p.validate();
  check_kc(kc_level);
  const double log_k = std::log(p.k);
  const double omega0 = std::pow(p.k, p.nu);
  const double kappa = 1.0 / (2.0 * log_k);
  const double lambda = std::exp(log_k / p.c);
  const double omega_c = omega0 * std::exp(std::sqrt(-std::log(kc_level) / kappa));
  return ChirpletParams::make(omega0, omega_c, lambda, kc_level);
}

ClassicAltesParams modern_to_classic(const ChirpletParams& p) {
  p.validate();
  const double kappa = p.kappa_c();
  const double nu = 2.0 * kappa * std::log(p.omega0);
  const double k = std::exp(1.0 / (2.0 * kappa));
  const double c = std::log(k) / std::log(p.lambda);
  return ClassicAltesParams::make(nu, k, c);
}

double bandwidth_to_cutoff(double omega0, double b) {
  if (!(omega0 > 0.0)) throw std::invalid_argument("bandwidth_to_cutoff: omega0 must be positive");
  if (!(b > 0.0)) throw std::invalid_argument("bandwidth_to_cutoff: bandwidth must be positive");
  // wc^2 - b*wc - w0^2 = 0, positive root
  return 0.5 * (b + std::sqrt(b * b + 4.0 * omega0 * omega0));
}

double magnitude_response(const ChirpletParams& p, double omega) {
  p.validate();
  if (!(omega > 0.0))
    throw std::domain_error("magnitude_response: omega must be positive (U vanishes for w <= 0)");
  const double r = std::log(omega / p.omega0);
  return -p.kappa_c() * r * r;
}

cplx chirplet_value(const ChirpletParams& p, double omega) {
  if (omega <= 0.0) return cplx(0.0, 0.0);
  const double lw = std::log(omega);
  const double r = lw - std::log(p.omega0);
  const double mag = std::exp(-p.kappa_c() * r * r);
  const double phase = 2.0 * kPi * lw / std::log(p.lambda);
  return cplx(mag * std::cos(phase), mag * std::sin(phase));
}

cplx homogeneity_constant(const ChirpletParams& p, double n) {
  const ClassicAltesParams cp = modern_to_classic(p);
  const double mag = std::pow(cp.k, n * cp.nu + 0.5 * n * n);
  const double phase = 2.0 * kPi * n * cp.c;
  return cplx(mag * std::cos(phase), mag * std::sin(phase));
}

Spectrum synth_spectrum(const ChirpletParams& p, std::size_t n_fft) {
  p.validate();
  if (!is_pow2(n_fft) || n_fft < 8)
    throw std::invalid_argument("synth_spectrum: n_fft must be a power of two >= 8");
  const std::size_t half = n_fft / 2;
  Spectrum s;
  s.n_fft = n_fft;
  s.domega = kPi / static_cast<double>(half);
  s.values.assign(half + 1, cplx(0.0, 0.0));
  for (std::size_t i = 1; i <= half; ++i)
    s.values[i] = chirplet_value(p, static_cast<double>(i) * s.domega);
  return s;
}

AnalyticSignal synth_time(const ChirpletParams& p, std::size_t n_fft) {
  const Spectrum s = synth_spectrum(p, n_fft);
  std::vector<cplx> padded(n_fft, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < s.values.size(); ++i) padded[i] = s.values[i];
  ifft_inplace(padded);
  AnalyticSignal out;
  out.samples = std::move(padded);
  out.dt = 1.0;
  return out;
}

}  // namespace altes
