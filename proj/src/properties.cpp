#include "altes/properties.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace altes {

namespace {

// log(exp(a) + exp(b)) without overflow
double log_sum_exp(double a, double b) {
  const double m = std::max(a, b);
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

// Rotate so the envelope peak sits at n/2; returns rotated copy and peak index.
struct Recentred {
  std::vector<cplx> samples;
  std::size_t peak_raw = 0;  // index in the original buffer
};

Recentred recenter_on_peak(const AnalyticSignal& sig) {
  const std::size_t n = sig.samples.size();
  if (n == 0) throw std::invalid_argument("empty signal");
  std::size_t p = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = std::abs(sig.samples[i]);
    if (a > best) {
      best = a;
      p = i;
    }
  }
  if (best <= 0.0) throw std::invalid_argument("all-zero signal");
  Recentred r;
  r.peak_raw = p;
  r.samples.resize(n);
  const std::size_t mid = n / 2;
  for (std::size_t i = 0; i < n; ++i) r.samples[(i + mid + n - p) % n] = sig.samples[i];
  return r;
}

// m-th order central difference with spacing h, evaluated at x.
// For odd m the stencil sits on half-integer offsets.
cplx central_diff(const std::function<cplx(double)>& f, double x, int m, double h) {
  cplx acc(0.0, 0.0);
  double binom = 1.0;  // C(m, i)
  for (int i = 0; i <= m; ++i) {
    const double offset = (0.5 * m - i) * h;
    const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
    acc += sgn * binom * f(x + offset);
    binom = binom * (m - i) / (i + 1);
  }
  return acc / std::pow(h, m);
}

// Richardson-extrapolated derivative estimate (order-2 differences at h, h/2).
double derivative_estimate(const std::function<cplx(double)>& f, double x, int m) {
  const double h = x / (2.0 * (m + 2));
  const cplx d1 = central_diff(f, x, m, h);
  const cplx d2 = central_diff(f, x, m, 0.5 * h);
  return std::abs((4.0 * d2 - d1) / 3.0);
}

}  // namespace

double analytic_energy(const ChirpletParams& p) {
  p.validate();
  const double kap = p.kappa_c();
  return p.omega0 / std::sqrt(8.0 * kPi * kap) * std::exp(1.0 / (8.0 * kap));
}

double analytic_admissibility(const ChirpletParams& p) {
  p.validate();
  return std::sqrt(kPi / (2.0 * p.kappa_c()));
}

double regularity_integral(const ChirpletParams& p, double alpha) {
  p.validate();
  if (alpha < 0.0) throw std::invalid_argument("regularity_integral: alpha must be >= 0");
  const double kap = p.kappa_c();
  const double lw0 = std::log(p.omega0);
  const double half_log_pi_kap = 0.5 * std::log(kPi / kap);
  const double log_i1 = lw0 + half_log_pi_kap + 1.0 / (4.0 * kap);
  const double log_i2 = (alpha + 1.0) * lw0 + half_log_pi_kap +
                        (1.0 + alpha) * (1.0 + alpha) / (4.0 * kap);
  return std::exp(log_sum_exp(log_i1, log_i2));
}

int vanishing_moments_check(const std::function<cplx(double)>& spectrum, double omega_scale,
                            int max_order) {
  if (max_order < 1 || max_order > 12)
    throw std::invalid_argument("vanishing_moments_check: max_order must be in [1,12]");
  if (!(omega_scale > 0.0))
    throw std::invalid_argument("vanishing_moments_check: omega_scale must be positive");
  constexpr double kTol = 1e-8;

  // Probe at w = omega_scale * e^{-z} with z log-spacedly descending toward
  // zero frequency. The ladder reaches z ~ 26, deep enough that the Gaussian
  // log-frequency envelope dominates any 1/w^m derivative growth for m <= 12
  // while every stencil value is still representable in double precision.
  std::vector<double> zs;
  for (double z = 2.0; z <= 26.0; z += 1.5) zs.push_back(z);

  int verified = 0;
  for (int m = 0; m <= max_order; ++m) {
    // require the estimates on the deepest three rungs to sit below tolerance
    bool ok = true;
    for (std::size_t r = zs.size() - 3; r < zs.size(); ++r) {
      const double x = omega_scale * std::exp(-zs[r]);
      const double est =
          (m == 0) ? std::abs(spectrum(x)) : derivative_estimate(spectrum, x, m);
      if (!(est < kTol)) {
        ok = false;
        break;
      }
    }
    if (!ok) break;
    verified = m;
  }
  return verified;
}

int vanishing_moments_check(const ChirpletParams& p, int max_order) {
  p.validate();
  return vanishing_moments_check([&p](double w) { return chirplet_value(p, w); }, p.omega0,
                                 max_order);
}

double measure_bandwidth(const Spectrum& s, double kc_level) {
  if (!(kc_level > 0.0 && kc_level <= 1.0))
    throw std::invalid_argument("measure_bandwidth: kc_level must lie in (0,1]");
  const std::size_t n = s.values.size();
  if (n < 3) throw std::invalid_argument("measure_bandwidth: spectrum too short");

  std::vector<double> mag(n);
  double peak = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mag[i] = std::abs(s.values[i]);
    peak = std::max(peak, mag[i]);
  }
  if (peak <= 0.0) throw std::invalid_argument("measure_bandwidth: zero spectrum");
  const double thr = kc_level * peak;

  std::size_t lo = n, hi = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (mag[i] >= thr) {
      if (lo == n) lo = i;
      hi = i;
    }
  }
  if (lo == n) throw std::runtime_error("measure_bandwidth: no samples reach the threshold");

  // crossing position by linear interpolation on log magnitude
  const double log_thr = std::log(thr);
  auto cross = [&](std::size_t inside, std::size_t outside) {
    const double li = std::log(mag[inside]);
    const double lo_ = mag[outside] > 0.0 ? std::log(mag[outside]) : li - 800.0;
    const double t = (log_thr - li) / (lo_ - li);
    return (static_cast<double>(inside) +
            t * (static_cast<double>(outside) - static_cast<double>(inside))) *
           s.domega;
  };

  double w_hi;
  if (hi + 1 < n) {
    w_hi = cross(hi, hi + 1);
  } else if (mag[n - 1] <= 1.05 * thr) {
    // cutoff pinned at Nyquist (omega_c == pi, critical sampling)
    w_hi = static_cast<double>(hi) * s.domega;
  } else {
    throw std::runtime_error(
        "measure_bandwidth: upper crossing not found below Nyquist (waveform not band-limited "
        "at this level)");
  }
  const double w_lo = (lo == 0) ? 0.0 : cross(lo, lo - 1);
  return w_hi - w_lo;
}

TimeLocalization measure_delay_spread(const AnalyticSignal& sig, double kc_level) {
  if (!(kc_level > 0.0 && kc_level <= 1.0))
    throw std::invalid_argument("measure_delay_spread: kc_level must lie in (0,1]");
  const Recentred rc = recenter_on_peak(sig);
  const std::size_t n = rc.samples.size();
  const std::size_t mid = n / 2;
  const double thr = kc_level * std::abs(rc.samples[mid]);

  std::size_t l = mid, r = mid;
  for (std::size_t i = 0; i < n; ++i) {
    if (std::abs(rc.samples[i]) >= thr) {
      l = std::min(l, i);
      r = std::max(r, i);
    }
  }

  // outermost crossings refined by linear interpolation on log magnitude
  const double log_thr = std::log(thr);
  auto cross = [&](std::size_t inside, std::size_t outside) {
    const double li = std::log(std::abs(rc.samples[inside]));
    const double mo = std::abs(rc.samples[outside]);
    const double lo = mo > 0.0 ? std::log(mo) : li - 800.0;
    const double t = li == lo ? 0.0 : (log_thr - li) / (lo - li);
    return static_cast<double>(inside) +
           t * (static_cast<double>(outside) - static_cast<double>(inside));
  };
  const double lx = l > 0 ? cross(l, l - 1) : static_cast<double>(l);
  const double rx = r + 1 < n ? cross(r, r + 1) : static_cast<double>(r);

  TimeLocalization loc;
  const double peak_time =
      (rc.peak_raw <= n / 2) ? static_cast<double>(rc.peak_raw)
                             : static_cast<double>(rc.peak_raw) - static_cast<double>(n);
  loc.tau_peak = peak_time * sig.dt;
  loc.tau_minus = loc.tau_peak + (lx - static_cast<double>(mid)) * sig.dt;
  loc.tau_plus = loc.tau_peak + (rx - static_cast<double>(mid)) * sig.dt;
  loc.delay_spread = (rx - lx) * sig.dt;
  return loc;
}

double count_oscillations(const AnalyticSignal& sig, const TimeLocalization& loc) {
  const Recentred rc = recenter_on_peak(sig);
  const std::size_t n = rc.samples.size();
  const std::size_t mid = n / 2;
  // innermost whole samples of the (possibly fractional) crossing window
  const long l = static_cast<long>(mid) +
                 static_cast<long>(std::ceil((loc.tau_minus - loc.tau_peak) / sig.dt - 1e-9));
  const long r = static_cast<long>(mid) +
                 static_cast<long>(std::floor((loc.tau_plus - loc.tau_peak) / sig.dt + 1e-9));
  if (l < 0 || r >= static_cast<long>(n) || r - l + 1 < 4)
    throw std::invalid_argument("count_oscillations: window degenerate (< 4 samples)");

  // One-sided spectra put the instantaneous frequency in [0, pi], so a step
  // in [-pi, -pi/2) is a forward rotation past pi, not a backward one.
  auto wrapped_step = [&](long i) {
    double d = std::arg(rc.samples[i + 1]) - std::arg(rc.samples[i]);
    while (d > kPi) d -= 2.0 * kPi;
    while (d < -kPi) d += 2.0 * kPi;
    if (d < -0.5 * kPi) d += 2.0 * kPi;
    return d;
  };

  double total = 0.0;
  for (long i = l; i < r; ++i) total += wrapped_step(i);

  // fractional window edges contribute at the local phase rate
  const double lx = (loc.tau_minus - loc.tau_peak) / sig.dt + static_cast<double>(mid);
  const double rx = (loc.tau_plus - loc.tau_peak) / sig.dt + static_cast<double>(mid);
  total += (static_cast<double>(l) - lx) * wrapped_step(l);
  total += (rx - static_cast<double>(r)) * wrapped_step(r - 1);

  return std::abs(total) / (2.0 * kPi);
}

WaveletDiagnostics diagnose(const ChirpletParams& p, std::size_t n_fft) {
  WaveletDiagnostics d;
  d.energy = analytic_energy(p);
  d.admissibility_constant = analytic_admissibility(p);
  const Spectrum s = synth_spectrum(p, n_fft);
  d.bandwidth_measured = measure_bandwidth(s, p.kc_level);
  const AnalyticSignal u = synth_time(p, n_fft);
  const TimeLocalization loc = measure_delay_spread(u, p.kc_level);
  d.oscillation_count = count_oscillations(u, loc);
  d.vanishing_moment_order_verified = vanishing_moments_check(p, 10);
  return d;
}

}  // namespace altes
