#include "altes/synth.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "altes/properties.hpp"
#include "altes/sweep.hpp"

namespace altes {

namespace {

// Standard complex Gaussian deviates from explicit polar Box-Muller over the
// raw 53-bit mantissa stream; std::normal_distribution is implementation
// defined and would break replay across standard libraries.
class GaussianSource {
 public:
  explicit GaussianSource(std::uint64_t seed) : rng_(seed) {}

  cplx next_complex() {
    for (;;) {
      const double u = 2.0 * uniform() - 1.0;
      const double v = 2.0 * uniform() - 1.0;
      const double s = u * u + v * v;
      if (s > 0.0 && s < 1.0) {
        const double g = std::sqrt(-2.0 * std::log(s) / s);
        // unit-variance complex sample: each quadrature has variance 1/2
        return cplx(u * g / std::sqrt(2.0), v * g / std::sqrt(2.0));
      }
    }
  }

 private:
  double uniform() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }
  std::mt19937_64 rng_;
};

std::size_t chirp_buffer_len(const ChirpletParams& p) {
  // room for the full envelope plus comfortable margin around the peak
  return next_pow2(4 * fft_size_advisor(p));
}

}  // namespace

AnalyticSignal make_lp_chirp(const ChirpletParams& p, std::size_t n_fft) {
  AnalyticSignal u = synth_time(p, n_fft);
  const double e = u.energy();
  if (!(e > 0.0)) throw std::runtime_error("make_lp_chirp: zero-energy waveform");
  const double scale = 1.0 / std::sqrt(e);

  std::size_t peak = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < u.samples.size(); ++i) {
    const double m = std::abs(u.samples[i]);
    if (m > best) {
      best = m;
      peak = i;
    }
  }

  AnalyticSignal out;
  out.dt = u.dt;
  out.samples.resize(n_fft);
  const std::size_t mid = n_fft / 2;
  for (std::size_t i = 0; i < n_fft; ++i)
    out.samples[(i + mid + n_fft - peak) % n_fft] = u.samples[i] * scale;
  return out;
}

std::pair<AnalyticSignal, GroundTruth> make_benchmark(const BenchmarkSpec& spec) {
  if (spec.total_len == 0) throw std::invalid_argument("make_benchmark: empty record");
  if (spec.chirps.empty()) throw std::invalid_argument("make_benchmark: no chirps");

  GroundTruth truth;
  truth.clean_signal.dt = 1.0;
  truth.clean_signal.samples.assign(spec.total_len, cplx(0.0, 0.0));

  for (const ChirpPlacement& cp : spec.chirps) {
    cp.params.validate();
    if (cp.center >= spec.total_len)
      throw std::invalid_argument("make_benchmark: chirp center outside the record");
    const std::size_t len = chirp_buffer_len(cp.params);
    if (len > spec.total_len)
      throw std::invalid_argument("make_benchmark: record too small for a chirp envelope");
    const AnalyticSignal chirp = make_lp_chirp(cp.params, len);
    const long mid = static_cast<long>(len) / 2;
    for (std::size_t j = 0; j < len; ++j) {
      const long t = static_cast<long>(cp.center) + (static_cast<long>(j) - mid);
      if (t >= 0 && t < static_cast<long>(spec.total_len))
        truth.clean_signal.samples[t] += cp.amplitude * chirp.samples[j];
    }
    truth.chirp_centers.push_back(cp.center);
  }

  if (!(spec.tone_freq > 0.0 && spec.tone_freq < kPi))
    throw std::invalid_argument("make_benchmark: tone frequency must lie in (0, pi)");
  for (std::size_t t = 0; t < spec.total_len; ++t) {
    const double ph = spec.tone_freq * static_cast<double>(t);
    truth.clean_signal.samples[t] += spec.tone_amplitude * cplx(std::cos(ph), std::sin(ph));
  }

  AnalyticSignal out;
  out.dt = 1.0;
  out.samples = truth.clean_signal.samples;

  if (!spec.noiseless) {
    const double p_clean = truth.clean_signal.energy() / static_cast<double>(spec.total_len);
    if (!(p_clean > 0.0)) throw std::runtime_error("make_benchmark: clean signal has no power");
    GaussianSource gauss(spec.seed);
    std::vector<cplx> noise(spec.total_len);
    double p_raw = 0.0;
    for (auto& v : noise) {
      v = gauss.next_complex();
      p_raw += std::norm(v);
    }
    p_raw /= static_cast<double>(spec.total_len);
    // scale the draw by its own measured power: realized SNR is exact
    const double target = p_clean * std::pow(10.0, -spec.snr_db / 10.0);
    const double scale = std::sqrt(target / p_raw);
    for (std::size_t t = 0; t < spec.total_len; ++t) out.samples[t] += scale * noise[t];
  }

  return {std::move(out), std::move(truth)};
}

BenchmarkSpec default_benchmark() {
  BenchmarkSpec spec;
  spec.chirps = {
      {ChirpletParams::make(kPi / 5.0, kPi, 0.5), 700, 1.0},
      {ChirpletParams::make(kPi / 6.0, kPi, 0.4), 1900, 1.0},
      {ChirpletParams::make(kPi / 8.0, kPi, 0.6), 3100, 1.0},
  };
  spec.tone_freq = kPi / 3.0;
  spec.tone_amplitude = 0.05;
  spec.snr_db = 0.0;
  spec.total_len = 4096;
  spec.seed = 20180604;
  return spec;
}

}  // namespace altes
