#include "altes/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "altes/parallel.hpp"
#include "altes/properties.hpp"

namespace altes {

namespace {

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
  v[n - 1] = hi;
  return v;
}

// Envelope fits when the -40 dB support leaves >= 4 guard samples each side.
bool envelope_fits(const TimeLocalization& loc, std::size_t n_fft) {
  return loc.delay_spread + 8.0 <= static_cast<double>(n_fft);
}

}  // namespace

std::vector<ChirpletParams> SweepGrid::points() const {
  if (size() == 0) throw std::invalid_argument("sweep grid is empty");
  if (!(omega0_min > 0.0 && omega0_max < kPi && omega0_min <= omega0_max))
    throw std::invalid_argument("sweep grid: omega0 range must lie inside (0, pi)");
  if (!(lambda_min > 0.0 && lambda_max < 1.0 && lambda_min <= lambda_max))
    throw std::invalid_argument("sweep grid: lambda range must lie inside (0, 1)");

  const std::vector<double> omega0s = log_spaced(omega0_min, omega0_max, n_omega0);
  std::vector<double> lambdas(n_lambda);
  if (n_lambda == 1) {
    lambdas[0] = lambda_min;
  } else {
    const double step = (lambda_max - lambda_min) / static_cast<double>(n_lambda - 1);
    for (std::size_t i = 0; i < n_lambda; ++i)
      lambdas[i] = lambda_min + step * static_cast<double>(i);
  }

  std::vector<ChirpletParams> pts;
  pts.reserve(size());
  for (double w0 : omega0s) {
    // ratios in (1, pi/w0], top point exactly at the Nyquist cutoff
    const double top = kPi / w0;
    const std::vector<double> ratios = log_spaced(std::pow(top, 1.0 / static_cast<double>(n_ratio)),
                                                  top, n_ratio);
    for (double r : ratios)
      for (double lam : lambdas) pts.push_back(ChirpletParams::make(w0, w0 * r, lam, kc_level));
  }
  return pts;
}

SweepRecord measure_record(const ChirpletParams& p) {
  // bandwidth on a fixed fine grid: comparable across records regardless of
  // the transform size their envelopes require
  constexpr std::size_t kBandwidthFft = 4096;
  SweepRecord rec;
  rec.params = p;
  rec.bandwidth = measure_bandwidth(synth_spectrum(p, kBandwidthFft), p.kc_level);
  std::size_t n_fft = 256;
  for (;;) {
    const AnalyticSignal u = synth_time(p, n_fft);
    const TimeLocalization loc = measure_delay_spread(u, p.kc_level);
    if (envelope_fits(loc, n_fft) || n_fft >= kMaxSweepFft) {
      rec.n_fft_used = n_fft;
      rec.fits = envelope_fits(loc, n_fft);
      rec.delay_spread = loc.delay_spread;
      rec.oscillations = count_oscillations(u, loc);
      return rec;
    }
    n_fft *= 2;
  }
}

std::vector<SweepRecord> run_sweep(const SweepGrid& grid) {
  const std::vector<ChirpletParams> pts = grid.points();
  std::vector<SweepRecord> records(pts.size());
  parallel_for(pts.size(), [&](std::size_t i) { records[i] = measure_record(pts[i]); });
  return records;
}

FrontierResult pareto_frontier(std::span<const SweepRecord> records) {
  if (records.empty()) throw std::invalid_argument("pareto_frontier: no records");
  FrontierResult out;
  out.records.assign(records.begin(), records.end());

  // sort candidate indices by (delay_spread, bandwidth); a sweep over them
  // keeps every record whose bandwidth is not beaten by anything faster
  std::vector<std::size_t> order;
  for (std::size_t i = 0; i < records.size(); ++i)
    if (records[i].fits) order.push_back(i);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (records[a].delay_spread != records[b].delay_spread)
      return records[a].delay_spread < records[b].delay_spread;
    return records[a].bandwidth < records[b].bandwidth;
  });

  double best_bw = std::numeric_limits<double>::infinity();
  double tie_tau = -1.0;
  for (std::size_t idx : order) {
    const SweepRecord& r = records[idx];
    if (r.bandwidth < best_bw ||
        (r.bandwidth == best_bw && r.delay_spread == tie_tau)) {
      out.frontier.push_back(idx);
      if (r.bandwidth < best_bw) {
        best_bw = r.bandwidth;
        tie_tau = r.delay_spread;
      }
    }
  }
  std::sort(out.frontier.begin(), out.frontier.end());
  return out;
}

bool Table2Verdict::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string Table2Verdict::summary() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) os << "; ";
    os << checks[i].bound << "=" << (checks[i].pass ? "pass" : "warn");
    if (!checks[i].pass) os << " (" << checks[i].note << ")";
  }
  return os.str();
}

Table2Verdict table2_gate(const ChirpletParams& p) {
  Table2Verdict v;
  {
    Table2Verdict::Check c;
    c.bound = "wideband_chirping";
    c.pass = p.omega0 < kPi / 4.0;
    c.note = c.pass ? "omega0 < pi/4" : "omega0 >= pi/4 restricts chirping range";
    v.checks.push_back(std::move(c));
  }
  {
    Table2Verdict::Check c;
    c.bound = "critical_sampling";
    c.pass = std::abs(p.omega_c - kPi) <= 1e-9;
    c.note = c.pass ? "omega_c = pi" : "omega_c != pi wastes or aliases the sampling rate";
    v.checks.push_back(std::move(c));
  }
  {
    Table2Verdict::Check c;
    c.bound = "chirp_rate";
    const double lam = p.lambda;
    c.pass = (lam > 0.25 && lam < 0.75) || (lam > 4.0 / 3.0 && lam < 4.0);
    c.note = c.pass ? "lambda within the bounded-oscillation band"
                    : "lambda outside (1/4,3/4) and (4/3,4)";
    v.checks.push_back(std::move(c));
  }
  return v;
}

std::size_t fft_size_advisor(const ChirpletParams& p) {
  p.validate();
  // trial size large enough for every admissible record
  const AnalyticSignal u = synth_time(p, kMaxSweepFft);
  const TimeLocalization loc = measure_delay_spread(u, p.kc_level);
  if (!envelope_fits(loc, kMaxSweepFft))
    throw std::runtime_error("fft_size_advisor: delay spread exceeds the 2^16 sample budget");
  const auto spread = static_cast<std::size_t>(std::ceil(loc.delay_spread));
  return next_pow2(std::max<std::size_t>(spread, 8));
}

}  // namespace altes
