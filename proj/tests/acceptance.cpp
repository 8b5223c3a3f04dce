// Acceptance suite: runs every release criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit status is nonzero if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "altes/commands.hpp"
#include "altes/detect.hpp"
#include "altes/io.hpp"
#include "altes/properties.hpp"
#include "altes/sweep.hpp"
#include "altes/synth.hpp"
#include "altes/transform.hpp"

using namespace altes;

namespace {

namespace fs = std::filesystem;

int g_failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail,
            double seconds) {
  std::printf("[%s] %2d %-28s %s (%.2fs)\n", pass ? "PASS" : "FAIL", number, name.c_str(),
              detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

void run(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  std::string detail;
  bool pass = false;
  try {
    pass = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  report(number, name, pass, detail, dt);
}

std::string fmt_g(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

std::vector<double> geometric(double lo, double hi, std::size_t n) {
  std::vector<double> s(n);
  for (std::size_t i = 0; i < n; ++i)
    s[i] = std::exp(std::log(lo) +
                    (std::log(hi) - std::log(lo)) * static_cast<double>(i) /
                        static_cast<double>(n - 1));
  return s;
}

std::vector<ChirpletParams> five_reference_params() {
  return {
      ChirpletParams::make(kPi / 5.0, kPi, 0.5),
      ChirpletParams::make(kPi / 6.0, kPi, 0.4),
      ChirpletParams::make(kPi / 8.0, kPi, 0.6),
      ChirpletParams::make(kPi / 10.0, 9.0 * kPi / 10.0, 0.75),
      ChirpletParams::make(kPi / 2.0, kPi, 0.3),
  };
}

// trapezoid in omega over log-spaced nodes; independent of the closed forms
double quad_log_nodes(const std::function<double(double)>& f, const ChirpletParams& p,
                      std::size_t n) {
  const double kap = p.kappa_c();
  const double span = (3.0 + std::sqrt(9.0 + 4.0 * kap * 60.0)) / (2.0 * kap);
  double acc = 0.0;
  double w_prev = p.omega0 * std::exp(-span), f_prev = f(w_prev);
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = -span + 2.0 * span * static_cast<double>(i) / static_cast<double>(n);
    const double w = p.omega0 * std::exp(x);
    const double fw = f(w);
    acc += 0.5 * (f_prev + fw) * (w - w_prev);
    w_prev = w;
    f_prev = fw;
  }
  return acc;
}

bool criterion1(std::string& detail) {
  const auto classic = ClassicAltesParams::make(-0.55, 1.8, -0.35);
  const ChirpletParams p = classic_to_modern(classic, 0.01);
  const double w0_formula = std::pow(1.8, -0.55);
  const bool ok = std::abs(p.lambda - 0.1865) <= 5e-4 && std::abs(p.omega_c - 7.4146) <= 1e-3 &&
                  std::abs(p.bandwidth() - 7.3440) <= 1e-3 &&
                  std::abs(p.omega0 - w0_formula) <= 1e-12;
  std::ostringstream os;
  os << "lambda=" << fmt_g(p.lambda) << " omega_c=" << fmt_g(p.omega_c)
     << " B=" << fmt_g(p.bandwidth()) << "; omega0=" << fmt_g(p.omega0)
     << " per the conversion formula (the printed 0.7328 in the source text is a typo"
        " for 0.7238; its own omega_c and B values agree with "
     << fmt_g(w0_formula) << ")";
  detail = os.str();
  return ok;
}

bool criterion2(std::string& detail) {
  const std::size_t n_fft = 4096;
  double worst = 0.0;

  // parameter set 2: bandwidth pinned to pi/5
  const ChirpletParams p2 = ChirpletParams::from_bandwidth(kPi / 6.0, kPi / 5.0, 0.75);
  const Spectrum s2 = synth_spectrum(p2, n_fft);
  const double b2 = measure_bandwidth(s2, 0.01);
  worst = std::max(worst, std::abs(b2 - kPi / 5.0) / s2.domega);

  // parameter set 3: upper cutoff pinned to 9pi/10
  const ChirpletParams p3 = ChirpletParams::make(kPi / 10.0, 9.0 * kPi / 10.0, 0.75);
  const Spectrum s3 = synth_spectrum(p3, n_fft);
  const double upper3 = measure_bandwidth(s3, 0.01) + p3.lower_cutoff();
  worst = std::max(worst, std::abs(upper3 - 9.0 * kPi / 10.0) / s3.domega);

  // parameter set 4: reciprocal chirp rate, same band edges as set 3
  const ChirpletParams p4 = ChirpletParams::make(kPi / 10.0, 9.0 * kPi / 10.0, 4.0 / 3.0);
  const Spectrum s4 = synth_spectrum(p4, n_fft);
  const double upper4 = measure_bandwidth(s4, 0.01) + p4.lower_cutoff();
  worst = std::max(worst, std::abs(upper4 - 9.0 * kPi / 10.0) / s4.domega);

  detail = "largest band-edge error " + fmt_g(worst) + " grid steps (gate: 2)";
  return worst <= 2.0;
}

bool criterion3(std::string& detail) {
  double worst = 0.0;
  for (const ChirpletParams& p : five_reference_params()) {
    const ClassicAltesParams cp = modern_to_classic(p);
    for (double n : {1.0, 2.0, 3.0, 0.5, -1.0}) {
      const cplx cn = homogeneity_constant(p, n);
      const double kn = std::pow(cp.k, n);
      for (int i = 1; i <= 4096; ++i) {
        const double w = kPi * static_cast<double>(i) / 4096.0;
        const cplx lhs = std::pow(w, n) * chirplet_value(p, w);
        const cplx rhs = cn * chirplet_value(p, w / kn);
        const double den = std::max(std::max(std::abs(lhs), std::abs(rhs)), 1e-300);
        worst = std::max(worst, std::abs(lhs - rhs) / den);
      }
    }
  }
  detail = "max relative error " + fmt_g(worst) + " over n in {1,2,3,1/2,-1} (gate: 1e-9)";
  return worst < 1e-9;
}

bool criterion4(std::string& detail) {
  double worst_e = 0.0, worst_c = 0.0;
  int count = 0;
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      for (int k = 0; k < 5; ++k) {
        const double w0 = kPi / 20.0 * std::pow(4.8, i / 4.0);
        const double wc = w0 * std::pow(kPi / w0, (j + 1) / 5.0);
        const ChirpletParams p = ChirpletParams::make(w0, wc, 0.26 + 0.12 * k);
        const double kap = p.kappa_c();
        ++count;

        const double e_quad = quad_log_nodes(
                                  [&](double w) {
                                    const double x = std::log(w / p.omega0);
                                    return std::exp(-2.0 * kap * x * x);
                                  },
                                  p, 1u << 15) /
                              (2.0 * kPi);
        worst_e = std::max(worst_e, std::abs(e_quad - analytic_energy(p)) / analytic_energy(p));

        const double c_quad = quad_log_nodes(
            [&](double w) {
              const double x = std::log(w / p.omega0);
              return std::exp(-2.0 * kap * x * x) / w;
            },
            p, 1u << 15);
        worst_c = std::max(worst_c, std::abs(c_quad - analytic_admissibility(p)) /
                                        analytic_admissibility(p));
      }
    }
  }
  detail = std::to_string(count) + " params; energy err " + fmt_g(worst_e) +
           ", admissibility err " + fmt_g(worst_c) + " (gate: 1e-6)";
  return worst_e < 1e-6 && worst_c < 1e-6;
}

bool criterion5(std::string& detail) {
  int worst = 12;
  for (const ChirpletParams& p : {ChirpletParams::make(kPi / 5.0, kPi, 0.5),
                                  ChirpletParams::make(kPi / 6.0, kPi, 0.4),
                                  ChirpletParams::make(kPi / 10.0, kPi, 0.74),
                                  ChirpletParams::make(kPi / 4.5, kPi, 0.3)}) {
    worst = std::min(worst, vanishing_moments_check(p, 10));
  }
  detail = "derivative estimates below 1e-8 through order " + std::to_string(worst) +
           " on every parameter set (gate: 10)";
  return worst == 10;
}

bool criterion6(std::string& detail) {
  double worst = 0.0;
  const std::size_t n = 2048;
  for (const ChirpletParams& p : five_reference_params()) {
    const AnalyticSignal a = synth_time(p, n);
    const AnalyticSignal b =
        synth_time(ChirpletParams::make(p.omega0, p.omega_c, 1.0 / p.lambda), n);
    double peak = 0.0;
    for (const cplx& v : a.samples) peak = std::max(peak, std::abs(v));
    for (std::size_t i = 0; i < n; ++i)
      worst = std::max(worst,
                       std::abs(b.samples[i] - std::conj(a.samples[(n - i) % n])) / peak);
  }
  detail = "max deviation " + fmt_g(worst) + " of peak (gate: 1e-10), 5 parameter sets";
  return worst < 1e-10;
}

bool criterion7(std::string& detail) {
  const SweepGrid grid;  // the default 24 x 16 x 10 study
  const std::vector<SweepRecord> records = run_sweep(grid);
  const FrontierResult fr = pareto_frontier(records);

  // quadratic dominance oracle
  std::vector<std::size_t> oracle;
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (!records[i].fits) continue;
    bool dominated = false;
    for (std::size_t j = 0; j < records.size() && !dominated; ++j) {
      if (i == j || !records[j].fits) continue;
      dominated = records[j].delay_spread <= records[i].delay_spread &&
                  records[j].bandwidth <= records[i].bandwidth &&
                  (records[j].delay_spread < records[i].delay_spread ||
                   records[j].bandwidth < records[i].bandwidth);
    }
    if (!dominated) oracle.push_back(i);
  }
  const bool oracle_ok = fr.frontier == oracle;

  bool lambda_ok = true;
  std::size_t min_idx = fr.frontier.empty() ? 0 : fr.frontier.front();
  for (std::size_t idx : fr.frontier) {
    if (!(fr.records[idx].params.lambda < 0.5)) lambda_ok = false;
    if (fr.records[idx].delay_spread < fr.records[min_idx].delay_spread) min_idx = idx;
  }

  const SweepRecord& m = fr.records[min_idx];
  const double w0_step = std::log(grid.omega0_max / grid.omega0_min) / (grid.n_omega0 - 1);
  const bool endpoint_ok = std::abs(std::log(m.params.omega0 / (kPi / 2.0))) <= w0_step + 1e-12 &&
                           std::abs(m.params.omega_c - kPi) < 1e-9;
  // bandwidth at the endpoint: within one omega0 grid step of 3pi/4
  const double b_lo = kPi - std::pow(kPi / 2.0 * std::exp(w0_step), 2) / kPi;
  const double b_hi = kPi - std::pow(kPi / 2.0 * std::exp(-w0_step), 2) / kPi;
  const bool b_ok = m.bandwidth >= b_lo - 0.02 && m.bandwidth <= b_hi + 0.02;

  std::ostringstream os;
  os << records.size() << " records, frontier " << fr.frontier.size()
     << (oracle_ok ? " == oracle" : " != ORACLE") << "; min-spread at {"
     << fmt_g(m.params.omega0) << "," << fmt_g(m.params.omega_c) << "} B=" << fmt_g(m.bandwidth)
     << " (3pi/4=" << fmt_g(3.0 * kPi / 4.0) << ")"
     << (lambda_ok ? ", all frontier lambda < 1/2" : ", LAMBDA BOUND VIOLATED");
  detail = os.str();
  return oracle_ok && lambda_ok && endpoint_ok && b_ok;
}

bool criterion8(std::string& detail) {
  const std::size_t anchor = fft_size_advisor(ChirpletParams::make(kPi / 10.0, kPi, 0.75));

  std::size_t family_max = 0;
  for (double lam : {0.25, 0.35, 0.45, 0.55, 0.65, 0.75, 0.82, 0.89}) {
    for (double w0 : geometric(kPi / 10.0 * 1.001, kPi / 4.0 * 0.999, 8)) {
      family_max = std::max(family_max, fft_size_advisor(ChirpletParams::make(w0, kPi, lam)));
    }
  }
  detail = "ratio-10 lambda-0.75 advisor " + std::to_string(anchor) +
           " (gate: 512); family max " + std::to_string(family_max) + " (gate: <= 1024)";
  return anchor == 512 && family_max <= 1024;
}

bool criterion9(std::string& detail) {
  std::vector<double> lams, counts;
  for (double lam = 0.30; lam <= 0.70 + 1e-9; lam += 0.04) {
    const ChirpletParams p = ChirpletParams::make(kPi / 5.0, kPi, lam);
    const AnalyticSignal u = synth_time(p, 4096);
    const TimeLocalization loc = measure_delay_spread(u, 0.01);
    lams.push_back(lam);
    counts.push_back(count_oscillations(u, loc));
  }
  bool monotone = true;
  for (std::size_t i = 1; i < counts.size(); ++i)
    if (!(counts[i] > counts[i - 1])) monotone = false;

  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(lams.size());
  for (std::size_t i = 0; i < lams.size(); ++i) {
    const double x = -1.0 / std::log(lams[i]);
    sx += x;
    sy += counts[i];
    sxx += x * x;
    sxy += x * counts[i];
  }
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double icept = (sy - slope * sx) / n;
  double ss_res = 0, ss_tot = 0;
  for (std::size_t i = 0; i < lams.size(); ++i) {
    const double x = -1.0 / std::log(lams[i]);
    ss_res += (counts[i] - slope * x - icept) * (counts[i] - slope * x - icept);
    ss_tot += (counts[i] - sy / n) * (counts[i] - sy / n);
  }
  const double r2 = 1.0 - ss_res / ss_tot;
  detail = std::string(monotone ? "strictly increasing" : "NOT MONOTONE") +
           "; -1/ln(lambda) fit R^2 = " + fmt_g(r2) + " (gate: 0.9)";
  return monotone && r2 > 0.9;
}

bool criterion10(std::string& detail) {
  const BenchmarkSpec spec = default_benchmark();
  auto [sig, truth] = make_benchmark(spec);

  const std::vector<double> scales = geometric(0.6, 1.0 / 0.6, 96);
  const ChirpletParams analyzer = ChirpletParams::make(kPi / 5.0, kPi, 0.5);
  const Scalogram hsc = hct(sig, analyzer, scales);
  std::vector<double> mscales(scales);
  for (double& a : mscales) a *= 10.0;
  const Scalogram msc = morlet_cwt(sig, 0.8 * kPi, mscales);
  const Spectrogram sg = stft(sig, 128, 64);

  const std::vector<Ridge> hr = extract_ridges(hsc, 3, scales.size() / 3);
  const std::vector<Ridge> mr = extract_ridges(msc, 3, scales.size() / 3);
  const DetectionReport rep = score_detections(hr, truth, 16);

  std::size_t tone_bin = 0;
  double best = -1.0;
  for (std::size_t k = 0; k < sg.n_bins() / 2; ++k) {
    double acc = 0.0;
    for (double v : sg.magnitudes[k]) acc += v;
    if (acc > best) {
      best = acc;
      tone_bin = k;
    }
  }
  const auto want_bin = static_cast<std::size_t>(
      std::lround(static_cast<double>(sg.window_len) * (kPi / 3.0) / (2.0 * kPi)));

  auto mean_r2 = [](const std::vector<Ridge>& rs) {
    if (rs.empty()) return 0.0;
    double s = 0.0;
    for (const Ridge& r : rs) s += r.line_fit.r_squared;
    return s / static_cast<double>(rs.size());
  };
  const double h_r2 = mean_r2(hr), m_r2 = mean_r2(mr);

  const bool ok = rep.matched.size() == 3 && rep.false_alarms == 0 && tone_bin == want_bin &&
                  h_r2 > m_r2;
  std::ostringstream os;
  os << rep.matched.size() << "/3 hits (tol 16), " << rep.false_alarms
     << " false alarms, mean |error| " << fmt_g(rep.mean_abs_center_error) << "; tone bin "
     << tone_bin << " (want " << want_bin << "); mean R^2 HCT " << fmt_g(h_r2) << " vs Morlet "
     << fmt_g(m_r2);
  detail = os.str();
  return ok;
}

bool criterion11(std::string& detail) {
  const ChirpletParams p = ChirpletParams::make(kPi / 5.0, kPi, 0.5);
  const double k = std::exp(1.0 / (2.0 * p.kappa_c()));
  const AnalyticSignal sig = make_lp_chirp(p, 1024);
  const std::vector<double> multipliers = {1.0, 1.0 / k, k, 0.5, 2.0};
  auto [sc, rep] = scale_law_fast_path(sig, p, 1.0, multipliers);

  bool ok = rep.relative_errors.size() == multipliers.size();
  std::ostringstream os;
  os << "errors:";
  for (std::size_t i = 0; i < rep.multipliers.size(); ++i) {
    os << " m=" << fmt_g(rep.multipliers[i]) << ":" << fmt_g(rep.relative_errors[i]);
    if (rep.multipliers[i] == 1.0 && rep.relative_errors[i] != 0.0) ok = false;
    if (!std::isfinite(rep.relative_errors[i])) ok = false;
  }
  os << " (m=1 exactly 0; others informational)";
  detail = os.str();
  return ok;
}

bool criterion12(std::string& detail) {
  const fs::path base = fs::temp_directory_path() / "altes_acceptance";
  fs::remove_all(base);
  altes::cmd::BenchmarkConfig cfg;
  cfg.seed = 7;
  cfg.out_dir = base / "run1";
  altes::cmd::BenchmarkConfig cfg2 = cfg;
  cfg2.out_dir = base / "run2";
  if (altes::cmd::run_benchmark(cfg) != 0 || altes::cmd::run_benchmark(cfg2) != 0) {
    detail = "benchmark command did not succeed";
    return false;
  }
  std::size_t files = 0;
  for (const auto& entry : fs::directory_iterator(cfg.out_dir)) {
    const fs::path other = cfg2.out_dir / entry.path().filename();
    std::ifstream a(entry.path(), std::ios::binary), b(other, std::ios::binary);
    std::ostringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    if (sa.str() != sb.str()) {
      detail = "mismatch in " + entry.path().filename().string();
      return false;
    }
    ++files;
  }
  detail = std::to_string(files) + " output files byte-identical across repeated runs";
  return files > 0;
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  run(1, "classic conversion", criterion1);
  run(2, "spectrum calibration", criterion2);
  run(3, "self-similarity identity", criterion3);
  run(4, "energy and admissibility", criterion4);
  run(5, "vanishing moments", criterion5);
  run(6, "chirp-rate reciprocity", criterion6);
  run(7, "efficient frontier", criterion7);
  run(8, "transform-size advisor", criterion8);
  run(9, "oscillation law", criterion9);
  run(10, "benchmark detection", criterion10);
  run(11, "scale-law diagnostic", criterion11);
  run(12, "benchmark determinism", criterion12);
  if (g_failures) {
    std::printf("%d criteria FAILED\n", g_failures);
    return 1;
  }
  std::printf("all 12 criteria passed\n");
  return 0;
}
