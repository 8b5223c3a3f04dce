#include "altes/commands.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "altes/detect.hpp"
#include "altes/io.hpp"
#include "altes/properties.hpp"
#include "altes/sweep.hpp"
#include "altes/synth.hpp"
#include "altes/transform.hpp"

namespace altes::cmd {

namespace {

namespace fs = std::filesystem;

double kc_from_db(double db) { return std::pow(10.0, db / 20.0); }

// Removes everything registered unless the command reaches commit().
class FileSet {
 public:
  ~FileSet() {
    if (committed_) return;
    std::error_code ec;
    for (const auto& p : paths_) fs::remove(p, ec);
  }
  fs::path add(fs::path p) {
    paths_.push_back(p);
    return p;
  }
  void commit() { committed_ = true; }

 private:
  std::vector<fs::path> paths_;
  bool committed_ = false;
};

int config_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 2;
}

std::vector<double> geometric_scales(double lo, double hi, std::size_t n) {
  if (!(lo > 0.0 && hi > lo) || n < 2)
    throw std::invalid_argument("scale axis requires 0 < min < max and >= 2 points");
  std::vector<double> s(n);
  const double step = (std::log(hi) - std::log(lo)) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) s[i] = std::exp(std::log(lo) + step * static_cast<double>(i));
  return s;
}

double mean_r_squared(const std::vector<Ridge>& ridges) {
  if (ridges.empty()) return 0.0;
  double s = 0.0;
  for (const Ridge& r : ridges) s += r.line_fit.r_squared;
  return s / static_cast<double>(ridges.size());
}

// library-side quadrature used by the verify suite (tests carry their own
// independent implementation); integrates f over x = log(w/w0) in [-span, span]
double log_domain_quad(const std::function<double(double)>& f, double span, std::size_t n) {
  const double h = 2.0 * span / static_cast<double>(n);
  double acc = 0.5 * (f(-span) + f(span));
  for (std::size_t i = 1; i < n; ++i) acc += f(-span + h * static_cast<double>(i));
  return acc * h;
}

}  // namespace

// ------------------------------------------------------------------- synth

int run_synth(const SynthConfig& cfg) {
  ChirpletParams p;
  const double kc = kc_from_db(cfg.kc_db);
  const double unit = cfg.pi_units ? kPi : 1.0;
  try {
    if (cfg.classic) {
      p = classic_to_modern(ClassicAltesParams::make(cfg.nu, cfg.k, cfg.c), kc);
    } else if (cfg.omega_c) {
      p = ChirpletParams::make(cfg.omega0 * unit, *cfg.omega_c * unit, cfg.lambda, kc);
    } else if (cfg.bandwidth) {
      p = ChirpletParams::from_bandwidth(cfg.omega0 * unit, *cfg.bandwidth * unit, cfg.lambda, kc);
    } else {
      return config_error("synth: either --omega-c or --bandwidth is required");
    }
    if (!is_pow2(cfg.n_fft) || cfg.n_fft < 8)
      return config_error("synth: --nfft must be a power of two >= 8");
  } catch (const std::exception& e) {
    return config_error(e.what());
  }

  std::ostringstream conf;
  conf << "altes synth omega0=" << io::fmt(p.omega0) << " omega_c=" << io::fmt(p.omega_c)
       << " lambda=" << io::fmt(p.lambda) << " kc_level=" << io::fmt(p.kc_level)
       << " n_fft=" << cfg.n_fft;

  fs::create_directories(cfg.out_dir);
  FileSet files;
  const Spectrum spec = synth_spectrum(p, cfg.n_fft);
  const AnalyticSignal u = synth_time(p, cfg.n_fft);

  io::write_spectrum_csv(files.add(cfg.out_dir / "spectrum.csv"), spec, conf.str());
  io::write_signal_csv(files.add(cfg.out_dir / "waveform.csv"), u, conf.str());
  io::write_signal_binary(files.add(cfg.out_dir / "waveform.sig"), u);

  if (cfg.plot) {
    std::vector<double> omega(spec.values.size()), mag_db(spec.values.size()),
        phase(spec.values.size());
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
      omega[i] = static_cast<double>(i) * spec.domega;
      mag_db[i] = 20.0 * std::log10(std::max(std::abs(spec.values[i]), 1e-8));
      phase[i] = std::arg(spec.values[i]);
    }
    io::write_line_svg(files.add(cfg.out_dir / "magnitude.svg"), omega, {mag_db},
                       "log-magnitude response (dB)");
    io::write_line_svg(files.add(cfg.out_dir / "phase.svg"), omega, {phase},
                       "phase response (rad)");
    std::vector<double> t(u.samples.size()), env(u.samples.size()), re(u.samples.size());
    for (std::size_t i = 0; i < u.samples.size(); ++i) {
      t[i] = static_cast<double>(i);
      env[i] = std::abs(u.samples[i]);
      re[i] = u.samples[i].real();
    }
    io::write_line_svg(files.add(cfg.out_dir / "waveform.svg"), t, {re, env},
                       "waveform (real part and envelope)");
  }
  files.commit();
  std::cout << "synth: wrote spectrum.csv, waveform.csv, waveform.sig to " << cfg.out_dir.string()
            << "\n";
  return 0;
}

// ------------------------------------------------------------------- sweep

int run_sweep(const SweepConfig& cfg) {
  SweepGrid grid;
  grid.n_omega0 = cfg.n_omega0;
  grid.n_ratio = cfg.n_ratio;
  grid.n_lambda = cfg.n_lambda;
  const double unit = cfg.pi_units ? kPi : 1.0;
  grid.omega0_min = cfg.omega0_min * unit;
  grid.omega0_max = cfg.omega0_max * unit;
  grid.lambda_min = cfg.lambda_min;
  grid.lambda_max = cfg.lambda_max;
  grid.kc_level = kc_from_db(cfg.kc_db);

  if (grid.size() == 0) return config_error("sweep: empty grid");
  if (grid.size() > 100000)
    return config_error("sweep: grid has " + std::to_string(grid.size()) +
                        " points (> 1e5); reduce --omega0-points/--ratio-points/--lambda-points");

  std::vector<SweepRecord> records;
  try {
    records = altes::run_sweep(grid);
  } catch (const std::exception& e) {
    return config_error(e.what());
  }
  const FrontierResult fr = pareto_frontier(records);

  std::ostringstream conf;
  conf << "altes sweep omega0=[" << io::fmt(grid.omega0_min) << "," << io::fmt(grid.omega0_max)
       << "]x" << grid.n_omega0 << " ratio_points=" << grid.n_ratio << " lambda=["
       << io::fmt(grid.lambda_min) << "," << io::fmt(grid.lambda_max) << "]x" << grid.n_lambda
       << " kc_level=" << io::fmt(grid.kc_level);

  fs::create_directories(cfg.out_dir);
  FileSet files;
  io::write_sweep_csv(files.add(cfg.out_dir / "sweep.csv"), fr, conf.str(), false);
  io::write_sweep_csv(files.add(cfg.out_dir / "frontier.csv"), fr, conf.str(), true);

  // advisory summary
  std::size_t min_idx = fr.frontier.empty() ? 0 : fr.frontier.front();
  std::size_t max_fft = 0;
  std::size_t flagged = 0;
  for (std::size_t i = 0; i < fr.records.size(); ++i) {
    const SweepRecord& r = fr.records[i];
    if (!r.fits) ++flagged;
    max_fft = std::max(max_fft, r.n_fft_used);
    if (r.fits && r.delay_spread < fr.records[min_idx].delay_spread) min_idx = i;
  }
  nlohmann::json j;
  j["records"] = fr.records.size();
  j["frontier_size"] = fr.frontier.size();
  j["flagged_not_fitting"] = flagged;
  j["max_n_fft_used"] = max_fft;
  const SweepRecord& mr = fr.records[min_idx];
  j["min_delay_spread"] = {{"omega0", mr.params.omega0}, {"omega_c", mr.params.omega_c},
                           {"lambda", mr.params.lambda}, {"delay_spread", mr.delay_spread},
                           {"bandwidth", mr.bandwidth}};
  {
    std::ofstream f(files.add(cfg.out_dir / "sweep_summary.json"));
    f << j.dump(2) << "\n";
  }

  if (cfg.plot) {
    std::vector<double> xs, ys;
    std::vector<bool> hl;
    std::vector<bool> on(fr.records.size(), false);
    for (std::size_t idx : fr.frontier) on[idx] = true;
    for (std::size_t i = 0; i < fr.records.size(); ++i) {
      xs.push_back(fr.records[i].delay_spread);
      ys.push_back(fr.records[i].bandwidth);
      hl.push_back(on[i]);
    }
    io::write_scatter_svg(files.add(cfg.out_dir / "frontier.svg"), xs, ys, hl,
                          "delay spread (samples) vs bandwidth (rad/s)");
  }
  files.commit();
  std::cout << "sweep: " << fr.records.size() << " records, " << fr.frontier.size()
            << " on the frontier; wrote sweep.csv, frontier.csv, sweep_summary.json to "
            << cfg.out_dir.string() << "\n";
  return 0;
}

// --------------------------------------------------------------- benchmark

int run_benchmark(const BenchmarkConfig& cfg) {
  const double unit = cfg.pi_units ? kPi : 1.0;
  BenchmarkSpec spec;
  ChirpletParams analyzer;
  try {
    spec = cfg.spec_path ? io::read_benchmark_spec_json(*cfg.spec_path) : default_benchmark();
    if (cfg.snr_db) spec.snr_db = *cfg.snr_db;
    if (cfg.seed) spec.seed = *cfg.seed;
    if (cfg.noiseless) spec.noiseless = true;
    analyzer = ChirpletParams::make(cfg.omega0 * unit, cfg.omega_c * unit, cfg.lambda,
                                    kc_from_db(cfg.kc_db));
  } catch (const std::exception& e) {
    return config_error(e.what());
  }

  const std::size_t min_len = cfg.min_len == 0 ? cfg.n_scales / 3 : cfg.min_len;

  std::ostringstream conf;
  conf << "altes benchmark seed=" << spec.seed << " snr_db=" << io::fmt(spec.snr_db)
       << " noiseless=" << (spec.noiseless ? 1 : 0) << " total_len=" << spec.total_len
       << " analyzer={" << io::fmt(analyzer.omega0) << "," << io::fmt(analyzer.omega_c) << ","
       << io::fmt(analyzer.lambda) << "} scales=[" << io::fmt(cfg.scale_min) << ","
       << io::fmt(cfg.scale_max) << "]x" << cfg.n_scales << " stft={" << cfg.window_len << ","
       << cfg.hop << "} morlet={" << io::fmt(cfg.morlet_center) << ",x"
       << io::fmt(cfg.morlet_scale_factor) << ",relwidth=" << io::fmt(kMorletRelWidth) << "}"
       << " ridges={max=" << cfg.max_ridges << ",min_len=" << min_len << ",tol=" << cfg.tol << "}"
       << " noise=" << kNoiseAlgorithm;

  try {
    auto [signal, truth] = make_benchmark(spec);

    const std::vector<double> scales = geometric_scales(cfg.scale_min, cfg.scale_max, cfg.n_scales);
    std::vector<double> morlet_scales(scales);
    for (double& a : morlet_scales) a *= cfg.morlet_scale_factor;

    const Scalogram hct_sc = hct(signal, analyzer, scales);
    const Scalogram mor_sc = morlet_cwt(signal, cfg.morlet_center, morlet_scales);
    const Spectrogram sg = stft(signal, cfg.window_len, cfg.hop);

    const std::vector<Ridge> hct_ridges = extract_ridges(hct_sc, cfg.max_ridges, min_len);
    const std::vector<Ridge> mor_ridges = extract_ridges(mor_sc, cfg.max_ridges, min_len);
    const DetectionReport report = score_detections(hct_ridges, truth, cfg.tol);

    // time-averaged STFT magnitude peak: the injected tone's bin
    std::size_t tone_bin = 0;
    double tone_best = -1.0;
    for (std::size_t k = 0; k < sg.n_bins() / 2; ++k) {
      double acc = 0.0;
      for (double v : sg.magnitudes[k]) acc += v;
      if (acc > tone_best) {
        tone_best = acc;
        tone_bin = k;
      }
    }

    fs::create_directories(cfg.out_dir);
    FileSet files;
    io::write_signal_binary(files.add(cfg.out_dir / "signal.sig"), signal);
    io::write_signal_csv(files.add(cfg.out_dir / "signal.csv"), signal, conf.str());
    io::write_signal_binary(files.add(cfg.out_dir / "clean.sig"), truth.clean_signal);
    {
      std::ofstream f(files.add(cfg.out_dir / "ground_truth.json"));
      f << io::ground_truth_json(truth, spec);
    }
    io::write_spectrogram_csv(files.add(cfg.out_dir / "stft.csv"), sg, conf.str());
    io::write_scalogram_csv(files.add(cfg.out_dir / "morlet_scalogram.csv"), mor_sc, conf.str());
    io::write_scalogram_csv(files.add(cfg.out_dir / "hct_scalogram.csv"), hct_sc, conf.str());
    io::write_ridges_csv(files.add(cfg.out_dir / "hct_ridges.csv"), hct_ridges, hct_sc, conf.str());
    io::write_ridges_csv(files.add(cfg.out_dir / "morlet_ridges.csv"), mor_ridges, mor_sc,
                         conf.str());
    {
      std::ofstream f(files.add(cfg.out_dir / "detection_report.json"));
      f << io::detection_report_json(report);
    }
    {
      nlohmann::json j;
      j["config"] = conf.str();
      j["hits"] = report.matched.size();
      j["misses"] = report.misses;
      j["false_alarms"] = report.false_alarms;
      j["mean_abs_center_error"] = report.mean_abs_center_error;
      j["stft_tone_bin"] = tone_bin;
      j["hct_mean_r_squared"] = mean_r_squared(hct_ridges);
      j["morlet_mean_r_squared"] = mean_r_squared(mor_ridges);
      std::ofstream f(files.add(cfg.out_dir / "benchmark_summary.json"));
      f << j.dump(2) << "\n";
    }

    if (cfg.plot) {
      io::write_heatmap_svg(files.add(cfg.out_dir / "stft.svg"), sg.magnitudes,
                            "STFT log-magnitude");
      auto mags = [](const Scalogram& sc) {
        std::vector<std::vector<double>> g(sc.n_scales(), std::vector<double>(sc.n_shifts()));
        for (std::size_t i = 0; i < sc.n_scales(); ++i)
          for (std::size_t b = 0; b < sc.n_shifts(); ++b)
            g[i][b] = std::abs(sc.coefficients[i][b]);
        return g;
      };
      io::write_heatmap_svg(files.add(cfg.out_dir / "morlet.svg"), mags(mor_sc),
                            "Morlet CWT log-magnitude");
      io::write_heatmap_svg(files.add(cfg.out_dir / "hct.svg"), mags(hct_sc),
                            "HCT log-magnitude");
    }
    files.commit();

    std::cout << "benchmark: " << report.matched.size() << "/" << truth.chirp_centers.size()
              << " chirps detected, " << report.false_alarms << " false alarms, tone bin "
              << tone_bin << "; outputs in " << cfg.out_dir.string() << "\n";
    return report.misses == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    return config_error(e.what());
  }
}

// ------------------------------------------------------------------ verify

namespace {

struct CheckEntry {
  std::string name;
  std::string status;  // pass | fail | warn | info
  std::string detail;
  double value = 0.0;
};

CheckEntry check(const std::string& name, bool ok, double value, const std::string& detail) {
  return {name, ok ? "pass" : "fail", detail, value};
}

}  // namespace

int run_verify(const VerifyConfig& cfg) {
  const double unit = cfg.pi_units ? kPi : 1.0;
  ChirpletParams p;
  try {
    p = ChirpletParams::make(cfg.omega0 * unit, cfg.omega_c * unit, cfg.lambda,
                             kc_from_db(cfg.kc_db));
  } catch (const std::exception& e) {
    return config_error(e.what());
  }

  std::vector<CheckEntry> entries;
  const double kap = p.kappa_c();
  constexpr std::size_t kQuadPoints = 1u << 16;
  const double span = std::max(30.0, std::sqrt(900.0 / kap));

  {  // energy closed form vs quadrature of |U(w)|^2/(2pi), w = w0 e^x
    const double closed = analytic_energy(p);
    const double quad = p.omega0 / (2.0 * kPi) *
                        log_domain_quad([&](double x) { return std::exp(-2.0 * kap * x * x + x); },
                                        span, kQuadPoints);
    const double err = std::abs(closed - quad) / closed;
    entries.push_back(check("square_integrability_energy", err < 1e-6, err,
                            "closed form vs quadrature, relative error"));
  }
  {  // admissibility constant
    const double closed = analytic_admissibility(p);
    const double quad =
        log_domain_quad([&](double x) { return std::exp(-2.0 * kap * x * x); }, span, kQuadPoints);
    const double err = std::abs(closed - quad) / closed;
    entries.push_back(
        check("admissibility_constant", err < 1e-6, err, "closed form vs quadrature"));
  }
  {  // regularity integral at alpha = 2, plus finiteness at alpha = 10
    const double alpha = 2.0;
    const double closed = regularity_integral(p, alpha);
    const double quad =
        p.omega0 * log_domain_quad([&](double x) { return std::exp(-kap * x * x + x); }, span,
                                   kQuadPoints) +
        std::pow(p.omega0, alpha + 1.0) *
            log_domain_quad([&](double x) { return std::exp(-kap * x * x + (1.0 + alpha) * x); },
                            span, kQuadPoints);
    const double err = std::abs(closed - quad) / closed;
    const bool finite10 = std::isfinite(regularity_integral(p, 10.0));
    entries.push_back(check("regularity_integral", err < 1e-5 && finite10, err,
                            "alpha=2 vs quadrature; finite at alpha=10"));
  }
  {  // vanishing moments
    const int got = vanishing_moments_check(p, 10);
    entries.push_back(check("vanishing_moments", got == 10, got,
                            "derivative estimates at DC below 1e-8 through order 10"));
  }
  {  // homogeneous identity w^n U(w) = C(n) U(w/k^n)
    const ClassicAltesParams cp = modern_to_classic(p);
    double worst = 0.0;
    for (double n : {1.0, 2.0, 3.0, 0.5, -1.0}) {
      const cplx cn = homogeneity_constant(p, n);
      const double kn = std::pow(cp.k, n);
      for (int i = 1; i <= 512; ++i) {
        const double w = kPi * static_cast<double>(i) / 512.0;
        const cplx lhs = std::pow(w, n) * chirplet_value(p, w);
        const cplx rhs = cn * chirplet_value(p, w / kn);
        const double den = std::max(std::max(std::abs(lhs), std::abs(rhs)), 1e-300);
        worst = std::max(worst, std::abs(lhs - rhs) / den);
      }
    }
    entries.push_back(check("homogeneous_identity", worst < 1e-9, worst,
                            "max relative error over n in {1,2,3,0.5,-1}"));
  }
  {  // Parseval between the sampled spectrum and the synthesized waveform
    const std::size_t n_fft = 4096;
    const Spectrum s = synth_spectrum(p, n_fft);
    const AnalyticSignal u = synth_time(p, n_fft);
    double spec_energy = 0.0;
    for (const cplx& v : s.values) spec_energy += std::norm(v);
    spec_energy /= static_cast<double>(n_fft);
    const double err = std::abs(u.energy() - spec_energy) / spec_energy;
    entries.push_back(check("parseval", err < 1e-10, err, "time vs frequency energy, relative"));
  }
  {  // lambda reciprocity: u_{1/lambda}[n] = conj(u_lambda[-n])
    const std::size_t n_fft = 2048;
    const AnalyticSignal a = synth_time(p, n_fft);
    const ChirpletParams prec =
        ChirpletParams::make(p.omega0, p.omega_c, 1.0 / p.lambda, p.kc_level);
    const AnalyticSignal b = synth_time(prec, n_fft);
    double worst = 0.0, peak = 0.0;
    for (std::size_t i = 0; i < n_fft; ++i) {
      const cplx expect = std::conj(a.samples[(n_fft - i) % n_fft]);
      worst = std::max(worst, std::abs(b.samples[i] - expect));
      peak = std::max(peak, std::abs(a.samples[i]));
    }
    entries.push_back(
        check("lambda_reciprocity", worst / peak < 1e-10, worst / peak,
              "time reversal plus conjugation under lambda -> 1/lambda, relative to peak"));
  }
  {  // magnitude symmetry in log frequency (limited only by probe rounding)
    double worst = 0.0;
    for (int i = 1; i <= 64; ++i) {
      const double x = 0.05 * static_cast<double>(i);
      worst = std::max(worst, std::abs(magnitude_response(p, p.omega0 * std::exp(x)) -
                                       magnitude_response(p, p.omega0 * std::exp(-x))));
    }
    entries.push_back(check("magnitude_symmetry", worst <= 1e-12, worst,
                            "M(w0 e^x) == M(w0 e^-x) to machine precision"));
  }
  {  // spectral peak within one grid step of omega0
    const Spectrum s = synth_spectrum(p, 4096);
    std::size_t arg = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < s.values.size(); ++i) {
      const double m = std::abs(s.values[i]);
      if (m > best) {
        best = m;
        arg = i;
      }
    }
    const double err = std::abs(static_cast<double>(arg) * s.domega - p.omega0);
    entries.push_back(check("peak_location", err <= s.domega, err,
                            "argmax|U| within one grid step of omega0"));
  }
  {  // advisory design bounds (never fails the run)
    const Table2Verdict v = table2_gate(p);
    CheckEntry e;
    e.name = "design_bounds";
    e.status = v.all_pass() ? "pass" : "warn";
    e.detail = v.summary();
    e.value = v.all_pass() ? 1.0 : 0.0;
    entries.push_back(e);
  }

  // scale-law diagnostic: reported, not gated
  nlohmann::json scale_law = nlohmann::json::array();
  try {
    const ClassicAltesParams cp = modern_to_classic(p);
    const AnalyticSignal sig = make_lp_chirp(p, 1024);
    const std::vector<double> multipliers = {1.0, 1.0 / cp.k, cp.k, 0.5, 2.0};
    auto [sc, rep] = scale_law_fast_path(sig, p, 1.0, multipliers);
    for (std::size_t i = 0; i < rep.multipliers.size(); ++i)
      scale_law.push_back(
          {{"multiplier", rep.multipliers[i]}, {"relative_error", rep.relative_errors[i]}});
    CheckEntry e;
    e.name = "scale_law_fast_path";
    e.status = "info";
    e.detail = "fast-path error per multiplier; no pass threshold";
    entries.push_back(e);
  } catch (const std::exception& e) {
    entries.push_back({"scale_law_fast_path", "info",
                       std::string("diagnostic unavailable: ") + e.what(), 0.0});
  }

  bool all_ok = true;
  nlohmann::json j;
  j["params"] = {{"omega0", p.omega0}, {"omega_c", p.omega_c}, {"lambda", p.lambda},
                 {"kc_level", p.kc_level}};
  j["checks"] = nlohmann::json::array();
  for (const CheckEntry& e : entries) {
    j["checks"].push_back(
        {{"name", e.name}, {"status", e.status}, {"detail", e.detail}, {"value", e.value}});
    std::cout << "[" << e.status << "] " << e.name << " (" << e.detail << ")\n";
    if (e.status == "fail") all_ok = false;
  }
  j["scale_law"] = scale_law;
  j["passed"] = all_ok;

  if (cfg.out) {
    fs::create_directories(cfg.out->parent_path().empty() ? "." : cfg.out->parent_path());
    std::ofstream f(*cfg.out);
    f << j.dump(2) << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace altes::cmd
