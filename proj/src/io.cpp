#include "altes/io.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace altes::io {

namespace {

constexpr char kMagic[8] = {'A', 'L', 'T', 'E', 'S', 'S', 'I', 'G'};
constexpr std::uint32_t kVersion = 1;

[[noreturn]] void fail(const std::filesystem::path& p, const std::string& what) {
  throw std::runtime_error(p.string() + ": " + what);
}

std::ofstream open_out(const std::filesystem::path& p, std::ios::openmode mode = {}) {
  std::ofstream f(p, mode | std::ios::trunc);
  if (!f) fail(p, "cannot open for writing");
  return f;
}

}  // namespace

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_signal_binary(const std::filesystem::path& path, const AnalyticSignal& sig) {
  std::ofstream f = open_out(path, std::ios::binary);
  f.write(kMagic, 8);
  const std::uint32_t version = kVersion, reserved = 0;
  const std::uint64_t count = sig.samples.size();
  f.write(reinterpret_cast<const char*>(&version), 4);
  f.write(reinterpret_cast<const char*>(&reserved), 4);
  f.write(reinterpret_cast<const char*>(&count), 8);
  f.write(reinterpret_cast<const char*>(&sig.dt), 8);
  for (const cplx& s : sig.samples) {
    const double re = s.real(), im = s.imag();
    f.write(reinterpret_cast<const char*>(&re), 8);
    f.write(reinterpret_cast<const char*>(&im), 8);
  }
  if (!f) fail(path, "write failed");
}

AnalyticSignal read_signal_binary(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(path, "cannot open");
  char magic[8];
  std::uint32_t version = 0, reserved = 0;
  std::uint64_t count = 0;
  AnalyticSignal sig;
  f.read(magic, 8);
  f.read(reinterpret_cast<char*>(&version), 4);
  f.read(reinterpret_cast<char*>(&reserved), 4);
  f.read(reinterpret_cast<char*>(&count), 8);
  f.read(reinterpret_cast<char*>(&sig.dt), 8);
  if (!f || std::memcmp(magic, kMagic, 8) != 0) fail(path, "not an ALTESSIG file");
  if (version != kVersion) fail(path, "unsupported version");
  sig.samples.resize(count);
  for (auto& s : sig.samples) {
    double re = 0, im = 0;
    f.read(reinterpret_cast<char*>(&re), 8);
    f.read(reinterpret_cast<char*>(&im), 8);
    s = cplx(re, im);
  }
  if (!f) fail(path, "truncated sample data");
  return sig;
}

void write_signal_csv(const std::filesystem::path& path, const AnalyticSignal& sig,
                      const std::string& config) {
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "index,real,imag\n";
  for (std::size_t i = 0; i < sig.samples.size(); ++i)
    f << i << ',' << fmt(sig.samples[i].real()) << ',' << fmt(sig.samples[i].imag()) << '\n';
}

AnalyticSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(path, "cannot open");
  AnalyticSignal sig;
  std::string line;
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#' || line.rfind("index", 0) == 0) continue;
    std::size_t idx;
    double re, im;
    if (std::sscanf(line.c_str(), "%zu,%lf,%lf", &idx, &re, &im) != 3)
      fail(path, "malformed row: " + line);
    sig.samples.emplace_back(re, im);
  }
  return sig;
}

void write_spectrum_csv(const std::filesystem::path& path, const Spectrum& s,
                        const std::string& config) {
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "omega,real,imag,magnitude\n";
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    const double w = static_cast<double>(i) * s.domega;
    f << fmt(w) << ',' << fmt(s.values[i].real()) << ',' << fmt(s.values[i].imag()) << ','
      << fmt(std::abs(s.values[i])) << '\n';
  }
}

void write_sweep_csv(const std::filesystem::path& path, const FrontierResult& fr,
                     const std::string& config, bool frontier_only) {
  std::vector<bool> on(fr.records.size(), false);
  for (std::size_t idx : fr.frontier) on[idx] = true;
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "omega0,omega_c,lambda,bandwidth,delay_spread,oscillations,n_fft,on_frontier\n";
  for (std::size_t i = 0; i < fr.records.size(); ++i) {
    if (frontier_only && !on[i]) continue;
    const SweepRecord& r = fr.records[i];
    f << fmt(r.params.omega0) << ',' << fmt(r.params.omega_c) << ',' << fmt(r.params.lambda)
      << ',' << fmt(r.bandwidth) << ',' << fmt(r.delay_spread) << ',' << fmt(r.oscillations)
      << ',' << r.n_fft_used << ',' << (on[i] ? 1 : 0) << '\n';
  }
}

void write_scalogram_csv(const std::filesystem::path& path, const Scalogram& sc,
                         const std::string& config) {
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "scale";
  for (double b : sc.shifts) f << ',' << fmt(b);
  f << '\n';
  for (std::size_t i = 0; i < sc.n_scales(); ++i) {
    f << fmt(sc.scales[i]);
    for (const cplx& v : sc.coefficients[i]) {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%.9g", std::abs(v));
      f << ',' << buf;
    }
    f << '\n';
  }
}

void write_spectrogram_csv(const std::filesystem::path& path, const Spectrogram& sg,
                           const std::string& config) {
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "bin";
  for (std::size_t t = 0; t < sg.n_frames(); ++t) f << ',' << t * sg.frame_hop;
  f << '\n';
  for (std::size_t k = 0; k < sg.n_bins(); ++k) {
    f << k;
    for (double v : sg.magnitudes[k]) {
      char buf[24];
      std::snprintf(buf, sizeof buf, "%.9g", v);
      f << ',' << buf;
    }
    f << '\n';
  }
}

void write_ridges_csv(const std::filesystem::path& path, const std::vector<Ridge>& ridges,
                      const Scalogram& sc, const std::string& config) {
  std::ofstream f = open_out(path);
  f << "# " << config << "\n";
  f << "ridge_id,scale_idx,scale,shift,magnitude\n";
  for (std::size_t r = 0; r < ridges.size(); ++r)
    for (const RidgePoint& p : ridges[r].points)
      f << r << ',' << p.scale_idx << ',' << fmt(sc.scales[p.scale_idx]) << ',' << p.shift_idx
        << ',' << fmt(p.magnitude) << '\n';
}

std::string detection_report_json(const DetectionReport& rep) {
  nlohmann::json j;
  j["detections"] = nlohmann::json::array();
  for (const auto& d : rep.detections) {
    j["detections"].push_back({{"estimated_center", d.estimated_center},
                               {"score", d.score},
                               {"ridge_points", d.ridge.points.size()},
                               {"slope", d.ridge.line_fit.slope},
                               {"intercept", d.ridge.line_fit.intercept},
                               {"r_squared", d.ridge.line_fit.r_squared}});
  }
  j["matches"] = nlohmann::json::array();
  for (const auto& m : rep.matched)
    j["matches"].push_back({{"truth_index", m.truth_index},
                            {"detection_index", m.detection_index},
                            {"center_error", m.center_error}});
  j["hits"] = rep.matched.size();
  j["misses"] = rep.misses;
  j["false_alarms"] = rep.false_alarms;
  j["mean_abs_center_error"] = rep.mean_abs_center_error;
  return j.dump(2) + "\n";
}

std::string ground_truth_json(const GroundTruth& truth, const BenchmarkSpec& spec) {
  nlohmann::json j;
  j["chirp_centers"] = truth.chirp_centers;
  j["total_len"] = spec.total_len;
  j["tone_freq"] = spec.tone_freq;
  j["tone_amplitude"] = spec.tone_amplitude;
  j["snr_db"] = spec.snr_db;
  j["noiseless"] = spec.noiseless;
  j["seed"] = spec.seed;
  j["noise_algorithm"] = kNoiseAlgorithm;
  j["chirps"] = nlohmann::json::array();
  for (const auto& c : spec.chirps)
    j["chirps"].push_back({{"omega0", c.params.omega0},
                           {"omega_c", c.params.omega_c},
                           {"lambda", c.params.lambda},
                           {"kc_level", c.params.kc_level},
                           {"center", c.center},
                           {"amplitude", c.amplitude}});
  return j.dump(2) + "\n";
}

BenchmarkSpec read_benchmark_spec_json(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) fail(path, "cannot open");
  nlohmann::json j;
  try {
    f >> j;
  } catch (const nlohmann::json::parse_error& e) {
    fail(path, std::string("JSON parse error: ") + e.what());
  }
  try {
    BenchmarkSpec spec;
    spec.tone_freq = j.value("tone_freq", kPi / 3.0);
    spec.tone_amplitude = j.value("tone_amplitude", 0.05);
    spec.snr_db = j.value("snr_db", 0.0);
    spec.noiseless = j.value("noiseless", false);
    spec.total_len = j.value("total_len", std::size_t{4096});
    spec.seed = j.value("seed", std::uint64_t{0});
    for (const auto& c : j.at("chirps")) {
      ChirpPlacement cp;
      cp.params = ChirpletParams::make(c.at("omega0").get<double>(), c.at("omega_c").get<double>(),
                                       c.at("lambda").get<double>(),
                                       c.value("kc_level", kDefaultKcLevel));
      cp.center = c.at("center").get<std::size_t>();
      cp.amplitude = c.value("amplitude", 1.0);
      spec.chirps.push_back(cp);
    }
    return spec;
  } catch (const nlohmann::json::exception& e) {
    fail(path, std::string("invalid benchmark spec: ") + e.what());
  }
}

// ---------------------------------------------------------------- SVG plots

namespace {

struct Canvas {
  std::ostringstream body;
  double w = 960, h = 540, margin = 48;

  double X(double t) const { return margin + t * (w - 2 * margin); }
  double Y(double t) const { return h - margin - t * (h - 2 * margin); }

  std::string finish(const std::string& title) {
    std::ostringstream os;
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h << "'>\n"
       << "<rect width='100%' height='100%' fill='white'/>\n"
       << "<text x='" << w / 2 << "' y='24' text-anchor='middle' font-family='sans-serif' "
          "font-size='15'>"
       << title << "</text>\n"
       << "<rect x='" << margin << "' y='" << margin << "' width='" << w - 2 * margin
       << "' height='" << h - 2 * margin << "' fill='none' stroke='#888'/>\n"
       << body.str() << "</svg>\n";
    return os.str();
  }
};

void minmax(const std::vector<double>& v, double& lo, double& hi) {
  for (double x : v) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (!(hi > lo)) hi = lo + 1.0;
}

const char* kSeriesColors[] = {"#1f6fb2", "#d1495b", "#3a7d44", "#8d6a9f"};

}  // namespace

void write_line_svg(const std::filesystem::path& path, const std::vector<double>& x,
                    const std::vector<std::vector<double>>& series, const std::string& title) {
  Canvas c;
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  minmax(x, xlo, xhi);
  for (const auto& s : series) minmax(s, ylo, yhi);
  for (std::size_t si = 0; si < series.size(); ++si) {
    c.body << "<polyline fill='none' stroke='" << kSeriesColors[si % 4]
           << "' stroke-width='1' points='";
    for (std::size_t i = 0; i < x.size() && i < series[si].size(); ++i)
      c.body << c.X((x[i] - xlo) / (xhi - xlo)) << ',' << c.Y((series[si][i] - ylo) / (yhi - ylo))
             << ' ';
    c.body << "'/>\n";
  }
  open_out(path) << c.finish(title);
}

void write_heatmap_svg(const std::filesystem::path& path,
                       const std::vector<std::vector<double>>& grid, const std::string& title) {
  if (grid.empty() || grid[0].empty()) return;
  // max-pool down to a drawable cell count, log-magnitude color scale
  const std::size_t rows = grid.size(), cols = grid[0].size();
  const std::size_t max_r = 128, max_c = 256;
  const std::size_t rs = (rows + max_r - 1) / max_r, cs = (cols + max_c - 1) / max_c;
  const std::size_t nr = (rows + rs - 1) / rs, nc = (cols + cs - 1) / cs;

  std::vector<std::vector<double>> cell(nr, std::vector<double>(nc, 0.0));
  double peak = 0.0;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      auto& c = cell[i / rs][j / cs];
      c = std::max(c, grid[i][j]);
      peak = std::max(peak, grid[i][j]);
    }
  if (peak <= 0.0) peak = 1.0;

  Canvas c;
  const double cw = (c.w - 2 * c.margin) / nc, ch = (c.h - 2 * c.margin) / nr;
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) {
      const double db = 20.0 * std::log10(std::max(cell[i][j] / peak, 1e-4));
      const double t = 1.0 + db / 80.0;  // [-80,0] dB -> [0,1]
      const int v = static_cast<int>(255.0 * std::clamp(1.0 - t, 0.0, 1.0));
      c.body << "<rect x='" << c.margin + j * cw << "' y='" << c.h - c.margin - (i + 1) * ch
             << "' width='" << cw + 0.5 << "' height='" << ch + 0.5 << "' fill='rgb(" << v << ','
             << v << ",255)'/>\n";
    }
  open_out(path) << c.finish(title);
}

void write_scatter_svg(const std::filesystem::path& path, const std::vector<double>& x,
                       const std::vector<double>& y, const std::vector<bool>& highlight,
                       const std::string& title) {
  Canvas c;
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  minmax(x, xlo, xhi);
  minmax(y, ylo, yhi);
  for (std::size_t i = 0; i < x.size() && i < y.size(); ++i) {
    const bool hl = i < highlight.size() && highlight[i];
    c.body << "<circle cx='" << c.X((x[i] - xlo) / (xhi - xlo)) << "' cy='"
           << c.Y((y[i] - ylo) / (yhi - ylo)) << "' r='" << (hl ? 3.0 : 1.5) << "' fill='"
           << (hl ? "#d1495b" : "#1f6fb2") << "'/>\n";
  }
  open_out(path) << c.finish(title);
}

}  // namespace altes::io
