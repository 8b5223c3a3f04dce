#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "altes/io.hpp"

using altes::AnalyticSignal;
using altes::cplx;

namespace {

namespace fs = std::filesystem;

fs::path temp_dir() {
  const fs::path d = fs::temp_directory_path() / "altes_io_test";
  fs::create_directories(d);
  return d;
}

AnalyticSignal random_signal(std::size_t n) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  AnalyticSignal s;
  s.dt = 1.0;
  s.samples.resize(n);
  for (auto& v : s.samples) v = cplx(u(rng), u(rng));
  return s;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("binary signal round trip preserves every bit") {
  const fs::path p = temp_dir() / "sig.sig";
  const AnalyticSignal s = random_signal(257);
  altes::io::write_signal_binary(p, s);
  const AnalyticSignal r = altes::io::read_signal_binary(p);
  REQUIRE(r.samples.size() == s.samples.size());
  CHECK(r.dt == s.dt);
  for (std::size_t i = 0; i < s.samples.size(); ++i) CHECK(r.samples[i] == s.samples[i]);
  CHECK(fs::file_size(p) == 32 + 16 * s.samples.size());
}

TEST_CASE("binary reader rejects foreign files") {
  const fs::path p = temp_dir() / "junk.sig";
  std::ofstream(p) << "definitely not a signal";
  CHECK_THROWS_AS(altes::io::read_signal_binary(p), std::runtime_error);
}

TEST_CASE("csv signal round trip preserves values") {
  const fs::path p = temp_dir() / "sig.csv";
  const AnalyticSignal s = random_signal(64);
  altes::io::write_signal_csv(p, s, "unit test config");
  const AnalyticSignal r = altes::io::read_signal_csv(p);
  REQUIRE(r.samples.size() == s.samples.size());
  for (std::size_t i = 0; i < s.samples.size(); ++i) CHECK(r.samples[i] == s.samples[i]);

  // header and config comment are present
  std::ifstream f(p);
  std::string line1, line2;
  std::getline(f, line1);
  std::getline(f, line2);
  CHECK(line1 == "# unit test config");
  CHECK(line2 == "index,real,imag");
}

TEST_CASE("benchmark spec json round trips through the reader") {
  const fs::path p = temp_dir() / "spec.json";
  std::ofstream(p) << R"({
    "tone_freq": 1.0471975511965976,
    "tone_amplitude": 0.07,
    "snr_db": -3.0,
    "total_len": 2048,
    "seed": 99,
    "chirps": [
      {"omega0": 0.62831853071795862, "omega_c": 3.1415926535897931, "lambda": 0.5, "center": 700}
    ]
  })";
  const altes::BenchmarkSpec spec = altes::io::read_benchmark_spec_json(p);
  CHECK(spec.snr_db == -3.0);
  CHECK(spec.seed == 99);
  REQUIRE(spec.chirps.size() == 1);
  CHECK(spec.chirps[0].center == 700);
  CHECK(spec.chirps[0].amplitude == 1.0);

  const fs::path bad = temp_dir() / "bad.json";
  std::ofstream(bad) << "{ not json";
  CHECK_THROWS_AS(altes::io::read_benchmark_spec_json(bad), std::runtime_error);
}

TEST_CASE("full-precision double formatting survives a round trip") {
  for (double v : {1.0 / 3.0, 3.141592653589793, 1e-300, -7.25, 0.0}) {
    CHECK(std::stod(altes::io::fmt(v)) == v);
  }
}

}  // TEST_SUITE
