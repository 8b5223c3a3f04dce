#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "altes/commands.hpp"

namespace {

template <typename Config>
void add_common_chirplet_flags(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--omega0", cfg.omega0, "Analyzing center frequency, rad/sample");
  cmd->add_option("--omega-c", cfg.omega_c, "Analyzing upper cutoff, rad/sample");
  cmd->add_option("--lambda", cfg.lambda, "Analyzing chirp rate");
  cmd->add_option("--kc-db", cfg.kc_db, "Cutoff level in dB (20 log10)");
  cmd->add_flag("--pi-units", cfg.pi_units, "Interpret frequency flags as multiples of pi");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Altes log-periodic chirplets and the hyperbolic chirplet transform"};
  app.require_subcommand(1);

  altes::cmd::SynthConfig synth_cfg;
  CLI::App* synth = app.add_subcommand("synth", "Synthesize one chirplet (spectrum + waveform)");
  synth->add_option("--omega0", synth_cfg.omega0, "Center frequency, rad/sample");
  synth->add_option("--omega-c", synth_cfg.omega_c, "Upper cutoff frequency, rad/sample");
  synth->add_option("--bandwidth", synth_cfg.bandwidth, "-40 dB bandwidth, rad/sample");
  synth->add_option("--lambda", synth_cfg.lambda, "Chirp rate");
  synth->add_flag("--classic", synth_cfg.classic, "Use the {nu,k,c} parameterization");
  synth->add_option("--nu", synth_cfg.nu, "Classic exponent nu");
  synth->add_option("--k", synth_cfg.k, "Classic scaling constant k (> 1)");
  synth->add_option("--c", synth_cfg.c, "Classic phase constant c (!= 0)");
  synth->add_option("--kc-db", synth_cfg.kc_db, "Cutoff level in dB");
  synth->add_option("--nfft", synth_cfg.n_fft, "Transform size (power of two)");
  synth->add_flag("--pi-units", synth_cfg.pi_units, "Frequency flags are multiples of pi");
  synth->add_flag("--plot", synth_cfg.plot, "Also render SVG charts");
  synth->add_option("--out-dir", synth_cfg.out_dir, "Output directory");

  altes::cmd::SweepConfig sweep_cfg;
  CLI::App* sweep = app.add_subcommand("sweep", "Parameter-grid study with Pareto frontier");
  sweep->add_option("--omega0-points", sweep_cfg.n_omega0, "Grid points along omega0");
  sweep->add_option("--ratio-points", sweep_cfg.n_ratio, "Grid points along omega_c/omega0");
  sweep->add_option("--lambda-points", sweep_cfg.n_lambda, "Grid points along lambda");
  sweep->add_option("--omega0-min", sweep_cfg.omega0_min, "Lowest omega0");
  sweep->add_option("--omega0-max", sweep_cfg.omega0_max, "Highest omega0");
  sweep->add_option("--lambda-min", sweep_cfg.lambda_min, "Lowest lambda");
  sweep->add_option("--lambda-max", sweep_cfg.lambda_max, "Highest lambda");
  sweep->add_option("--kc-db", sweep_cfg.kc_db, "Cutoff level in dB");
  sweep->add_flag("--pi-units", sweep_cfg.pi_units, "Frequency flags are multiples of pi");
  sweep->add_flag("--plot", sweep_cfg.plot, "Also render an SVG scatter chart");
  sweep->add_option("--out-dir", sweep_cfg.out_dir, "Output directory");

  altes::cmd::BenchmarkConfig bench_cfg;
  CLI::App* bench =
      app.add_subcommand("benchmark", "Synthetic detection experiment (STFT vs Morlet vs HCT)");
  bench->add_option("--spec", bench_cfg.spec_path, "Benchmark spec JSON (defaults built in)");
  bench->add_option("--snr-db", bench_cfg.snr_db, "Signal-to-noise ratio in dB");
  bench->add_option("--seed", bench_cfg.seed, "Noise seed");
  bench->add_flag("--noiseless", bench_cfg.noiseless, "Disable the noise term");
  add_common_chirplet_flags(bench, bench_cfg);
  bench->add_option("--window-len", bench_cfg.window_len, "STFT window length");
  bench->add_option("--hop", bench_cfg.hop, "STFT hop (defaults to window/2)");
  bench->add_option("--scale-min", bench_cfg.scale_min, "Smallest HCT scale");
  bench->add_option("--scale-max", bench_cfg.scale_max, "Largest HCT scale");
  bench->add_option("--scales", bench_cfg.n_scales, "Number of scales");
  bench->add_option("--morlet-center", bench_cfg.morlet_center, "Morlet center frequency");
  bench->add_option("--morlet-scale-factor", bench_cfg.morlet_scale_factor,
                    "Morlet scales relative to HCT scales");
  bench->add_option("--max-ridges", bench_cfg.max_ridges, "Ridges to keep");
  bench->add_option("--min-len", bench_cfg.min_len, "Minimum ridge length (0 = scales/3)");
  bench->add_option("--tol", bench_cfg.tol, "Center matching tolerance, samples");
  bench->add_flag("--plot", bench_cfg.plot, "Also render SVG heat maps");
  bench->add_option("--out-dir", bench_cfg.out_dir, "Output directory");

  altes::cmd::VerifyConfig verify_cfg;
  CLI::App* verify = app.add_subcommand("verify", "Run the numeric invariant suite");
  add_common_chirplet_flags(verify, verify_cfg);
  verify->add_option("--out", verify_cfg.out, "Write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (synth->parsed()) return altes::cmd::run_synth(synth_cfg);
    if (sweep->parsed()) return altes::cmd::run_sweep(sweep_cfg);
    if (bench->parsed()) return altes::cmd::run_benchmark(bench_cfg);
    if (verify->parsed()) return altes::cmd::run_verify(verify_cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
