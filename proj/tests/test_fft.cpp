#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "altes/fft.hpp"

using altes::cplx;

namespace {

// quadratic-cost reference transform, independent of the radix-2 path
std::vector<cplx> naive_dft(const std::vector<cplx>& x) {
  const std::size_t n = x.size();
  std::vector<cplx> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    cplx acc(0.0, 0.0);
    for (std::size_t t = 0; t < n; ++t) {
      const double ang = -2.0 * altes::kPi * static_cast<double>(k * t) / static_cast<double>(n);
      acc += x[t] * cplx(std::cos(ang), std::sin(ang));
    }
    out[k] = acc;
  }
  return out;
}

std::vector<cplx> random_signal(std::size_t n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<cplx> x(n);
  for (auto& v : x) v = cplx(u(rng), u(rng));
  return x;
}

}  // namespace

TEST_SUITE("fft") {

TEST_CASE("matches the naive DFT") {
  for (std::size_t n : {8u, 64u, 256u}) {
    const std::vector<cplx> x = random_signal(n, 17);
    const std::vector<cplx> got = altes::fft(x);
    const std::vector<cplx> want = naive_dft(x);
    double scale = 0.0;
    for (const cplx& v : want) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(got[k] - want[k]) / scale < 1e-12);
  }
}

TEST_CASE("round trip is the identity") {
  const std::vector<cplx> x = random_signal(1024, 5);
  const std::vector<cplx> back = altes::ifft(altes::fft(x));
  for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(back[i] - x[i]) < 1e-13);
}

TEST_CASE("Parseval holds to near machine precision") {
  const std::vector<cplx> x = random_signal(4096, 23);
  const std::vector<cplx> X = altes::fft(x);
  double et = 0.0, ef = 0.0;
  for (const cplx& v : x) et += std::norm(v);
  for (const cplx& v : X) ef += std::norm(v);
  ef /= static_cast<double>(x.size());
  CHECK(std::abs(et - ef) / et < 1e-13);
}

TEST_CASE("rejects non power-of-two lengths") {
  std::vector<cplx> x(12);
  CHECK_THROWS_AS(altes::fft_inplace(x), std::invalid_argument);
}

TEST_CASE("impulse transforms to a flat spectrum") {
  std::vector<cplx> x(64, cplx(0.0, 0.0));
  x[0] = cplx(1.0, 0.0);
  const std::vector<cplx> X = altes::fft(x);
  for (const cplx& v : X) CHECK(std::abs(v - cplx(1.0, 0.0)) < 1e-14);
}

}  // TEST_SUITE
