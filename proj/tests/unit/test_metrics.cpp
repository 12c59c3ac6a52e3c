#include <doctest.h>

#include <cmath>
#include <limits>

#include "../support/oracles.hpp"
#include "wmark/error.hpp"
#include "wmark/metrics.hpp"

using namespace wmark;

TEST_SUITE("metrics") {

TEST_CASE("mse of identical signals is exactly zero") {
  std::vector<double> x = {0.25, -0.5, 0.125};
  CHECK(mse(x, x) == 0.0);
}

TEST_CASE("mse hand values") {
  CHECK(mse(std::vector<double>{0, 0}, std::vector<double>{1, 1}) == 1.0);
  CHECK(mse(std::vector<double>{1, 2, 3}, std::vector<double>{1, 2, 6}) ==
        doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("mse errors") {
  CHECK_THROWS_AS(mse(std::vector<double>{1}, std::vector<double>{1, 2}), LengthMismatch);
  CHECK_THROWS_AS(mse(std::vector<double>{}, std::vector<double>{}), EmptyInput);
}

TEST_CASE("mse properties: symmetry, identity, quadratic scaling") {
  oracles::TestRng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    size_t n = 1 + rng.index(200);
    std::vector<double> x(n), y(n), ax(n), ay(n);
    double a = rng.uniform(0.1, 3.0);
    for (size_t i = 0; i < n; ++i) {
      x[i] = rng.uniform(-1.0, 1.0);
      y[i] = rng.uniform(-1.0, 1.0);
      ax[i] = a * x[i];
      ay[i] = a * y[i];
    }
    CHECK(mse(x, y) == mse(y, x));
    CHECK(mse(x, x) == 0.0);
    CHECK(mse(ax, ay) == doctest::Approx(a * a * mse(x, y)).epsilon(1e-12));
  }
}

TEST_CASE("snr of identical signals is the +inf sentinel") {
  std::vector<double> x = {0.5, 0.25};
  CHECK(std::isinf(snr_db(x, x)));
  CHECK(snr_db(x, x) > 0);
}

TEST_CASE("snr hand values") {
  std::vector<double> ones = {1, 1, 1, 1};
  std::vector<double> zeros = {0, 0, 0, 0};
  CHECK(snr_db(ones, zeros) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(snr_db(std::vector<double>{2, 2}, std::vector<double>{1, 1}) ==
        doctest::Approx(10.0 * std::log10(4.0)).epsilon(1e-12));
}

TEST_CASE("snr rejects an all-zero reference") {
  std::vector<double> zeros = {0, 0};
  std::vector<double> x = {1, 1};
  CHECK_THROWS_AS(snr_db(zeros, x), ZeroReference);
}

TEST_CASE("ber hand values and properties") {
  std::vector<uint8_t> a = {0, 1, 1};
  std::vector<uint8_t> b = {0, 1, 0};
  CHECK(ber(a, a) == 0.0);
  CHECK(ber(a, b) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  oracles::TestRng rng(72);
  for (int trial = 0; trial < 10; ++trial) {
    size_t n = 1 + rng.index(500);
    std::vector<uint8_t> s(n), flipped(n);
    for (size_t i = 0; i < n; ++i) {
      s[i] = static_cast<uint8_t>(rng.index(2));
      flipped[i] = s[i] ^ 1;
    }
    CHECK(ber(s, flipped) == 1.0);
    double r = ber(s, s);
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
  }
}

TEST_CASE("fidelity maps degenerate cases to infinities") {
  std::vector<double> zeros = {0, 0};
  std::vector<double> x = {1, 1};
  FidelityReport same = fidelity(x, x);
  CHECK(same.mse == 0.0);
  CHECK(same.snr_db == std::numeric_limits<double>::infinity());
  CHECK(same.n == 2);

  FidelityReport zero_ref = fidelity(zeros, x);
  CHECK(zero_ref.mse == 1.0);
  CHECK(zero_ref.snr_db == -std::numeric_limits<double>::infinity());
}

}  // TEST_SUITE
