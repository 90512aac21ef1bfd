#include <doctest.h>

#include <cmath>

#include "test_helpers.hpp"
#include "wilson/errors.hpp"
#include "wilson/window.hpp"

using namespace wilson;

TEST_CASE("smooth step endpoint and fixed point values") {
  CHECK(smooth_step(0.0) == 0.0);
  CHECK(smooth_step(1.0) == 1.0);
  CHECK(smooth_step(0.5) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(smooth_step(-3.0) == 0.0);
  CHECK(smooth_step(7.0) == 1.0);
}

TEST_CASE("smooth step complement symmetry and monotonicity") {
  double prev = -1.0;
  for (int i = 0; i <= 200; ++i) {
    const double x = static_cast<double>(i) / 200.0;
    CHECK(smooth_step(x) + smooth_step(1.0 - x) ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(smooth_step(x) >= prev);
    prev = smooth_step(x);
  }
}

TEST_CASE("smooth step is flat at the transition ends") {
  // Central second-order finite differences at 0 and 1.
  const double h = 1e-3;
  CHECK(std::abs(smooth_step(h) - smooth_step(-h)) / (2.0 * h) < 1e-8);
  CHECK(std::abs(smooth_step(1.0 + h) - smooth_step(1.0 - h)) / (2.0 * h) < 1e-8);
}

TEST_CASE("smooth step jet matches finite differences in the interior") {
  const double x = 0.37;
  const Jet j = smooth_step(Jet::variable(x));
  CHECK(j.value() == smooth_step(x));
  const double h = 1e-5;
  const double fd = (smooth_step(x + h) - smooth_step(x - h)) / (2.0 * h);
  CHECK(j.derivative(1) == doctest::Approx(fd).epsilon(1e-8));
}

TEST_CASE("canonical window point values") {
  const Window w = build_wilson_window();
  CHECK(w(0.0) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(w(0.5) == 0.0);
  CHECK(w(-0.5) == 0.0);
  CHECK(w(0.25) * w(0.25) + w(-0.25) * w(-0.25) ==
        doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("canonical window support and positivity") {
  const Window w = build_wilson_window();
  CHECK(w(0.5001) == 0.0);
  CHECK(w(-0.7) == 0.0);
  CHECK(w(17.0) == 0.0);
  // Strictly positive away from the support edge; the closed form underflows
  // to zero within ~7e-4 of the edge.
  for (int i = -499; i <= 499; ++i) {
    const double x = static_cast<double>(i) / 1000.0;
    CHECK(w(x) > 0.0);
  }
}

TEST_CASE("canonical window is exactly even") {
  const Window w = build_wilson_window();
  CHECK(check_symmetry(w) <= 1e-15);
}

TEST_CASE("canonical window has unit norm") {
  const Window w = build_wilson_window();
  CHECK(window_l2_norm(w) == doctest::Approx(1.0).epsilon(1e-10));

  // Independent check: trapezoid rule on a refined grid.
  const Complex oracle = testing::trapezoid_oracle(
      [&w](double t) { return Complex{w(t) * w(t), 0.0}; }, -0.5, 0.5, 1 << 14);
  CHECK(std::abs(oracle.real() - 1.0) < 1e-12);
}

TEST_CASE("half-integer product residuals vanish for the canonical window") {
  const Window w = build_wilson_window();
  const std::vector<double> res = wilson_condition_residual(w, 3);
  REQUIRE(res.size() == 4);
  for (double r : res) CHECK(r <= 1e-12);
  // n >= 1 sums are identically zero by disjoint supports.
  CHECK(res[1] == 0.0);
  CHECK(res[2] == 0.0);
}

TEST_CASE("pointwise scaling shows up quadratically in the residual") {
  const Window w = build_wilson_window();
  const Window scaled([&w](double x) { return 1.1 * w(x); }, 0.5, w.grid_step());
  const std::vector<double> res = wilson_condition_residual(scaled, 0);
  CHECK(res[0] == doctest::Approx(0.42).epsilon(1e-12));
}

TEST_CASE("residual is invariant under half-period shifts of the grid") {
  // The shift sum is (1/2)-periodic, so scanning [0,1/2] and [1/2,1] agree.
  const Window w = build_wilson_window();
  const double step = 1e-3;
  double worst0 = 0.0, worst1 = 0.0;
  for (int i = 0; i <= 500; ++i) {
    const double x = static_cast<double>(i) * step;
    auto shifted_sum = [&w](double t) {
      double s = 0.0;
      for (int k = -3; k <= 3; ++k) s += w(t - 0.5 * k) * w(t - 0.5 * k);
      return s;
    };
    worst0 = std::max(worst0, std::abs(shifted_sum(x) - 2.0));
    worst1 = std::max(worst1, std::abs(shifted_sum(x + 0.5) - 2.0));
  }
  CHECK(std::abs(worst0 - worst1) <= 1e-14);
}

TEST_CASE("misconfigured support radius is rejected") {
  const Window w = build_wilson_window();
  CHECK_THROWS_AS(
      Window([&w](double x) { return w(x); },
             std::numeric_limits<double>::infinity(), w.grid_step()),
      ValidationError);
  CHECK_THROWS_AS(Window([](double) { return 0.0; }, -1.0, 1.0 / 1024.0),
                  ValidationError);
}

TEST_CASE("broken symmetry is detected") {
  const Window w = build_wilson_window();
  const Window crooked(
      [&w](double x) { return w(x) + (x > 0.0 && x < 0.5 ? x : 0.0); }, 0.5,
      w.grid_step());
  CHECK(check_symmetry(crooked) > 0.0);

  const Window zero([](double) { return 0.0; }, 0.5, 1.0 / 1024.0);
  CHECK(check_symmetry(zero) == 0.0);
}

TEST_CASE("window derivatives from the closed form") {
  const Window w = build_wilson_window();
  CHECK(w.derivative(0.0, 1) == doctest::Approx(0.0).epsilon(1e-14));
  const double x = 0.3;
  const double h = 1e-5;
  const double fd = (w(x + h) - w(x - h)) / (2.0 * h);
  CHECK(w.derivative(x, 1) == doctest::Approx(fd).epsilon(1e-7));
  CHECK(w.derivative(0.77, 2) == 0.0);  // outside the support
}

TEST_CASE("window sampling covers the closed support") {
  const Window w = build_wilson_window();
  const SampledFunction s = w.sample();
  CHECK(s.start == -0.5);
  CHECK(s.end() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(s.values.front() == Complex{});
  CHECK(s.values.back() == Complex{});
  CHECK(s.size() == 1025);
}
