#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <vector>

#include "wilson/basis.hpp"
#include "wilson/corpus.hpp"
#include "wilson/timefreq.hpp"
#include "wilson/window.hpp"

namespace wilson::testing {

/// Reference quadrature independent of the library path: composite trapezoid
/// on a refined grid. Superalgebraically accurate for smooth functions whose
/// derivatives vanish at the interval ends.
template <typename F>
Complex trapezoid_oracle(F&& f, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  Complex acc = 0.5 * (f(lo) + f(hi));
  for (std::size_t i = 1; i < n; ++i)
    acc += f(lo + h * static_cast<double>(i));
  return h * acc;
}

inline SampledFunction sample_callable(const std::function<Complex(double)>& f,
                                       double lo, double hi, double step) {
  const GridSpec g = make_grid(lo, hi, step);
  std::vector<Complex> v(g.count);
  for (std::size_t i = 0; i < g.count; ++i)
    v[i] = f(g.start + g.step * static_cast<double>(i));
  return SampledFunction(g.start, g.step, std::move(v), {lo, hi});
}

inline SampledFunction sampled_bump(double step = 1.0 / 1024.0) {
  return sample_callable([](double t) { return Complex{bump_value(t), 0.0}; },
                         -1.0, 1.0, step);
}

/// Random smooth compactly supported function: the bump modulated by a low
/// order trigonometric polynomial with coefficients from the given engine.
inline SampledFunction random_smooth_function(std::mt19937_64& rng,
                                              double step = 1.0 / 1024.0) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  std::vector<double> ac(4), as(4);
  for (int j = 0; j < 4; ++j) {
    ac[static_cast<std::size_t>(j)] = coeff(rng);
    as[static_cast<std::size_t>(j)] = coeff(rng);
  }
  return sample_callable(
      [ac, as](double t) {
        double m = 0.0;
        for (int j = 0; j < 4; ++j) {
          const double angle = 2.0 * std::numbers::pi * (j + 1) * t;
          m += ac[static_cast<std::size_t>(j)] * std::cos(angle) +
               as[static_cast<std::size_t>(j)] * std::sin(angle);
        }
        return Complex{bump_value(t) * m, 0.0};
      },
      -1.0, 1.0, step);
}

inline GaborCoeffs random_gabor_coeffs(std::mt19937_64& rng, int K, int N,
                                       double a = 0.5, double b = 1.0) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  GaborCoeffs c(a, b, K, N);
  for (Complex& v : c.values) v = Complex{coeff(rng), coeff(rng)};
  return c;
}

inline WilsonCoeffs random_wilson_coeffs(std::mt19937_64& rng, int K, int N) {
  std::uniform_real_distribution<double> coeff(-1.0, 1.0);
  WilsonCoeffs c(K, N);
  for (Complex& v : c.values) v = Complex{coeff(rng), coeff(rng)};
  return c;
}

/// |x - y| within `ulps` last-place units of y, component-wise.
inline bool within_ulps(double x, double y, int ulps) {
  if (x == y) return true;
  const double scale = std::max(std::abs(x), std::abs(y));
  return std::abs(x - y) <= ulps * std::numeric_limits<double>::epsilon() * scale;
}

inline bool within_ulps(const Complex& x, const Complex& y, int ulps) {
  return within_ulps(x.real(), y.real(), ulps) &&
         within_ulps(x.imag(), y.imag(), ulps);
}

}  // namespace wilson::testing
