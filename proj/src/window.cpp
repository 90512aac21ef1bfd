#include "wilson/window.hpp"

#include <cmath>
#include <numbers>

#include "wilson/errors.hpp"
#include "wilson/quadrature.hpp"

namespace wilson {

namespace {

double h_exp(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }

Jet h_exp(const Jet& x) {
  if (x.value() <= 0.0) return Jet{};
  return exp(Jet{} - Jet::constant(1.0) / x);
}

}  // namespace

double smooth_step(double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double a = h_exp(x);
  return a / (a + h_exp(1.0 - x));
}

Jet smooth_step(const Jet& x) {
  if (x.value() <= 0.0) return Jet{};
  if (x.value() >= 1.0) return Jet::constant(1.0);
  const Jet a = h_exp(x);
  const Jet b = h_exp(Jet::constant(1.0) - x);
  return a / (a + b);
}

Window::Window(Eval eval, double support_radius, double grid_step,
               JetEval jet_eval)
    : eval_(std::move(eval)),
      jet_eval_(std::move(jet_eval)),
      support_radius_(support_radius),
      grid_step_(grid_step) {
  if (!std::isfinite(support_radius_) || support_radius_ <= 0.0)
    throw ValidationError("window support radius must be finite and positive");
  if (!(grid_step_ > 0.0))
    throw ValidationError("window grid step must be positive");
}

double Window::operator()(double x) const {
  if (std::abs(x) >= support_radius_) return 0.0;
  return eval_(x);
}

double Window::derivative(double x, int m) const {
  if (m < 0 || m > kJetOrder)
    throw ValidationError("derivative order out of range");
  if (std::abs(x) >= support_radius_) return 0.0;
  if (!jet_eval_)
    throw ValidationError("window carries no derivative evaluator");
  return jet_eval_(x).derivative(m);
}

double Window::sup_norm(int m) const {
  double best = 0.0;
  const long long half =
      static_cast<long long>(std::ceil(support_radius_ / grid_step_));
  for (long long i = -half; i <= half; ++i) {
    const double x = static_cast<double>(i) * grid_step_;
    if (std::abs(x) >= support_radius_) continue;
    if (m == 0) {
      best = std::max(best, std::abs(eval_(x)));
    } else {
      const Jet j = jet_eval_(x);
      for (int d = 0; d <= m; ++d)
        best = std::max(best, std::abs(j.derivative(d)));
    }
  }
  return best;
}

SampledFunction Window::sample() const { return sample(grid_step_); }

SampledFunction Window::sample(double step) const {
  const long long half = static_cast<long long>(std::round(support_radius_ / step));
  if (std::abs(half * step - support_radius_) > 1e-9 * support_radius_)
    throw AlignmentError("grid step does not divide the support radius");
  std::vector<Complex> v(static_cast<std::size_t>(2 * half + 1));
  for (long long i = -half; i <= half; ++i)
    v[static_cast<std::size_t>(i + half)] = (*this)(static_cast<double>(i) * step);
  return SampledFunction(-support_radius_, step, std::move(v),
                         {-support_radius_, support_radius_});
}

Window build_wilson_window(double grid_step) {
  constexpr double half_pi = std::numbers::pi / 2.0;
  const double root2 = std::sqrt(2.0);
  auto eval = [root2, half_pi](double x) {
    if (x < 0.0) return root2 * std::sin(half_pi * smooth_step(2.0 * x + 1.0));
    return root2 * std::cos(half_pi * smooth_step(2.0 * x));
  };
  auto jet_eval = [root2, half_pi](double x) {
    const Jet t = Jet::variable(x);
    if (x < 0.0)
      return root2 * sin(half_pi * smooth_step(2.0 * t + Jet::constant(1.0)));
    return root2 * cos(half_pi * smooth_step(2.0 * t));
  };
  return Window(eval, 0.5, grid_step, jet_eval);
}

std::vector<double> wilson_condition_residual(const Window& w, int n_max,
                                              double grid_step) {
  if (n_max < 0) throw ValidationError("n_max must be nonnegative");
  if (!(grid_step > 0.0)) throw ValidationError("verification grid is empty");
  const double r = w.support_radius();
  if (!std::isfinite(r) || r <= 0.0)
    throw ValidationError("window support radius makes the shift sum infinite");

  const long long steps = static_cast<long long>(std::floor(0.5 / grid_step));
  std::vector<double> residuals(static_cast<std::size_t>(n_max) + 1, 0.0);
  for (int n = 0; n <= n_max; ++n) {
    const double target = n == 0 ? 2.0 : 0.0;
    double worst = 0.0;
    for (long long i = 0; i <= steps; ++i) {
      const double x = static_cast<double>(i) * grid_step;
      // Both factors vanish unless |x-n-k/2| < r and |x-k/2| < r.
      const long long k_lo = static_cast<long long>(std::floor(2.0 * (x - r)));
      const long long k_hi = static_cast<long long>(std::ceil(2.0 * (x + r)));
      double sum = 0.0;
      for (long long k = k_lo; k <= k_hi; ++k) {
        const double shift = static_cast<double>(k) / 2.0;
        sum += w(x - n - shift) * w(x - shift);
      }
      worst = std::max(worst, std::abs(sum - target));
    }
    residuals[static_cast<std::size_t>(n)] = worst;
  }
  return residuals;
}

double check_symmetry(const Window& w, double grid_step) {
  if (!(grid_step > 0.0)) throw ValidationError("verification grid is empty");
  const long long half =
      static_cast<long long>(std::ceil(w.support_radius() / grid_step)) + 1;
  double worst = 0.0;
  for (long long i = -half; i <= half; ++i) {
    const double x = static_cast<double>(i) * grid_step;
    worst = std::max(worst, std::abs(w(x) - w(-x)));
  }
  return worst;
}

double window_l2_norm(const Window& w) {
  const SampledFunction s = w.sample();
  const double sq = simpson(
      [&s](std::size_t i) {
        const double m = std::abs(s.values[i]);
        return m * m;
      },
      s.size(), s.step);
  return std::sqrt(sq);
}

}  // namespace wilson
