#include "wilson/sampled.hpp"

#include <cmath>
#include <string>

#include "wilson/errors.hpp"

namespace wilson {

namespace {
constexpr double kBoundaryTol = 1e-12;
}

SampledFunction::SampledFunction(double start_, double step_,
                                 std::vector<Complex> values_, Interval support_)
    : start(start_), step(step_), values(std::move(values_)), support(support_) {
  if (!(step > 0.0)) throw ValidationError("grid step must be positive");
  if (values.empty()) throw ValidationError("sampled function has no values");
  const double slack = step * 1e-9;
  if (support.lo < start - slack || support.hi > end() + slack)
    throw ValidationError("support exceeds the grid coverage");
  if (std::abs(values.front()) > kBoundaryTol ||
      std::abs(values.back()) > kBoundaryTol)
    throw ValidationError("boundary samples must vanish (grid does not cover the support with zero margin)");
}

double max_abs(const SampledFunction& f) {
  double m = 0.0;
  for (const Complex& v : f.values) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction conj(const SampledFunction& f) {
  SampledFunction g = f;
  for (Complex& v : g.values) v = std::conj(v);
  return g;
}

SampledFunction lin_comb(Complex a, const SampledFunction& f, Complex b,
                         const SampledFunction& g) {
  if (grid_offset(f, g) != 0 || f.size() != g.size())
    throw GridError("linear combination requires identical grids");
  SampledFunction r = f;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] = a * f.values[i] + b * g.values[i];
  r.support = hull(f.support, g.support);
  return r;
}

bool is_near_integer(double x, double tol) {
  const double r = std::round(x);
  return std::abs(x - r) <= tol * std::max(1.0, std::abs(x));
}

long long grid_offset(const SampledFunction& f, const SampledFunction& g) {
  const double rel = std::abs(f.step - g.step) / f.step;
  if (rel > 1e-12)
    throw GridError("grids have different steps (" + std::to_string(f.step) +
                    " vs " + std::to_string(g.step) + ")");
  const double shift = (g.start - f.start) / f.step;
  if (!is_near_integer(shift))
    throw GridError("grid offsets are not aligned");
  return static_cast<long long>(std::llround(shift));
}

}  // namespace wilson
