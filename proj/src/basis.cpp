#include "wilson/basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wilson/errors.hpp"
#include "wilson/quadrature.hpp"
#include "wilson/window.hpp"

namespace wilson {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
const double kInvRoot2 = 1.0 / std::sqrt(2.0);

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

double parity_sign(int k, int n) { return ((k + n) % 2 == 0) ? 1.0 : -1.0; }

Interval atom_support(const Window& w, int k, int n) {
  const double center = n == 0 ? static_cast<double>(k)
                               : static_cast<double>(k) / 2.0;
  return {center - w.support_radius(), center + w.support_radius()};
}

}  // namespace

WilsonCoeffs::WilsonCoeffs(int K_, int N_) : K(K_), N(N_) {
  if (K < 0 || N < 0) throw ValidationError("truncation ranges must be nonnegative");
  values.assign(rows() * cols(), Complex{});
}

Complex& WilsonCoeffs::at(int k, int n) {
  return values[static_cast<std::size_t>(k + K) * cols() +
                static_cast<std::size_t>(n)];
}

const Complex& WilsonCoeffs::at(int k, int n) const {
  return values[static_cast<std::size_t>(k + K) * cols() +
                static_cast<std::size_t>(n)];
}

double WilsonCoeffs::boundary_max() const {
  double m = 0.0;
  for (int k = -K; k <= K; ++k)
    for (int n = 0; n <= N; ++n)
      if (std::abs(k) == K || n == N) m = std::max(m, std::abs(at(k, n)));
  return m;
}

Complex wilson_atom_value(const Window& w, int k, int n, double t) {
  if (n == 0) return w(t - static_cast<double>(k));
  const double t0 = t - static_cast<double>(k) / 2.0;
  const double wv = w(t0);
  if (wv == 0.0) return {};
  const double angle = kTwoPi * static_cast<double>(n) * t0;
  const Complex mod =
      unit_phase(angle) + parity_sign(k, n) * unit_phase(-angle);
  return kInvRoot2 * mod * wv;
}

Complex wilson_atom_derivative(const Window& w, int k, int n, double t, int m) {
  if (m < 0 || m > kJetOrder)
    throw ValidationError("derivative order out of range");
  if (n == 0) return w.derivative(t - static_cast<double>(k), m);

  const double t0 = t - static_cast<double>(k) / 2.0;
  if (std::abs(t0) >= w.support_radius()) return {};
  const double omega = kTwoPi * static_cast<double>(n);
  const Complex plus = unit_phase(omega * t0);
  const Complex minus = unit_phase(-omega * t0);
  const double sign = parity_sign(k, n);

  // Leibniz rule: the j-th derivative of the modulation pair is
  // (i omega)^j e^{i omega t0} + sign (-i omega)^j e^{-i omega t0}.
  Complex acc{};
  double binom = 1.0;
  Complex iw_pow_plus = 1.0;
  Complex iw_pow_minus = 1.0;
  const Complex iw{0.0, omega};
  for (int j = 0; j <= m; ++j) {
    const Complex mod_j = iw_pow_plus * plus + sign * iw_pow_minus * minus;
    acc += binom * mod_j * w.derivative(t0, m - j);
    binom = binom * static_cast<double>(m - j) / static_cast<double>(j + 1);
    iw_pow_plus *= iw;
    iw_pow_minus *= -iw;
  }
  return kInvRoot2 * acc;
}

SampledFunction wilson_atom(const Window& w, int k, int n, const GridSpec& grid) {
  if (n < 0) throw ValidationError("modulation index must be nonnegative");
  const Interval sup = atom_support(w, k, n);
  const double slack = grid.step * 1e-9;
  if (grid.count < 2 || grid.start > sup.lo + slack || grid.end() < sup.hi - slack)
    throw CoverageError("output grid does not cover the atom support");
  std::vector<Complex> vals(grid.count);
  for (std::size_t i = 0; i < grid.count; ++i)
    vals[i] = wilson_atom_value(w, k, n,
                                grid.start + grid.step * static_cast<double>(i));
  return SampledFunction(grid.start, grid.step, std::move(vals),
                         {std::max(grid.start, sup.lo), std::min(grid.end(), sup.hi)});
}

GaborCoeffs reindex_i2(const GaborCoeffs& c) {
  GaborCoeffs r(c.a, c.b, c.K, c.N);
  for (int k = -c.K; k <= c.K; ++k)
    for (int n = -c.N; n <= c.N; ++n) r.at(k, n) = c.at(k, -n);
  r.tail = c.tail;
  return r;
}

WilsonCoeffs reindex_v(const GaborCoeffs& c) {
  if (c.a != 0.5 || c.b != 1.0)
    throw ValidationError("folding is defined on the (1/2, 1) lattice");
  const int K_out = c.K / 2;
  WilsonCoeffs r(K_out, c.N);
  for (int k = -K_out; k <= K_out; ++k) {
    r.at(k, 0) = c.at(2 * k, 0);
    for (int n = 1; n <= c.N; ++n)
      r.at(k, n) = kInvRoot2 * (c.at(k, n) + parity_sign(k, n) * c.at(k, -n));
  }
  r.tail = r.boundary_max();
  return r;
}

GaborCoeffs reindex_w(const WilsonCoeffs& c) {
  GaborCoeffs r(0.5, 1.0, 2 * c.K, c.N);
  for (int k = -c.K; k <= c.K; ++k) r.at(2 * k, 0) = c.at(k, 0);
  for (int k = -c.K; k <= c.K; ++k) {
    for (int n = 1; n <= c.N; ++n) {
      r.at(k, n) = kInvRoot2 * c.at(k, n);
      r.at(k, -n) = parity_sign(k, n) * kInvRoot2 * c.at(k, n);
    }
  }
  r.tail = r.boundary_max();
  return r;
}

WilsonCoeffs wilson_analysis(const SampledFunction& f, const Window& w, int K,
                             int N) {
  WilsonCoeffs c = reindex_v(gabor_analysis(f, w, 0.5, 1.0, 2 * K, N));
  c.tail = c.boundary_max();
  return c;
}

SampledFunction wilson_synthesis(const WilsonCoeffs& c, const Window& w,
                                 const GridSpec& grid) {
  return gabor_synthesis(reindex_w(c), w, grid);
}

std::vector<std::pair<int, int>> enumerate_indices(int K, int N) {
  std::vector<std::pair<int, int>> order;
  order.reserve(static_cast<std::size_t>(2 * K + 1) *
                static_cast<std::size_t>(N + 1));
  for (int d = 0; d <= K + N; ++d) {
    for (int n = 0; n <= d; ++n) {
      const int k = d - n;
      if (k <= K && n <= N) order.emplace_back(k, n);
    }
    for (int n = 0; n < d; ++n) {
      const int k = d - n;
      if (k <= K && n <= N) order.emplace_back(-k, n);
    }
  }
  return order;
}

std::vector<Complex> gram_matrix(const Window& w, int K, int N) {
  const std::vector<double> residual = wilson_condition_residual(w, 0);
  if (residual[0] > 1e-10)
    throw ValidationError("window fails the half-integer product condition");

  const auto order = enumerate_indices(K, N);
  const std::size_t m = order.size();

  // Materialize each atom once on its own support-aligned grid.
  std::vector<SampledFunction> atoms;
  atoms.reserve(m);
  for (const auto& [k, n] : order) {
    const Interval sup = atom_support(w, k, n);
    atoms.push_back(
        wilson_atom(w, k, n, make_grid(sup.lo, sup.hi, w.grid_step())));
  }

  std::vector<Complex> gram(m * m, Complex{});
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const Complex g = inner_product(atoms[i], conj(atoms[j]));
      gram[i * m + j] = g;
      gram[j * m + i] = std::conj(g);
    }
  }
  return gram;
}

DistributionInput DistributionInput::delta(double x0) {
  DistributionInput d;
  d.kind = Kind::Delta;
  d.point = x0;
  return d;
}

DistributionInput DistributionInput::delta_derivative(double x0, int order) {
  DistributionInput d;
  d.kind = Kind::DeltaDerivative;
  d.point = x0;
  d.order = order;
  return d;
}

DistributionInput DistributionInput::dirac_comb() {
  DistributionInput d;
  d.kind = Kind::DiracComb;
  return d;
}

DistributionInput DistributionInput::polynomial(int order) {
  DistributionInput d;
  d.kind = Kind::Polynomial;
  d.order = order;
  return d;
}

DistributionInput DistributionInput::from_function(
    std::function<double(double)> f) {
  DistributionInput d;
  d.kind = Kind::Function;
  d.function = std::move(f);
  return d;
}

namespace {

/// Quadrature of f(t) * conj(atom_{k,n}(t)) over the atom support.
Complex pair_by_quadrature(const std::function<double(double)>& f,
                           const Window& w, int k, int n) {
  const Interval sup = atom_support(w, k, n);
  const GridSpec grid = make_grid(sup.lo, sup.hi, w.grid_step());
  return simpson(
      [&](std::size_t i) {
        const double t = grid.start + grid.step * static_cast<double>(i);
        return f(t) * std::conj(wilson_atom_value(w, k, n, t));
      },
      grid.count, grid.step);
}

}  // namespace

Complex pair_distribution(const DistributionInput& d, const Window& w, int k,
                          int n) {
  if (n < 0) throw ValidationError("modulation index must be nonnegative");
  switch (d.kind) {
    case DistributionInput::Kind::Delta:
      return std::conj(wilson_atom_value(w, k, n, d.point));
    case DistributionInput::Kind::DeltaDerivative: {
      const double sign = d.order % 2 == 0 ? 1.0 : -1.0;
      return sign * std::conj(wilson_atom_derivative(w, k, n, d.point, d.order));
    }
    case DistributionInput::Kind::DiracComb: {
      const Interval sup = atom_support(w, k, n);
      Complex s{};
      const long long j_lo = static_cast<long long>(std::ceil(sup.lo));
      const long long j_hi = static_cast<long long>(std::floor(sup.hi));
      for (long long j = j_lo; j <= j_hi; ++j)
        s += std::conj(wilson_atom_value(w, k, n, static_cast<double>(j)));
      return s;
    }
    case DistributionInput::Kind::Polynomial: {
      const int order = d.order;
      return pair_by_quadrature(
          [order](double t) { return std::pow(t, order); }, w, k, n);
    }
    case DistributionInput::Kind::Function:
      if (!d.function)
        throw ValidationError("function-backed input has no evaluator");
      return pair_by_quadrature(d.function, w, k, n);
  }
  throw ValidationError("unsupported distribution tag");
}

WilsonCoeffs wilson_analyze_distribution(const DistributionInput& d,
                                         const Window& w, int K, int N) {
  WilsonCoeffs c(K, N);
  for (int k = -K; k <= K; ++k)
    for (int n = 0; n <= N; ++n) c.at(k, n) = pair_distribution(d, w, k, n);
  c.tail = c.boundary_max();
  return c;
}

}  // namespace wilson
