#include "wilson/timefreq.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wilson/errors.hpp"
#include "wilson/quadrature.hpp"

namespace wilson {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

GridSpec make_grid(double lo, double hi, double step) {
  const double start = std::floor(lo / step) * step;
  const auto count =
      static_cast<std::size_t>(std::ceil((hi - start) / step)) + 1;
  return {start, step, count};
}

GaborCoeffs::GaborCoeffs(double a_, double b_, int K_, int N_)
    : a(a_), b(b_), K(K_), N(N_) {
  if (!(a > 0.0) || !(b > 0.0))
    throw ValidationError("lattice parameters must be positive");
  if (K < 0 || N < 0) throw ValidationError("truncation ranges must be nonnegative");
  values.assign(rows() * cols(), Complex{});
}

Complex& GaborCoeffs::at(int k, int n) {
  return values[static_cast<std::size_t>(k + K) * cols() +
                static_cast<std::size_t>(n + N)];
}

const Complex& GaborCoeffs::at(int k, int n) const {
  return values[static_cast<std::size_t>(k + K) * cols() +
                static_cast<std::size_t>(n + N)];
}

double GaborCoeffs::boundary_max() const {
  double m = 0.0;
  for (int k = -K; k <= K; ++k)
    for (int n = -N; n <= N; ++n)
      if (std::abs(k) == K || std::abs(n) == N)
        m = std::max(m, std::abs(at(k, n)));
  return m;
}

SampledFunction tf_shift(const SampledFunction& f, double x, double xi) {
  const double shift = x / f.step;
  if (!is_near_integer(shift))
    throw AlignmentError("translation is not a whole number of grid steps");
  SampledFunction g = f;
  g.start = f.start + x;
  g.support = {f.support.lo + x, f.support.hi + x};
  for (std::size_t i = 0; i < g.values.size(); ++i)
    g.values[i] = f.values[i] * unit_phase(kTwoPi * xi * g.point(i));
  return g;
}

Complex inner_product(const SampledFunction& f, const SampledFunction& g) {
  const long long offset = grid_offset(f, g);

  // Nonzero contributions live on the common coverage; each factor vanishes
  // outside its own support.
  if (intersect(f.support, g.support).empty()) return {};
  const long long f_begin = std::max(0LL, offset);
  const long long f_end =
      std::min(static_cast<long long>(f.size()) - 1,
               offset + static_cast<long long>(g.size()) - 1);
  if (f_end <= f_begin) return {};

  const std::size_t count = static_cast<std::size_t>(f_end - f_begin) + 1;
  return simpson(
      [&](std::size_t i) {
        const std::size_t fi = static_cast<std::size_t>(f_begin) + i;
        const std::size_t gi =
            static_cast<std::size_t>(f_begin - offset) + i;
        return f.values[fi] * g.values[gi];
      },
      count, f.step);
}

double l2_norm(const SampledFunction& f) {
  const double sq = simpson(
      [&f](std::size_t i) {
        const double m = std::abs(f.values[i]);
        return m * m;
      },
      f.size(), f.step);
  return std::sqrt(std::max(0.0, sq));
}

double relative_l2_error(const SampledFunction& f, const SampledFunction& g) {
  const long long offset = grid_offset(f, g);
  const long long lo =
      std::min(0LL, offset);
  const long long hi =
      std::max(static_cast<long long>(f.size()) - 1,
               offset + static_cast<long long>(g.size()) - 1);
  auto f_at = [&](long long i) -> Complex {
    return (i >= 0 && i < static_cast<long long>(f.size()))
               ? f.values[static_cast<std::size_t>(i)]
               : Complex{};
  };
  auto g_at = [&](long long i) -> Complex {
    const long long j = i - offset;
    return (j >= 0 && j < static_cast<long long>(g.size()))
               ? g.values[static_cast<std::size_t>(j)]
               : Complex{};
  };
  const std::size_t count = static_cast<std::size_t>(hi - lo) + 1;
  const double num = simpson(
      [&](std::size_t i) {
        const double m = std::abs(f_at(lo + static_cast<long long>(i)) -
                                  g_at(lo + static_cast<long long>(i)));
        return m * m;
      },
      count, f.step);
  const double den = simpson(
      [&](std::size_t i) {
        const double m = std::abs(f_at(lo + static_cast<long long>(i)));
        return m * m;
      },
      count, f.step);
  if (!(den > 0.0))
    throw ValidationError("relative error needs a nonzero reference function");
  return std::sqrt(std::max(0.0, num)) / std::sqrt(den);
}

namespace {

/// Simpson pairing of f with t -> w(t-x) e^{-2 pi i xi (t - phase_origin)}
/// over the part of f's grid meeting [x-r, x+r]; the window factor is
/// evaluated in closed form, so no interpolation enters.
Complex pair_with_window(const SampledFunction& f, const Window& w, double x,
                         double xi, double phase_origin) {
  const double r = w.support_radius();
  const double lo = std::max(f.start, x - r);
  const double hi = std::min(f.end(), x + r);
  if (hi <= lo) return {};
  long long i_lo = static_cast<long long>(std::ceil((lo - f.start) / f.step - 1e-9));
  long long i_hi = static_cast<long long>(std::floor((hi - f.start) / f.step + 1e-9));
  i_lo = std::max(i_lo, 0LL);
  i_hi = std::min(i_hi, static_cast<long long>(f.size()) - 1);
  if (i_hi <= i_lo) return {};
  const std::size_t count = static_cast<std::size_t>(i_hi - i_lo) + 1;
  return simpson(
      [&](std::size_t i) {
        const std::size_t fi = static_cast<std::size_t>(i_lo) + i;
        const double t = f.point(fi);
        return f.values[fi] * w(t - x) *
               unit_phase(-kTwoPi * xi * (t - phase_origin));
      },
      count, f.step);
}

}  // namespace

Complex stft(const SampledFunction& f, const Window& w, double x, double xi) {
  if (!is_near_integer(x / f.step))
    throw AlignmentError("translation is not a whole number of grid steps");
  // conj(M_xi T_x w) = w(t-x) e^{-2 pi i xi t} for a real window.
  return pair_with_window(f, w, x, xi, 0.0);
}

GaborCoeffs gabor_analysis(const SampledFunction& f, const Window& w, double a,
                           double b, int K, int N) {
  if (!is_near_integer(a / f.step))
    throw AlignmentError("lattice step a is not a whole number of grid steps");
  GaborCoeffs c(a, b, K, N);
  for (int k = -K; k <= K; ++k) {
    const double x = a * static_cast<double>(k);
    for (int n = -N; n <= N; ++n) {
      // conj(T_{ak} M_{bn} w) = w(t-ak) e^{-2 pi i b n (t-ak)}.
      c.at(k, n) = pair_with_window(f, w, x, b * static_cast<double>(n), x);
    }
  }
  c.tail = c.boundary_max();
  return c;
}

SampledFunction gabor_synthesis(const GaborCoeffs& c, const Window& w,
                                const GridSpec& grid) {
  const double r = w.support_radius();
  const double lo = c.a * static_cast<double>(-c.K) - r;
  const double hi = c.a * static_cast<double>(c.K) + r;
  const double slack = grid.step * 1e-9;
  if (grid.count < 2 || grid.start > lo + slack || grid.end() < hi - slack)
    throw CoverageError("output grid does not cover the translated window supports");

  std::vector<Complex> vals(grid.count, Complex{});
  for (std::size_t i = 0; i < grid.count; ++i) {
    const double t = grid.start + grid.step * static_cast<double>(i);
    Complex acc{};
    for (int k = -c.K; k <= c.K; ++k) {
      const double wv = w(t - c.a * static_cast<double>(k));
      if (wv == 0.0) continue;
      const double t0 = t - c.a * static_cast<double>(k);
      Complex inner{};
      for (int n = -c.N; n <= c.N; ++n)
        inner += c.at(k, n) * unit_phase(kTwoPi * c.b * static_cast<double>(n) * t0);
      acc += wv * inner;
    }
    vals[i] = acc;
  }
  return SampledFunction(grid.start, grid.step, std::move(vals),
                         {std::max(grid.start, lo), std::min(grid.end(), hi)});
}

Complex coeff_pairing(const GaborCoeffs& a, const GaborCoeffs& b) {
  if (a.K != b.K || a.N != b.N)
    throw ValidationError("coefficient pairing requires matching index ranges");
  Complex s{};
  for (int k = -a.K; k <= a.K; ++k)
    for (int n = -a.N; n <= a.N; ++n) s += a.at(k, n) * b.at(k, n);
  return s;
}

}  // namespace wilson
