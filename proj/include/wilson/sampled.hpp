#pragma once

#include <complex>
#include <vector>

namespace wilson {

using Complex = std::complex<double>;

/// Closed interval on the real line.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double length() const { return hi - lo; }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool empty() const { return hi < lo; }
};

inline Interval intersect(const Interval& a, const Interval& b) {
  return {a.lo > b.lo ? a.lo : b.lo, a.hi < b.hi ? a.hi : b.hi};
}

inline Interval hull(const Interval& a, const Interval& b) {
  return {a.lo < b.lo ? a.lo : b.lo, a.hi > b.hi ? a.hi : b.hi};
}

/// Complex values on a uniform grid together with a declared compact support
/// interval; the represented function is exactly zero outside `support`.
///
/// Invariants (enforced on construction):
///   - step > 0 and at least one sample
///   - support is contained in the grid coverage [start, start+step*(len-1)]
///   - the first and last stored value have modulus <= 1e-12
struct SampledFunction {
  double start = 0.0;
  double step = 1.0;
  std::vector<Complex> values;
  Interval support;

  SampledFunction() = default;
  SampledFunction(double start, double step, std::vector<Complex> values,
                  Interval support);

  std::size_t size() const { return values.size(); }
  double point(std::size_t i) const { return start + step * static_cast<double>(i); }
  double end() const { return point(values.size() - 1); }
  Interval coverage() const { return {start, end()}; }
};

/// Largest modulus of the stored samples.
double max_abs(const SampledFunction& f);

/// Pointwise complex conjugate.
SampledFunction conj(const SampledFunction& f);

/// Pointwise linear combination a*f + b*g of two functions on a common grid.
SampledFunction lin_comb(Complex a, const SampledFunction& f, Complex b,
                         const SampledFunction& g);

/// True when x is an integer within `tol` of one, relative to its size.
bool is_near_integer(double x, double tol = 1e-9);

/// Index offset of g's grid relative to f's grid. Throws GridError when the
/// steps differ or the offset is not a whole number of steps.
long long grid_offset(const SampledFunction& f, const SampledFunction& g);

}  // namespace wilson
