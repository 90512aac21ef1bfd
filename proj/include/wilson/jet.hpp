#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace wilson {

/// Truncated Taylor series arithmetic. A Jet carries the derivatives of a
/// scalar expression up to order kJetOrder at one evaluation point, so
/// evaluating a closed-form expression on a Jet seed yields its exact
/// derivatives (to rounding) without finite differences.
inline constexpr int kJetOrder = 6;

struct Jet {
  std::array<double, kJetOrder + 1> c{};  // c[j] = f^(j)(x) / j!

  static Jet constant(double v) {
    Jet j;
    j.c[0] = v;
    return j;
  }

  /// Seed for the independent variable at x.
  static Jet variable(double x) {
    Jet j;
    j.c[0] = x;
    j.c[1] = 1.0;
    return j;
  }

  double value() const { return c[0]; }

  /// f^(m)(x) recovered from the Taylor coefficient.
  double derivative(int m) const {
    double fact = 1.0;
    for (int i = 2; i <= m; ++i) fact *= i;
    return c[m] * fact;
  }
};

inline Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kJetOrder; ++i) r.c[i] = a.c[i] + b.c[i];
  return r;
}

inline Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kJetOrder; ++i) r.c[i] = a.c[i] - b.c[i];
  return r;
}

inline Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kJetOrder; ++i) {
    double s = 0.0;
    for (int j = 0; j <= i; ++j) s += a.c[j] * b.c[i - j];
    r.c[i] = s;
  }
  return r;
}

inline Jet operator*(double s, const Jet& a) {
  Jet r;
  for (int i = 0; i <= kJetOrder; ++i) r.c[i] = s * a.c[i];
  return r;
}

inline Jet operator/(const Jet& a, const Jet& b) {
  Jet r;
  for (int i = 0; i <= kJetOrder; ++i) {
    double s = a.c[i];
    for (int j = 0; j < i; ++j) s -= r.c[j] * b.c[i - j];
    r.c[i] = s / b.c[0];
  }
  return r;
}

/// exp via e' = e * f': e_i = (1/i) sum_{j=1..i} j f_j e_{i-j}.
inline Jet exp(const Jet& f) {
  Jet e;
  e.c[0] = std::exp(f.c[0]);
  for (int i = 1; i <= kJetOrder; ++i) {
    double s = 0.0;
    for (int j = 1; j <= i; ++j) s += j * f.c[j] * e.c[i - j];
    e.c[i] = s / i;
  }
  return e;
}

/// sin and cos propagated jointly through s' = c f', c' = -s f'.
inline void sincos(const Jet& f, Jet& s, Jet& c) {
  s.c[0] = std::sin(f.c[0]);
  c.c[0] = std::cos(f.c[0]);
  for (int i = 1; i <= kJetOrder; ++i) {
    double ds = 0.0;
    double dc = 0.0;
    for (int j = 1; j <= i; ++j) {
      ds += j * f.c[j] * c.c[i - j];
      dc += j * f.c[j] * s.c[i - j];
    }
    s.c[i] = ds / i;
    c.c[i] = -dc / i;
  }
}

inline Jet sin(const Jet& f) {
  Jet s, c;
  sincos(f, s, c);
  return s;
}

inline Jet cos(const Jet& f) {
  Jet s, c;
  sincos(f, s, c);
  return c;
}

}  // namespace wilson
