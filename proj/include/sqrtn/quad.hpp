#pragma once

// Gauss-Legendre panel quadrature.

#include <cmath>
#include <functional>
#include <vector>

namespace sqrtn::quad {

struct Rule {
  std::vector<double> x, w;  // nodes/weights on [-1,1]
};

/// n-point Gauss-Legendre rule via Newton iteration on P_n.
inline Rule gauss_legendre(int n) {
  Rule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    for (int it = 0; it < 100; ++it) {
      double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = n * (x * p1 - p0) / (x * x - 1);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = n * (x * p1 - p0) / (x * x - 1);
    r.x[i] = x;
    r.w[i] = 2.0 / ((1 - x * x) * dp * dp);
  }
  return r;
}

inline const Rule& rule32() {
  static const Rule r = gauss_legendre(32);
  return r;
}

/// Integrate f over [a,b] with one n-point panel.
template <class F>
auto panel(const F& f, double a, double b, const Rule& r) {
  using T = decltype(f(a));
  T acc{};
  double h = 0.5 * (b - a), m = 0.5 * (a + b);
  for (size_t i = 0; i < r.x.size(); ++i) acc += r.w[i] * f(m + h * r.x[i]);
  return acc * h;
}

/// Composite rule over [a,b] with panels of width <= max_width.
template <class F>
auto composite(const F& f, double a, double b, double max_width,
               const Rule& r = rule32()) {
  using T = decltype(f(a));
  int np = std::max(1, static_cast<int>(std::ceil((b - a) / max_width)));
  double h = (b - a) / np;
  T acc{};
  for (int i = 0; i < np; ++i) acc += panel(f, a + i * h, a + (i + 1) * h, r);
  return acc;
}

}  // namespace sqrtn::quad
