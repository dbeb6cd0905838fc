#pragma once

// Chebyshev-Lobatto utilities: nodes, barycentric interpolation, spectral
// differentiation and antiderivatives. Used by the cusp solver and the
// homogeneous-form charts.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace sqrtn::cheb {

using cplx = std::complex<double>;

/// n Lobatto nodes on [a,b], ordered increasing.
inline std::vector<double> nodes(int n, double a, double b) {
  if (n < 2) throw std::invalid_argument("need at least 2 Chebyshev nodes");
  std::vector<double> x(n);
  for (int j = 0; j < n; ++j) {
    double t = std::cos(M_PI * j / (n - 1));  // 1 .. -1
    x[n - 1 - j] = 0.5 * (a + b) + 0.5 * (b - a) * t;
  }
  return x;
}

/// Barycentric weights for the Lobatto nodes (increasing order).
inline std::vector<double> bary_weights(int n) {
  std::vector<double> w(n);
  for (int j = 0; j < n; ++j) {
    w[j] = (j % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == n - 1) w[j] *= 0.5;
  }
  return w;
}

template <class T>
T bary_eval(const std::vector<double>& x, const std::vector<double>& w,
            const std::vector<T>& f, double xq) {
  T num{};
  double den = 0;
  for (size_t j = 0; j < x.size(); ++j) {
    double d = xq - x[j];
    if (std::abs(d) < 1e-14 * (std::abs(xq) + 1)) return f[j];
    double c = w[j] / d;
    num += f[j] * c;
    den += c;
  }
  return num / den;
}

/// Chebyshev coefficients of the interpolant through values at Lobatto nodes
/// (increasing order on [a,b]); plain O(n^2) cosine transform.
template <class T>
std::vector<T> coeffs(const std::vector<T>& f) {
  int n = static_cast<int>(f.size());
  int m = n - 1;
  std::vector<T> c(n);
  for (int k = 0; k <= m; ++k) {
    T acc{};
    for (int j = 0; j <= m; ++j) {
      // node j in increasing order corresponds to angle pi*(m-j)/m
      double ang = M_PI * k * (m - j) / m;
      T term = f[j] * std::cos(ang);
      if (j == 0 || j == m) term *= 0.5;
      acc += term;
    }
    c[k] = acc * (2.0 / m);
  }
  c[0] *= 0.5;
  c[m] *= 0.5;
  return c;
}

template <class T>
T eval_series(const std::vector<T>& c, double a, double b, double xq) {
  double t = (2 * xq - a - b) / (b - a);
  // Clenshaw
  T bk1{}, bk2{};
  for (int k = static_cast<int>(c.size()) - 1; k >= 1; --k) {
    T bk = c[k] + 2.0 * t * bk1 - bk2;
    bk2 = bk1;
    bk1 = bk;
  }
  return c[0] + t * bk1 - bk2;
}

/// Coefficients of the derivative series (on [a,b]).
template <class T>
std::vector<T> deriv_coeffs(const std::vector<T>& c, double a, double b) {
  int n = static_cast<int>(c.size());
  double scale = 2.0 / (b - a);
  // backward recurrence d_{k-1} = d_{k+1} + 2k c_k
  std::vector<T> dd(n + 2, T{});
  for (int k = n - 1; k >= 1; --k) dd[k - 1] = dd[k + 1] + (2.0 * k) * c[k];
  dd[0] *= 0.5;
  std::vector<T> d(n, T{});
  for (int k = 0; k < n; ++k) d[k] = dd[k] * scale;
  return d;
}

/// Coefficients of the antiderivative vanishing at x=a.
template <class T>
std::vector<T> antideriv_coeffs(const std::vector<T>& c, double a, double b) {
  int n = static_cast<int>(c.size());
  std::vector<T> C(n + 1, T{});
  double scale = (b - a) / 2.0;
  for (int k = 1; k < n - 1; ++k) C[k] = scale * (c[k - 1] - c[k + 1]) / (2.0 * k);
  if (n >= 2) C[n - 1] = scale * c[n - 2] / (2.0 * (n - 1));
  if (n >= 1) C[n] = scale * c[n - 1] / (2.0 * n);
  // fix constant so the antiderivative vanishes at t=-1 (x=a)
  T at_a{};
  double sgn = -1;
  for (int k = 1; k <= n; ++k) {
    at_a += C[k] * sgn;  // T_k(-1) = (-1)^k
    sgn = -sgn;
  }
  C[0] = -at_a;
  return C;
}

}  // namespace sqrtn::cheb
