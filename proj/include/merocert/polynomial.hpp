#pragma once

#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "merocert/power_series.hpp"

namespace merocert {

// Dense polynomials as coefficient vectors, index = power. Used for the
// rational representation of functions; series live in PowerSeries.
using Poly = std::vector<Complex>;

inline double poly_max_abs(const Poly& p) {
  double m = 0.0;
  for (const Complex& c : p) m = std::max(m, std::abs(c));
  return m;
}

// Drop leading (highest-power) coefficients below rel_eps * max|c|.
inline Poly poly_trim(Poly p, double rel_eps = 1e-14) {
  const double cut = poly_max_abs(p) * rel_eps;
  while (p.size() > 1 && std::abs(p.back()) <= cut) p.pop_back();
  return p;
}

inline int poly_degree(const Poly& p) { return static_cast<int>(p.size()) - 1; }

inline Complex poly_eval(const Poly& p, Complex z) {
  Complex acc{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

inline std::pair<Complex, Complex> poly_eval_with_derivative(const Poly& p, Complex z) {
  Complex v{0.0, 0.0};
  Complex d{0.0, 0.0};
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    d = d * z + v;
    v = v * z + *it;
  }
  return {v, d};
}

inline Poly poly_derivative(const Poly& p) {
  if (p.size() <= 1) return Poly{Complex{0.0, 0.0}};
  Poly d(p.size() - 1);
  for (size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
  return d;
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1, Complex{0.0, 0.0});
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

inline Poly poly_add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Complex{0.0, 0.0});
  for (size_t j = 0; j < b.size(); ++j) a[j] += b[j];
  return a;
}

inline Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Complex{0.0, 0.0});
  for (size_t j = 0; j < b.size(); ++j) a[j] -= b[j];
  return a;
}

inline Poly poly_scale(Poly a, Complex c) {
  for (Complex& x : a) x *= c;
  return a;
}

inline Poly poly_conj(Poly a) {
  for (Complex& x : a) x = std::conj(x);
  return a;
}

// View a polynomial as a PowerSeries of the requested order with an exact tail.
inline PowerSeries poly_to_series(const Poly& p, int order) {
  std::vector<Complex> v(static_cast<size_t>(order) + 1, Complex{0.0, 0.0});
  double dropped = 0.0;
  for (size_t k = 0; k < p.size(); ++k) {
    if (static_cast<int>(k) <= order) {
      v[k] = p[k];
    } else {
      dropped = std::max(dropped, std::abs(p[k]) * std::pow(2.0, static_cast<double>(k)));
    }
  }
  return PowerSeries(std::move(v), TailBound{dropped, 2.0});
}

}  // namespace merocert
