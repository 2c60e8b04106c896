#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "merocert/polynomial.hpp"

namespace merocert {

struct RootFindOptions {
  double tol = 1e-12;
  int max_sweeps = 200;
};

namespace detail {

inline std::vector<Complex> companion_roots(const Poly& monic_tail) {
  // monic_tail holds a_0..a_{d-1} of z^d + a_{d-1} z^{d-1} + ... + a_0.
  const int d = static_cast<int>(monic_tail.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 1; i < d; ++i) m(i, i - 1) = 1.0;
  for (int i = 0; i < d; ++i) m(i, d - 1) = -monic_tail[static_cast<size_t>(i)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(m, /*computeEigenvectors=*/false);
  std::vector<Complex> roots(static_cast<size_t>(d));
  for (int i = 0; i < d; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);
  return roots;
}

inline void newton_polish(const Poly& p, std::vector<Complex>& roots, int iters = 3) {
  for (Complex& r : roots) {
    for (int it = 0; it < iters; ++it) {
      const auto [v, d] = poly_eval_with_derivative(p, r);
      if (std::abs(d) == 0.0) break;
      const Complex step = v / d;
      if (!is_finite(step)) break;
      r -= step;
      if (std::abs(step) <= 1e-15 * (1.0 + std::abs(r))) break;
    }
  }
}

}  // namespace detail

// All complex roots of the polynomial (with multiplicity), by Aberth-Ehrlich
// simultaneous iteration; falls back to companion-matrix eigenvalues on stall.
inline std::vector<Complex> polynomial_roots(const Poly& input, RootFindOptions opt = {}) {
  Poly p = poly_trim(input);
  std::vector<Complex> zeros_at_origin;
  const double scale = poly_max_abs(p);
  if (scale == 0.0) throw std::invalid_argument("polynomial_roots: zero polynomial");
  while (p.size() > 1 && std::abs(p.front()) <= 1e-14 * scale) {
    p.erase(p.begin());
    zeros_at_origin.push_back(Complex{0.0, 0.0});
  }
  const int d = poly_degree(p);
  if (d <= 0) return zeros_at_origin;

  if (d == 1) {
    std::vector<Complex> roots{-p[0] / p[1]};
    roots.insert(roots.end(), zeros_at_origin.begin(), zeros_at_origin.end());
    return roots;
  }

  // Initial circle: geometric mean of the root moduli, slightly de-symmetrized.
  const double radius = std::pow(std::abs(p[0] / p.back()), 1.0 / d);
  std::vector<Complex> x(static_cast<size_t>(d));
  for (int j = 0; j < d; ++j) {
    const double theta = 2.0 * std::numbers::pi * (j + 0.5) / d + 0.376;
    x[static_cast<size_t>(j)] = std::max(radius, 1e-6) * Complex{std::cos(theta), std::sin(theta)};
  }

  bool converged = false;
  for (int sweep = 0; sweep < opt.max_sweeps && !converged; ++sweep) {
    converged = true;
    for (int i = 0; i < d; ++i) {
      Complex& xi = x[static_cast<size_t>(i)];
      const auto [v, dv] = poly_eval_with_derivative(p, xi);
      if (std::abs(v) <= 1e-300) continue;
      if (std::abs(dv) == 0.0) {
        xi += Complex{1e-8, 1e-8};  // off a critical point
        converged = false;
        continue;
      }
      const Complex w = v / dv;
      Complex s{0.0, 0.0};
      for (int j = 0; j < d; ++j) {
        if (j != i) s += 1.0 / (xi - x[static_cast<size_t>(j)]);
      }
      const Complex denom = 1.0 - w * s;
      Complex step = (std::abs(denom) > 1e-300) ? w / denom : w;
      if (!detail::is_finite(step)) step = w;
      xi -= step;
      if (std::abs(step) > opt.tol * (1.0 + std::abs(xi))) converged = false;
    }
  }

  if (!converged) {
    Poly monic_tail(p.begin(), p.end() - 1);
    for (Complex& c : monic_tail) c /= p.back();
    x = detail::companion_roots(monic_tail);
  }

  detail::newton_polish(p, x);
  x.insert(x.end(), zeros_at_origin.begin(), zeros_at_origin.end());
  return x;
}

}  // namespace merocert
