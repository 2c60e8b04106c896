#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "merocert/errors.hpp"

namespace merocert {

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 64;
inline constexpr double kDivisionGuard = 1e-12;

// Geometric bound on the coefficients dropped by truncation:
// |c_n| <= magnitude * rate^(-n) for every n > order of the carrying series.
// magnitude == 0 asserts the series is exactly the polynomial given.
struct TailBound {
  double magnitude = 0.0;
  double rate = 2.0;  // must stay > 1, otherwise the bound certifies nothing
};

namespace detail {

inline bool is_finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

// max over integer n > m of (n + shift) * x^n, for 0 < x < 1.
inline double max_shifted_geometric(int m, double shift, double x) {
  if (x <= 0.0) return 0.0;
  auto term = [&](double n) { return (n + shift) * std::pow(x, n); };
  double best = term(m + 1);
  const double n_star = -1.0 / std::log(x) - shift;  // stationary point of the envelope
  for (double n : {std::floor(n_star), std::ceil(n_star)}) {
    if (n > m) best = std::max(best, term(n));
  }
  return best;
}

// sum over n >= m of (n-1) x^n  (m >= 2)
inline double sum_linear_geometric(int m, double x) {
  const double one_minus = 1.0 - x;
  return std::pow(x, m) * ((m - 1) - (m - 2) * x) / (one_minus * one_minus);
}

// sum over n >= m of n(n-1) x^n  (m >= 2)
inline double sum_quadratic_geometric(int m, double x) {
  const double u = 1.0 - x;
  const double xm = std::pow(x, m);
  return m * (m - 1) * xm / u + 2.0 * m * xm * x / (u * u) + 2.0 * xm * x * x / (u * u * u);
}

// sum over k >= m of C(k, n) x^k, with m >= n. Uses the closed form for the
// full series x^n/(1-x)^(n+1) minus the explicit head.
inline double sum_binomial_geometric(int n, int m, double x) {
  double full = std::pow(x, n) / std::pow(1.0 - x, n + 1);
  double binom = 1.0;  // C(n, n)
  double head = 0.0;
  for (int k = n; k < m; ++k) {
    if (k > n) binom *= static_cast<double>(k) / static_cast<double>(k - n);
    head += binom * std::pow(x, k);
  }
  return std::max(0.0, full - head);
}

}  // namespace detail

class PowerSeries {
 public:
  explicit PowerSeries(std::vector<Complex> coeffs, std::optional<TailBound> tail = std::nullopt)
      : coeffs_(std::move(coeffs)), tail_(tail) {
    if (coeffs_.empty()) throw std::invalid_argument("PowerSeries: empty coefficient list");
    for (const Complex& c : coeffs_) {
      if (!detail::is_finite(c)) throw std::invalid_argument("PowerSeries: non-finite coefficient");
    }
    if (tail_) {
      if (!(tail_->magnitude >= 0.0) || !std::isfinite(tail_->magnitude) || !(tail_->rate > 1.0)) {
        throw std::invalid_argument("PowerSeries: tail bound needs magnitude >= 0 and rate > 1");
      }
    }
  }

  static PowerSeries zero(int order) {
    return PowerSeries(std::vector<Complex>(static_cast<size_t>(order) + 1, Complex{0.0, 0.0}),
                       TailBound{0.0, 2.0});
  }

  static PowerSeries constant(Complex c, int order) {
    std::vector<Complex> v(static_cast<size_t>(order) + 1, Complex{0.0, 0.0});
    v[0] = c;
    return PowerSeries(std::move(v), TailBound{0.0, 2.0});
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(int n) const {
    return (n >= 0 && n <= order()) ? coeffs_[static_cast<size_t>(n)] : Complex{0.0, 0.0};
  }
  const std::optional<TailBound>& tail() const { return tail_; }

  // |c_n| if explicit, else the tail majorant (infinity when no tail is known).
  double coeff_majorant(int n) const {
    if (n <= order()) return std::abs(coeff(n));
    if (!tail_) return std::numeric_limits<double>::infinity();
    return tail_->magnitude * std::pow(tail_->rate, -n);
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const Complex& c : coeffs_) m = std::max(m, std::abs(c));
    return m;
  }

  PowerSeries with_tail(TailBound t) const { return PowerSeries(coeffs_, t); }
  PowerSeries without_tail() const { return PowerSeries(coeffs_, std::nullopt); }

  // Lower the truncation order; the dropped explicit coefficients are folded
  // into the tail bound when one is present.
  PowerSeries truncated(int new_order) const {
    if (new_order >= order()) return padded(new_order);
    std::vector<Complex> v(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    if (!tail_) return PowerSeries(std::move(v));
    double t = tail_->magnitude;
    for (int n = new_order + 1; n <= order(); ++n) {
      t = std::max(t, std::abs(coeff(n)) * std::pow(tail_->rate, n));
    }
    return PowerSeries(std::move(v), TailBound{t, tail_->rate});
  }

  // Raising the order appends explicit zeros, which is only faithful when the
  // dropped part is known to vanish (exact polynomial) or nothing is claimed.
  PowerSeries padded(int new_order) const {
    if (new_order <= order()) return *this;
    if (tail_ && tail_->magnitude != 0.0) {
      throw std::logic_error("PowerSeries::padded: cannot pad a series with a nonzero tail");
    }
    std::vector<Complex> v = coeffs_;
    v.resize(static_cast<size_t>(new_order) + 1, Complex{0.0, 0.0});
    return PowerSeries(std::move(v), tail_);
  }

 private:
  std::vector<Complex> coeffs_;
  std::optional<TailBound> tail_;
};

namespace detail {

// Certified bound for |f(z)| on |z| = s given explicit coefficients + tail; s < rate.
inline double circle_majorant(const PowerSeries& a, double s) {
  double m = 0.0;
  double sk = 1.0;
  for (int n = 0; n <= a.order(); ++n, sk *= s) m += std::abs(a.coeff(n)) * sk;
  if (a.tail() && a.tail()->magnitude > 0.0) {
    const double q = s / a.tail()->rate;
    m += a.tail()->magnitude * std::pow(q, a.order() + 1) / (1.0 - q);
  }
  return m;
}

inline std::optional<TailBound> add_tails(const PowerSeries& a, const PowerSeries& b, int result_order) {
  if (!a.tail() || !b.tail()) return std::nullopt;
  const double rate = std::min(a.tail()->rate, b.tail()->rate);
  double mag = a.tail()->magnitude + b.tail()->magnitude;
  // Coefficients between the result order and the longer input are dropped
  // explicitly and must stay under the combined bound.
  const int top = std::max(a.order(), b.order());
  for (int n = result_order + 1; n <= top; ++n) {
    mag = std::max(mag, (a.coeff_majorant(n) + b.coeff_majorant(n)) * std::pow(rate, n));
  }
  return TailBound{mag, rate};
}

}  // namespace detail

inline PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return PowerSeries(std::move(v), detail::add_tails(a, b, n));
}

inline PowerSeries sub(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) v[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  return PowerSeries(std::move(v), detail::add_tails(a, b, n));
}

inline PowerSeries scale(const PowerSeries& a, Complex c) {
  std::vector<Complex> v = a.coeffs();
  for (Complex& x : v) x *= c;
  auto tail = a.tail();
  if (tail) tail->magnitude *= std::abs(c);
  return PowerSeries(std::move(v), tail);
}

inline PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
  const int n = std::min(a.order(), b.order());
  std::vector<Complex> v(static_cast<size_t>(n) + 1, Complex{0.0, 0.0});
  for (int i = 0; i <= std::min(a.order(), n); ++i) {
    const Complex ai = a.coeff(i);
    if (ai == Complex{0.0, 0.0}) continue;
    for (int j = 0; j <= std::min(b.order(), n - i); ++j) v[static_cast<size_t>(i + j)] += ai * b.coeff(j);
  }

  std::optional<TailBound> tail;
  if (a.tail() && b.tail()) {
    if (a.tail()->magnitude == 0.0 && b.tail()->magnitude == 0.0) {
      // Exact polynomials: the dropped part of the full product is explicit.
      const double rate = std::min(a.tail()->rate, b.tail()->rate);
      double mag = 0.0;
      for (int k = n + 1; k <= a.order() + b.order(); ++k) {
        Complex ck{0.0, 0.0};
        for (int i = std::max(0, k - b.order()); i <= std::min(a.order(), k); ++i) {
          ck += a.coeff(i) * b.coeff(k - i);
        }
        mag = std::max(mag, std::abs(ck) * std::pow(rate, k));
      }
      tail = TailBound{mag, rate};
    } else {
      // Cauchy estimate on a circle strictly inside both radii of validity.
      const double rho = std::min(a.tail()->rate, b.tail()->rate);
      const double s = std::min(1.0 + 0.75 * (rho - 1.0), 8.0);
      tail = TailBound{detail::circle_majorant(a, s) * detail::circle_majorant(b, s), s};
    }
  }
  return PowerSeries(std::move(v), tail);
}

// Multiplicative inverse as a truncated series; the tail (if any) is dropped,
// since no closed propagation rule exists for it.
inline PowerSeries reciprocal(const PowerSeries& a, double eps_div = kDivisionGuard) {
  const Complex a0 = a.coeff(0);
  if (std::abs(a0) <= eps_div) {
    throw ModelError(Errc::NearZeroConstantTerm,
                     "reciprocal: |constant term| = " + std::to_string(std::abs(a0)));
  }
  const int n = a.order();
  std::vector<Complex> v(static_cast<size_t>(n) + 1);
  v[0] = 1.0 / a0;
  for (int k = 1; k <= n; ++k) {
    Complex acc{0.0, 0.0};
    for (int j = 1; j <= k; ++j) acc += a.coeff(j) * v[static_cast<size_t>(k - j)];
    v[static_cast<size_t>(k)] = -acc / a0;
  }
  return PowerSeries(std::move(v));
}

inline PowerSeries differentiate(const PowerSeries& a) {
  if (a.order() == 0) return PowerSeries({Complex{0.0, 0.0}}, a.tail() ? std::optional<TailBound>(TailBound{0.0, 2.0}) : std::nullopt);
  std::vector<Complex> v(static_cast<size_t>(a.order()));
  for (int k = 1; k <= a.order(); ++k) v[static_cast<size_t>(k - 1)] = static_cast<double>(k) * a.coeff(k);
  std::optional<TailBound> tail;
  if (a.tail()) {
    if (a.tail()->magnitude == 0.0) {
      tail = TailBound{0.0, a.tail()->rate};
    } else {
      const double rho = a.tail()->rate;
      const double s = std::min(1.0 + 0.75 * (rho - 1.0), 8.0);
      const double mag = (a.tail()->magnitude / rho) *
                         detail::max_shifted_geometric(a.order() - 1, 1.0, s / rho);
      tail = TailBound{mag, s};
    }
  }
  return PowerSeries(std::move(v), tail);
}

// Term-wise antiderivative vanishing at the origin.
inline PowerSeries integrate0(const PowerSeries& a) {
  std::vector<Complex> v(static_cast<size_t>(a.order()) + 2, Complex{0.0, 0.0});
  for (int k = 0; k <= a.order(); ++k) v[static_cast<size_t>(k + 1)] = a.coeff(k) / static_cast<double>(k + 1);
  std::optional<TailBound> tail;
  if (a.tail()) tail = TailBound{a.tail()->magnitude * a.tail()->rate, a.tail()->rate};
  return PowerSeries(std::move(v), tail);
}

// Multiplication by z (order grows by one).
inline PowerSeries shift_up(const PowerSeries& a) {
  std::vector<Complex> v(static_cast<size_t>(a.order()) + 2, Complex{0.0, 0.0});
  for (int k = 0; k <= a.order(); ++k) v[static_cast<size_t>(k + 1)] = a.coeff(k);
  std::optional<TailBound> tail;
  if (a.tail()) tail = TailBound{a.tail()->magnitude * a.tail()->rate, a.tail()->rate};
  return PowerSeries(std::move(v), tail);
}

inline Complex eval(const PowerSeries& a, Complex z) {
  Complex acc{0.0, 0.0};
  for (int k = a.order(); k >= 0; --k) acc = acc * z + a.coeff(k);
  return acc;
}

struct EvalBracket {
  Complex value;
  double error;  // certified radius around value containing the true f(z); inf when unknown
};

inline EvalBracket eval_with_error(const PowerSeries& a, Complex z) {
  const Complex v = eval(a, z);
  if (!a.tail()) return {v, std::numeric_limits<double>::infinity()};
  if (a.tail()->magnitude == 0.0) return {v, 0.0};
  const double q = std::abs(z) / a.tail()->rate;
  if (q >= 1.0) return {v, std::numeric_limits<double>::infinity()};
  return {v, a.tail()->magnitude * std::pow(q, a.order() + 1) / (1.0 - q)};
}

}  // namespace merocert
