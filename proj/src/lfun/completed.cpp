#include <algorithm>
#include <cmath>
#include <vector>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"

namespace adelic::lfun {
namespace {

constexpr double kTolerance = 1e-13;

// Absolute tolerance scaled by the size of the integrand's largest moment,
// Gamma(sigma) base^{-sigma} at the dominant real exponent (>= 1).
double scaled_tolerance(double sigma, double base) {
  if (sigma <= 2.0) return kTolerance;
  const double log_scale = std::lgamma(sigma) - sigma * std::log(base);
  return kTolerance * std::max(1.0, std::exp(log_scale));
}

// e^{-2 pi N} with N = 40 is far below double precision at y >= 1.
constexpr std::size_t kDeltaTerms = 40;

// sum_{m >= 1} e^{-pi m^2 y} y^a, each term formed as one exponential so it
// underflows cleanly for large y.
Complex theta_tail_weighted(double y, Complex a) {
  const Complex log_y_a = a * std::log(y);
  Complex acc = 0.0;
  for (int m = 1;; ++m) {
    const double decay = -numkit::kPi * m * m * y;
    if (decay + log_y_a.real() < -745.0 || (m > 1 && decay < -60.0 + (-numkit::kPi * y))) break;
    acc += std::exp(decay + log_y_a);
  }
  return acc;
}

const std::vector<double>& delta_coefficients() {
  static const std::vector<double> tau = [] {
    const CoeffTable t = tau_coefficients(kDeltaTerms);
    std::vector<double> out(kDeltaTerms + 1, 0.0);
    for (std::size_t n = 1; n <= kDeltaTerms; ++n) out[n] = static_cast<double>(t[n]);
    return out;
  }();
  return tau;
}

// Delta(iy) y^a = sum_m tau(m) e^{-2 pi m y} y^a
Complex delta_weighted(double y, Complex a) {
  const auto& tau = delta_coefficients();
  const Complex log_y_a = a * std::log(y);
  Complex acc = 0.0;
  for (std::size_t m = 1; m <= kDeltaTerms; ++m) {
    const double decay = -2.0 * numkit::kPi * static_cast<double>(m) * y;
    if (decay + log_y_a.real() < -745.0) break;
    acc += tau[m] * std::exp(decay + log_y_a);
  }
  return acc;
}

}  // namespace

Complex completed_lambda_zeta(Complex s) {
  if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12) throw PoleError("completed_lambda_zeta: pole at s in {0, 1}");
  const Complex a = 0.5 * s - 1.0;
  const Complex b = 0.5 * (1.0 - s) - 1.0;
  const auto integrand = [&](double x) {
    const double y = 1.0 + x;
    return theta_tail_weighted(y, a) + theta_tail_weighted(y, b);
  };
  const double sigma = 0.5 * std::max(s.real(), 1.0 - s.real());
  const auto integral = numkit::integrate_halfline(integrand, {.target_abs_tol = scaled_tolerance(sigma, numkit::kPi)});
  return -1.0 / s - 1.0 / (1.0 - s) + integral.value;
}

Complex completed_zeta_from_series(Complex s) {
  return std::exp(-0.5 * s * std::log(numkit::kPi)) * numkit::gamma(0.5 * s) * zeta_em(s);
}

Complex completed_lambda_delta(Complex s) {
  const Complex a = s - 1.0;
  const Complex b = 11.0 - s;
  const auto integrand = [&](double x) {
    const double y = 1.0 + x;
    return delta_weighted(y, a) + delta_weighted(y, b);
  };
  const double sigma = std::max(s.real(), 12.0 - s.real());
  return numkit::integrate_halfline(integrand, {.target_abs_tol = scaled_tolerance(sigma, 2.0 * numkit::kPi)}).value;
}

}  // namespace adelic::lfun
