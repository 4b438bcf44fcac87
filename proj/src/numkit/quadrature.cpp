#include <array>
#include <cmath>
#include <limits>

#include "adelic/numkit.hpp"

namespace adelic::numkit {
namespace {

constexpr double kHalfPi = 0.5 * kPi;
constexpr double kInitialStep = 0.5;
// exp(pi/2 sinh(6.5)) ~ e^523 is still finite; beyond that the map overflows.
constexpr double kMaxAbsU = 6.5;
constexpr int kQuietRun = 4;
// Quiet-tail stopping is only allowed outside t in [e^-15.7, e^15.7].
constexpr double kMinAbsUForStop = 3.0;

struct Walk {
  CompensatedSum sum;
  std::size_t evaluations = 0;
};

// Sums w(u) f(t(u)) over u = (first + stride*j) * h, j = 0, 1, ..., in one
// direction, stopping once terms have been negligible for a few consecutive
// nodes or the map leaves the representable range.
void walk_direction(const Integrand& f, double h, int first, int stride, int sign, double quiet,
                    Walk& out) {
  int quiet_run = 0;
  for (int k = first;; k += stride) {
    const double u = sign * k * h;
    if (std::abs(u) > kMaxAbsU) break;
    const double su = kHalfPi * std::sinh(u);
    const double t = std::exp(su);
    if (t == 0.0 || !std::isfinite(t)) break;
    const double weight = t * kHalfPi * std::cosh(u);
    const Complex value = f(t);
    ++out.evaluations;
    const Complex term = weight * value;
    if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
      // Only acceptable deep in a tail where the previous terms were negligible.
      if (quiet_run > 0) break;
      throw ConvergenceError("integrate_halfline: non-finite integrand value",
                             std::numeric_limits<double>::infinity());
    }
    out.sum += term;
    if (std::abs(term) * h < quiet && std::abs(u) >= kMinAbsUForStop) {
      if (++quiet_run >= kQuietRun) break;
    } else {
      quiet_run = 0;
    }
  }
}

// Gauss-Legendre nodes/weights on [-1, 1] by Newton iteration on P_n.
template <std::size_t N>
struct GaussLegendre {
  std::array<double, N> x{};
  std::array<double, N> w{};

  GaussLegendre() {
    for (std::size_t i = 0; i < N; ++i) {
      double z = std::cos(kPi * (static_cast<double>(i) + 0.75) / (static_cast<double>(N) + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (std::size_t j = 1; j <= N; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j - 1.0) * z * p1 - (j - 1.0) * p2) / static_cast<double>(j);
        }
        dp = static_cast<double>(N) * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / dp;
        z -= dz;
        if (std::abs(dz) < 1e-16) break;
      }
      x[i] = z;
      w[i] = 2.0 / ((1.0 - z * z) * dp * dp);
    }
  }
};

const GaussLegendre<16>& gauss16() {
  static const GaussLegendre<16> rule;
  return rule;
}

}  // namespace

QuadratureResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec) {
  if (!(spec.target_abs_tol > 0.0) || spec.max_refinements < 1) {
    throw DomainError("integrate_halfline: tolerance must be positive and refinements >= 1");
  }
  const double quiet = 1e-3 * spec.target_abs_tol;

  double h = kInitialStep;
  Walk all;
  walk_direction(f, h, 0, 1, +1, quiet, all);
  walk_direction(f, h, 1, 1, -1, quiet, all);
  Complex previous = h * all.sum.value();

  QuadratureResult result;
  result.evaluations = all.evaluations;
  for (int level = 1; level <= spec.max_refinements; ++level) {
    h *= 0.5;
    // Only the odd multiples of the new step are new nodes.
    walk_direction(f, h, 1, 2, +1, quiet, all);
    walk_direction(f, h, 1, 2, -1, quiet, all);
    const Complex current = h * all.sum.value();
    result.value = current;
    result.error_estimate = std::abs(current - previous);
    result.refinements = level;
    result.evaluations = all.evaluations;
    if (level >= 2 && result.error_estimate <= spec.target_abs_tol) {
      return result;
    }
    previous = current;
  }
  throw ConvergenceError("integrate_halfline: tolerance not reached", result.error_estimate);
}

QuadratureResult integrate_finite(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  if (!(spec.target_abs_tol > 0.0) || spec.max_refinements < 1) {
    throw DomainError("integrate_finite: tolerance must be positive and refinements >= 1");
  }
  const auto& rule = gauss16();
  auto composite = [&](int panels, std::size_t& evaluations) {
    const double width = (b - a) / panels;
    CompensatedSum acc;
    for (int k = 0; k < panels; ++k) {
      const double mid = a + (k + 0.5) * width;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        acc += rule.w[i] * f(mid + 0.5 * width * rule.x[i]);
      }
      evaluations += rule.x.size();
    }
    return 0.5 * width * acc.value();
  };

  QuadratureResult result;
  int panels = 1;
  Complex previous = composite(panels, result.evaluations);
  for (int level = 1; level <= spec.max_refinements; ++level) {
    panels *= 2;
    const Complex current = composite(panels, result.evaluations);
    result.value = current;
    result.error_estimate = std::abs(current - previous);
    result.refinements = level;
    if (result.error_estimate <= spec.target_abs_tol) return result;
    previous = current;
  }
  throw ConvergenceError("integrate_finite: tolerance not reached", result.error_estimate);
}

QuadratureRule composite_gauss_rule(double a, double b, int panels) {
  if (panels < 1 || !(b > a)) throw DomainError("composite_gauss_rule: need b > a and panels >= 1");
  const auto& rule = gauss16();
  QuadratureRule out;
  const double width = (b - a) / panels;
  for (int k = 0; k < panels; ++k) {
    const double mid = a + (k + 0.5) * width;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      out.nodes.push_back(mid + 0.5 * width * rule.x[i]);
      out.weights.push_back(0.5 * width * rule.w[i]);
    }
  }
  return out;
}

}  // namespace adelic::numkit
