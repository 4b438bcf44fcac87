#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "adelic/errors.hpp"

/// Shared numerical kernels: complex gamma, half-line and finite quadrature,
/// compensated summation and a bracketing root finder. Everything here is a
/// pure function of its arguments.
namespace adelic::numkit {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;

/// Gamma function on the complex plane (Lanczos, g = 7, with reflection for
/// Re z < 1/2). Relative error is ~1e-14 on |z| <= 30, |Im z| <= 50.
/// Throws PoleError at nonpositive integers.
Complex gamma(Complex z);

/// log Gamma(z) for Re z >= 1/2; the imaginary part is continuous along
/// horizontal lines but is not reduced to the principal branch.
Complex log_gamma(Complex z);

enum class Transform { half_line_double_exponential, finite_gauss };

struct QuadratureSpec {
  double target_abs_tol = 1e-13;
  int max_refinements = 10;
  Transform transform = Transform::half_line_double_exponential;
};

struct QuadratureResult {
  Complex value;
  double error_estimate = 0.0;
  int refinements = 0;
  std::size_t evaluations = 0;
};

using Integrand = std::function<Complex(double)>;

/// \int_0^\infty f(t) dt via the exp-sinh substitution t = exp(pi/2 sinh u).
/// The trapezoid step is halved until two successive levels agree within
/// spec.target_abs_tol. Throws ConvergenceError otherwise.
QuadratureResult integrate_halfline(const Integrand& f, const QuadratureSpec& spec = {});

/// \int_a^b f(t) dt with composite 16-point Gauss-Legendre, doubling the
/// panel count until successive results agree.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const QuadratureSpec& spec = {.transform = Transform::finite_gauss});

/// Nodes and weights of a fixed quadrature rule: \int f ~ sum_i weights[i] f(nodes[i]).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Composite 16-point Gauss-Legendre rule on [a, b] with `panels` equal panels,
/// for integrands that are vector-valued or too costly to adapt per component.
QuadratureRule composite_gauss_rule(double a, double b, int panels);

/// Neumaier-compensated summation in the given order.
Complex sum_compensated(std::span<const Complex> terms);

/// Streaming form of sum_compensated (real and imaginary parts carried separately).
class CompensatedSum {
 public:
  void add(Complex x);
  CompensatedSum& operator+=(Complex x) {
    add(x);
    return *this;
  }
  Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

 private:
  double re_ = 0.0, re_c_ = 0.0;
  double im_ = 0.0, im_c_ = 0.0;
};

/// Scans [a, b] at spacing `step`, and bisects every sign change down to an
/// interval of width <= tol. Roots come back sorted ascending. Zeros of even
/// order produce no sign change and are not reported. Sampling may use up to
/// `threads` workers; f must then be safe to call concurrently.
std::vector<double> bracket_and_bisect(const std::function<double(double)>& f, double a, double b,
                                       double step, double tol, unsigned threads = 1);

/// Worker count allowed for internal sweeps: hardware concurrency capped by
/// the ADELIC_ZETA_THREADS environment variable.
unsigned thread_budget();

/// Evaluates f at every point in `xs` using up to `threads` workers; results
/// are stored by index so the output does not depend on scheduling.
std::vector<double> parallel_map(const std::function<double(double)>& f, std::span<const double> xs,
                                 unsigned threads);

}  // namespace adelic::numkit
