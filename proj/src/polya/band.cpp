#include <algorithm>
#include <cmath>
#include <random>

#include "adelic/errors.hpp"
#include "adelic/polya.hpp"

namespace adelic::polya {
namespace {

// e^{-45} is below double resolution relative to the O(1) integrand.
constexpr double kLaplaceDecay = 45.0;
// Phase advance allowed per Gauss-Legendre panel.
constexpr double kPanelPhase = 4.0;
constexpr int kPowerIterations = 200;

}  // namespace

BandDiscretization BandDiscretization::make(double T, double h, double delta) {
  if (!(T > 0.0) || !(h > 0.0) || h > T) throw DomainError("BandDiscretization: need 0 < h <= T");
  if (!(delta >= 0.0)) throw DomainError("BandDiscretization: delta must be >= 0");
  BandDiscretization band;
  band.T = T;
  band.h = h;
  band.delta = delta;
  const auto n = static_cast<Eigen::Index>(std::llround(2.0 * T / h)) + 1;
  band.grid = Eigen::VectorXd::LinSpaced(n, -T, T);
  band.weight = (1.0 + band.grid.array().square()).pow(0.5 * delta).matrix();
  return band;
}

Eigen::Index BandDiscretization::index_of(double t) const {
  const auto j = static_cast<Eigen::Index>(std::llround((t + T) / h));
  return std::clamp<Eigen::Index>(j, 0, size() - 1);
}

Eigen::VectorXcd generator_apply(const BandDiscretization& band, const Eigen::VectorXcd& v) {
  if (v.size() != band.size()) throw DomainError("generator_apply: vector length mismatch");
  return (Complex(0.0, 1.0) * band.grid.cast<Complex>()).cwiseProduct(v);
}

Eigen::VectorXcd resolvent_apply(const BandDiscretization& band, const Eigen::VectorXcd& v, Complex kappa) {
  if (v.size() != band.size()) throw DomainError("resolvent_apply: vector length mismatch");
  if (kappa.real() == 0.0) throw DomainError("resolvent_apply: Re(kappa) = 0 lies on the spectrum line");
  const Eigen::VectorXcd symbol = Complex(0.0, 1.0) * band.grid.cast<Complex>() - Eigen::VectorXcd::Constant(band.size(), kappa);
  return v.cwiseQuotient(symbol);
}

Eigen::VectorXcd resolvent_laplace(const BandDiscretization& band, const Eigen::VectorXcd& v, Complex kappa) {
  if (v.size() != band.size()) throw DomainError("resolvent_laplace: vector length mismatch");
  if (kappa.real() == 0.0) throw DomainError("resolvent_laplace: Re(kappa) = 0 lies on the spectrum line");
  const double decay = std::abs(kappa.real());
  const double tau_max = kLaplaceDecay / decay;
  const double frequency = band.T + std::abs(kappa);
  const int panels = std::max(1, static_cast<int>(std::ceil(tau_max * frequency / kPanelPhase)));
  const numkit::QuadratureRule rule = numkit::composite_gauss_rule(0.0, tau_max, panels);

  // Re(kappa) > 0: -\int_0^inf e^{(i t_j - kappa) tau} d tau
  // Re(kappa) < 0: +\int_0^inf e^{(-i t_j + kappa) tau} d tau
  const double sign = kappa.real() > 0.0 ? -1.0 : 1.0;
  Eigen::VectorXcd out(band.size());
  for (Eigen::Index j = 0; j < band.size(); ++j) {
    const Complex rate = kappa.real() > 0.0 ? Complex(-kappa.real(), band.grid[j] - kappa.imag())
                                            : Complex(kappa.real(), kappa.imag() - band.grid[j]);
    numkit::CompensatedSum acc;
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) acc += rule.weights[q] * std::exp(rate * rule.nodes[q]);
    out[j] = sign * acc.value() * v[j];
  }
  return out;
}

double resolvent_norm(const BandDiscretization& band, Complex kappa) {
  if (kappa.real() == 0.0) throw DomainError("resolvent_norm: Re(kappa) = 0 lies on the spectrum line");
  double best = 0.0;
  for (Eigen::Index j = 0; j < band.size(); ++j) {
    best = std::max(best, 1.0 / std::abs(Complex(0.0, band.grid[j]) - kappa));
  }
  return best;
}

NormBoundResult norm_bound_check(double a, double delta, int trials, std::uint64_t seed, double T, double h) {
  if (!(delta >= 0.0)) throw DomainError("norm_bound_check: delta must be >= 0");
  if (trials < 1) throw DomainError("norm_bound_check: trials must be >= 1");
  const BandDiscretization band = BandDiscretization::make(T, h, delta);
  const auto shift = static_cast<Eigen::Index>(std::llround(a / h));
  const Eigen::Index n = band.size();
  if (std::abs(shift) >= n) throw DomainError("norm_bound_check: shift exceeds the grid");

  NormBoundResult result;
  result.shift = static_cast<double>(shift) * h;
  result.bound = std::pow(2.0, delta / 4.0) * std::pow(1.0 + result.shift * result.shift, delta / 4.0);

  // (A v)_{k + shift} = sqrt(w_{k + shift} / w_k) v_k for indices that stay on the grid
  const Eigen::VectorXd sqrt_w = band.weight.cwiseSqrt();
  const Eigen::Index lo = std::max<Eigen::Index>(0, -shift);
  const Eigen::Index len = n - std::abs(shift);
  const Eigen::VectorXd gain = sqrt_w.segment(lo + shift, len).cwiseQuotient(sqrt_w.segment(lo, len));
  result.exact = gain.maxCoeff();

  auto apply = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    out.segment(lo + shift, len) = gain.cwiseProduct(v.segment(lo, len));
    return out;
  };
  auto apply_adjoint = [&](const Eigen::VectorXd& v) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(n);
    out.segment(lo, len) = gain.cwiseProduct(v.segment(lo + shift, len));
    return out;
  };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal(rng);
    v.normalize();
    double estimate = 0.0;
    for (int it = 0; it < kPowerIterations; ++it) {
      const Eigen::VectorXd av = apply(v);
      estimate = std::max(estimate, av.norm());
      Eigen::VectorXd next = apply_adjoint(av);
      const double norm = next.norm();
      if (norm == 0.0) break;
      v = next / norm;
    }
    result.measured = std::max(result.measured, estimate);
  }
  return result;
}

}  // namespace adelic::polya
