#include <cmath>
#include <mutex>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"
#include "adelic/polya.hpp"

namespace adelic::polya {
namespace {

using numkit::kPi;

// The incomplete-theta integral for zeta is used up to this height; above it
// the series route keeps more relative accuracy.
constexpr double kZetaIntegralWindow = 30.0;
constexpr double kSimpleZeroThreshold = 1e-3;

double stencil(const CriticalLineFn& F, double x, double h, int k) {
  switch (k) {
    case 0:
      return F(x);
    case 1:
      return (-F(x + 2 * h) + 8 * F(x + h) - 8 * F(x - h) + F(x - 2 * h)) / (12 * h);
    default:
      return (-F(x + 2 * h) + 16 * F(x + h) - 30 * F(x) + 16 * F(x - h) - F(x - 2 * h)) / (12 * h * h);
  }
}

}  // namespace

std::string to_string(LFunctionKind kind) { return kind == LFunctionKind::zeta ? "zeta" : "delta"; }

LFunctionKind kind_from_string(const std::string& s) {
  if (s == "zeta") return LFunctionKind::zeta;
  if (s == "delta") return LFunctionKind::delta;
  throw DomainError("unknown L-function '" + s + "' (expected zeta or delta)");
}

CriticalLineFn::CriticalLineFn(LFunctionKind kind) : kind_(kind), cache_(std::make_shared<Cache>()) {}

void CriticalLineFn::check_window(double t) const {
  if (!(std::abs(t) <= window())) throw DomainError("critical-line evaluation outside the validity window");
}

Complex CriticalLineFn::xi_complex(double t) const {
  check_window(t);
  const Complex s(center(), t);
  if (kind_ == LFunctionKind::delta) return lfun::completed_lambda_delta(s);
  if (std::abs(t) <= kZetaIntegralWindow) return lfun::completed_lambda_zeta(s);
  return lfun::completed_zeta_from_series(s);
}

double CriticalLineFn::gamma_modulus(double t) const {
  check_window(t);
  if (kind_ == LFunctionKind::delta) {
    // |(2 pi)^{-s} Gamma(s)| at s = 6 + i t
    return std::exp(numkit::log_gamma(Complex(6.0, t)).real() - 6.0 * std::log(2.0 * kPi));
  }
  // |pi^{-s/2} Gamma(s/2)| at s = 1/2 + i t, with Gamma(z) = Gamma(z + 1) / z
  const Complex z(0.25, 0.5 * t);
  return std::exp(numkit::log_gamma(z + 1.0).real() - 0.25 * std::log(kPi)) / std::abs(z);
}

double CriticalLineFn::z(double t) const {
  {
    std::shared_lock lock(cache_->mutex);
    const auto it = cache_->values.find(t);
    if (it != cache_->values.end()) return it->second;
  }
  const double value = xi(t) / gamma_modulus(t);
  std::unique_lock lock(cache_->mutex);
  cache_->values.emplace(t, value);
  return value;
}

std::size_t CriticalLineFn::cache_size() const {
  std::shared_lock lock(cache_->mutex);
  return cache_->values.size();
}

ZeroList scan_zeros(const CriticalLineFn& F, double T1, double T2, double step, double tol) {
  if (!(0.0 <= T1 && T1 < T2 && T2 <= F.window())) {
    throw DomainError("scan_zeros: need 0 <= T1 < T2 <= window");
  }
  if (!(step > 0.0 && step <= 0.2)) throw DomainError("scan_zeros: step must be in (0, 0.2]");
  if (!(tol > 0.0)) throw DomainError("scan_zeros: tol must be positive");

  const auto roots = numkit::bracket_and_bisect([&F](double t) { return F(t); }, T1, T2, step, tol,
                                                numkit::thread_budget());
  ZeroList out;
  out.kind = F.kind();
  for (double rho : roots) {
    if (!out.zeros.empty() && rho <= out.zeros.back().rho) continue;
    Zero z;
    z.rho = rho;
    z.refined_tol = tol;
    if (rho + 2 * kDifferenceStep <= F.window()) {
      z.simple_verified = annihilator_residual(F, rho, 1) >= kSimpleZeroThreshold;
    }
    out.zeros.push_back(z);
  }
  return out;
}

AnnihilatorResidual annihilator_residual_detailed(const CriticalLineFn& F, double rho, int k) {
  if (k < 0 || k > 2) throw DomainError("annihilator_residual: k must be 0, 1 or 2");
  AnnihilatorResidual r;
  const double coarse = stencil(F, rho, kDifferenceStep, k);
  r.value = std::abs(coarse);
  if (k > 0) r.richardson_gap = std::abs(coarse - stencil(F, rho, 0.5 * kDifferenceStep, k));
  return r;
}

}  // namespace adelic::polya
