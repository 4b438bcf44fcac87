#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <vector>

#include "adelic/numkit.hpp"

/// Spectral layer: zeros of completed L-functions on the critical line, the
/// multiplicity rule attaching n(rho) to each zero, point-mass annihilator
/// residuals, and a band model of the translation generator D (multiplication
/// by i t after Fourier transform) with its resolvent and weighted norm bound.
namespace adelic::polya {

using numkit::Complex;

enum class LFunctionKind { zeta, delta };

std::string to_string(LFunctionKind kind);
LFunctionKind kind_from_string(const std::string& s);

/// t -> Lambda(center + i t) on the critical line (center 1/2 for zeta, 6 for
/// Delta in the arithmetic variable), real for real t.
///
/// xi() is the raw completed value. z() divides by |gamma factor(center + i t)|:
/// same sign, same zeros, O(1) size (the Hardy Z function for zeta). Samples of
/// z are cached; copies share the cache, which is safe for concurrent use.
class CriticalLineFn {
 public:
  explicit CriticalLineFn(LFunctionKind kind);

  LFunctionKind kind() const { return kind_; }
  double center() const { return kind_ == LFunctionKind::zeta ? 0.5 : 6.0; }
  /// |t| beyond which the evaluators are not accurate enough (60 for zeta, 20 for Delta).
  double window() const { return kind_ == LFunctionKind::zeta ? 60.0 : 20.0; }

  Complex xi_complex(double t) const;
  double xi(double t) const { return xi_complex(t).real(); }
  double gamma_modulus(double t) const;
  double z(double t) const;
  double operator()(double t) const { return z(t); }

  std::size_t cache_size() const;

 private:
  struct Cache {
    mutable std::shared_mutex mutex;
    std::map<double, double> values;
  };

  void check_window(double t) const;

  LFunctionKind kind_;
  std::shared_ptr<Cache> cache_;
};

struct Zero {
  double rho = 0.0;
  double refined_tol = 0.0;
  int mult_assumed = 1;
  /// The first-derivative residual clears 1e-3, so the zero is simple.
  bool simple_verified = false;
};

struct ZeroList {
  LFunctionKind kind = LFunctionKind::zeta;
  std::vector<Zero> zeros;  // strictly increasing
};

/// Sign-change zeros of z() in [T1, T2], each bisected to `tol`. Zeros of even
/// order give no sign change and are missed. 0 <= T1 < T2 <= window, 0 < step <= 0.2.
ZeroList scan_zeros(const CriticalLineFn& F, double T1, double T2, double step = 0.05, double tol = 1e-10);

enum class RuleVariant {
  literal,   // largest n with n < delta - 1 and n < mult
  inclusive  // largest n with n < delta - 1 and n <= mult
};

std::string to_string(RuleVariant v);
RuleVariant rule_variant_from_string(const std::string& s);

/// The multiplicity rule. DomainError unless delta > 1 and mult >= 1.
int n_rho(int mult, double delta, RuleVariant variant = RuleVariant::literal);

struct SpectrumEntry {
  double rho = 0.0;
  int mult = 1;
  int n_rho = 0;
  int eig_mult = 0;  // m_pi * n_rho; zero means "not an eigenvalue"
  bool is_eigenvalue() const { return eig_mult > 0; }
};

struct PolyaSpectrum {
  double delta = 2.0;
  int m_pi = 1;
  RuleVariant variant = RuleVariant::literal;
  std::vector<SpectrumEntry> entries;
};

PolyaSpectrum build_spectrum(const ZeroList& zeros, double delta, int m_pi = 1,
                             RuleVariant variant = RuleVariant::literal);

struct AnnihilatorResidual {
  double value = 0.0;
  /// |D_h - D_{h/2}| for the same stencil, an estimate of the discretization error.
  double richardson_gap = 0.0;
};

inline constexpr double kDifferenceStep = 1e-3;

/// |d^k/dt^k z(t)| at t = rho (k <= 2) by the 5-point central stencil with step 1e-3.
AnnihilatorResidual annihilator_residual_detailed(const CriticalLineFn& F, double rho, int k);
inline double annihilator_residual(const CriticalLineFn& F, double rho, int k) {
  return annihilator_residual_detailed(F, rho, k).value;
}

/// Uniform grid t_j = -T + j h on [-T, T] with weight w(t) = (1 + t^2)^{delta/2}.
struct BandDiscretization {
  double T = 20.0;
  double h = 0.01;
  double delta = 0.0;
  Eigen::VectorXd grid;
  Eigen::VectorXd weight;

  static BandDiscretization make(double T, double h, double delta = 0.0);
  Eigen::Index size() const { return grid.size(); }
  /// Index of the grid point nearest t.
  Eigen::Index index_of(double t) const;
};

/// (D v)_j = i t_j v_j
Eigen::VectorXcd generator_apply(const BandDiscretization& band, const Eigen::VectorXcd& v);

/// (D - kappa)^{-1} v on the diagonal model. DomainError when Re(kappa) = 0.
Eigen::VectorXcd resolvent_apply(const BandDiscretization& band, const Eigen::VectorXcd& v, Complex kappa);

/// The same resolvent from the translation flow U(t) = e^{tD}:
/// -\int_0^\infty U(t) e^{-kappa t} dt v for Re(kappa) > 0 and
/// +\int_0^\infty U(-t) e^{kappa t} dt v for Re(kappa) < 0, by composite Gauss-Legendre.
Eigen::VectorXcd resolvent_laplace(const BandDiscretization& band, const Eigen::VectorXcd& v, Complex kappa);

/// max_j |i t_j - kappa|^{-1}, never above 1 / |Re(kappa)|.
double resolvent_norm(const BandDiscretization& band, Complex kappa);

struct NormBoundResult {
  double measured = 0.0;  // power-iteration estimate over random starts
  double exact = 0.0;     // max over the grid of sqrt(w(x + a) / w(x))
  double bound = 0.0;     // 2^{delta/4} (1 + a^2)^{delta/4}
  double shift = 0.0;     // a rounded to a multiple of the grid step
};

/// Operator norm of translation by a on the weighted space l^2(w) over the
/// band grid (zero padding at the ends), estimated by power iteration on
/// A = W^{1/2} T_a W^{-1/2} from `trials` seeded random unit vectors.
NormBoundResult norm_bound_check(double a, double delta, int trials, std::uint64_t seed = 1,
                                 double T = 20.0, double h = 0.01);

/// CSV (header row) and JSON (sorted keys, schema-versioned) exports.
std::string zeros_csv(const ZeroList& zeros);
std::string zeros_json(const ZeroList& zeros);
std::string spectrum_csv(const PolyaSpectrum& spectrum);
std::string spectrum_json(const PolyaSpectrum& spectrum);

}  // namespace adelic::polya
