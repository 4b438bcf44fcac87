#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "adelic/numkit.hpp"

/// Schwartz-Bruhat test functions on the adeles of Q (n = 1), their Fourier
/// transforms under the standard character, the theta sum
/// E(f)(t) = t^{1/2} sum_{gamma in Q^x} f(gamma t), and its Mellin transform.
///
/// Conventions: psi_inf(x) = e^{2 pi i x}, Lebesgue measure at infinity,
/// vol(Z_p) = 1 at every finite place. Under these the lattice Q in A is
/// self-dual and Poisson summation holds with no extra constants.
namespace adelic::theta {

using numkit::Complex;

/// Positive or negative rational num/den in lowest terms, den > 0.
class Rational {
 public:
  Rational(long long num = 0, long long den = 1);

  long long num() const { return num_; }
  long long den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  Rational inverse() const;
  bool is_integer() const { return den_ == 1; }
  std::string to_string() const;
  static Rational parse(const std::string& text);

  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b) { return a * b.inverse(); }
  friend bool operator==(const Rational& a, const Rational& b) = default;
  friend bool operator<(const Rational& a, const Rational& b);

 private:
  long long num_;
  long long den_;
};

/// sum_i c_i 1_{m_i Zhat} on the finite adeles (m_i > 0 distinct, c_i != 0).
struct FiniteTestFn {
  struct Term {
    Complex c;
    Rational m;
  };
  std::vector<Term> terms;  // sorted by m

  static FiniteTestFn lattice(Rational m, Complex c = 1.0);
  /// Merges equal scales, drops zero coefficients, sorts by scale.
  FiniteTestFn& normalize();

  Complex value_at_zero() const;
  /// \int g with vol(Zhat) = 1, i.e. sum c_i / m_i.
  Complex total_integral() const;
  /// g(x) for x in Q embedded diagonally: x in m Zhat iff x / m is an integer.
  Complex operator()(const Rational& x) const;

  friend FiniteTestFn operator+(FiniteTestFn a, const FiniteTestFn& b);
  friend bool operator==(const FiniteTestFn& a, const FiniteTestFn& b);
};

inline constexpr int kMaxArchDegree = 8;

/// P(u) e^{-pi u^2} with deg P <= 8; poly[k] is the coefficient of u^k.
struct ArchTestFn {
  std::vector<Complex> poly;

  static ArchTestFn gaussian() { return {{1.0}}; }
  static ArchTestFn monomial(int k, Complex c = 1.0);

  int degree() const { return static_cast<int>(poly.size()) - 1; }
  Complex operator()(double u) const;
  Complex value_at_zero() const { return poly.empty() ? Complex(0.0) : poly[0]; }
  /// \int_R P(u) e^{-pi u^2} du (odd powers vanish).
  Complex total_integral() const;
  /// Drops trailing zero coefficients and checks the degree bound.
  ArchTestFn& normalize();

  friend bool operator==(const ArchTestFn& a, const ArchTestFn& b);
};

/// Finite sum of pure tensors g (x) h.
struct AdelicTestFn {
  std::vector<std::pair<FiniteTestFn, ArchTestFn>> summands;

  static AdelicTestFn pure(FiniteTestFn g, ArchTestFn h) { return {{{std::move(g), std::move(h)}}}; }
  /// 1_Zhat (x) e^{-pi u^2}
  static AdelicTestFn standard_gaussian() { return pure(FiniteTestFn::lattice(1), ArchTestFn::gaussian()); }

  Complex value_at_zero() const;
  Complex total_integral() const;

  friend bool operator==(const AdelicTestFn& a, const AdelicTestFn& b);
};

/// (1_{m Zhat})^ = (1/m) 1_{(1/m) Zhat}
FiniteTestFn fourier_fin(const FiniteTestFn& g);
/// Closed form by F[u^k G] = (2 pi i)^{-1} (d/dx - 2 pi x) F[u^{k-1} G], G = e^{-pi u^2}.
ArchTestFn fourier_arch(const ArchTestFn& h);
AdelicTestFn fourier(const AdelicTestFn& f);

/// f(0) = 0 and f_hat(0) = 0 (the non-invertible locus at n = 1 is {0}).
bool is_S0(const AdelicTestFn& f, double tol = 1e-14);

/// (1_Zhat - p 1_{p Zhat}) (x) u^2 e^{-pi u^2}. Throws DomainError unless p is prime.
AdelicTestFn make_S0(long long p);

enum class EvalMode { direct, dual, automatic };

struct EValue {
  Complex value;
  EvalMode used = EvalMode::direct;
  /// Archimedean cutoff |gamma t| <= radius of the direct sum that was
  /// evaluated (for dual mode, of the sum for f_hat at 1/t).
  double radius = 0.0;
  std::size_t terms = 0;
};

/// Direct sums with more terms than this switch to the dual side in automatic mode.
inline constexpr std::size_t kMaxDirectTerms = 20'000;

/// E(f)(t) = t^{1/2} sum_{gamma in Q^x} f_fin(gamma) f_inf(gamma t), truncated
/// where the Gaussian-polynomial tail drops below 1e-16. The dual mode uses
/// E(f)(t) = E(f_hat)(1/t) + t^{-1/2} f_hat(0) - t^{1/2} f(0).
EValue E_eval_detailed(const AdelicTestFn& f, double t, EvalMode mode = EvalMode::automatic);
inline Complex E_eval(const AdelicTestFn& f, double t, EvalMode mode = EvalMode::automatic) {
  return E_eval_detailed(f, t, mode).value;
}

/// |Theta(f)(t) - Theta(f_hat)(1/t)| where Theta(f)(t) = t^{1/2} sum_{gamma in Q} f(gamma t)
/// is the full lattice sum (gamma = 0 included); both sides by direct summation.
double functional_eq_residual(const AdelicTestFn& f, double t);

/// sup over the grid of |E(f)(t)| max(t, 1/t)^n (direct summation).
double decay_constant(const AdelicTestFn& f, int n, const std::vector<double>& grid);

enum class MellinRoute { direct, continued, automatic };

/// \int_0^\infty E(f)(t) t^s dt/t. The direct route integrates over the whole
/// half-line; the continued route uses the split at t = 1,
/// \int_1^\infty [E(f)(t) t^s + E(f_hat)(t) t^{-s}] dt/t + f_hat(0)/(s - 1/2) - f(0)/(s + 1/2).
/// Automatic: direct for S0 data or Re(s) >= 1, continued otherwise.
/// PoleError within 0.05 of s + 1/2 in {0, 1} for non-S0 f.
Complex mellin_E(const AdelicTestFn& f, Complex s, MellinRoute route = MellinRoute::automatic);

/// Closed-form zeta integral: zeta(w) sum c_i m_i^{-w} sum_{j even} p_j pi^{-(j+w)/2} Gamma((j+w)/2), w = s + 1/2.
Complex mellin_closed_form(const AdelicTestFn& f, Complex s);

/// (2 pi i)^{-1} times the contour integral of mellin_E around |s - center| = radius
/// (trapezoid rule with `nodes` points).
Complex residue_probe(const AdelicTestFn& f, Complex center, double radius, int nodes = 64,
                      MellinRoute route = MellinRoute::automatic);

struct EProfile {
  AdelicTestFn f;
  std::vector<double> t;
  std::vector<Complex> values;
};

/// E(f) on the grid, evaluated point-wise (deterministic; may run in parallel).
EProfile make_profile(const AdelicTestFn& f, const std::vector<double>& grid);
void write_profile_csv(std::ostream& os, const EProfile& profile);

/// Versioned key-value text block for a test function, and its parser.
std::string to_descriptor(const AdelicTestFn& f);
AdelicTestFn from_descriptor(const std::string& text);

}  // namespace adelic::theta
