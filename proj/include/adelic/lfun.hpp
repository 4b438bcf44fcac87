#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "adelic/int128.hpp"
#include "adelic/numkit.hpp"

/// Global L-functions as Euler products and as completed integral
/// representations, for the two shipped instances: zeta (degree 1) and the
/// L-function of the weight-12 cusp form Delta (degree 2).
namespace adelic::lfun {

using numkit::Complex;

enum class Normalization { arithmetic, unitary };

std::string to_string(Normalization n);
Normalization normalization_from_string(const std::string& s);

/// Dirichlet coefficients a_1..a_N (a[0] is unused and zero).
struct CoeffTable {
  std::vector<Int128> a;

  std::size_t size() const { return a.empty() ? 0 : a.size() - 1; }
  Int128 operator[](std::size_t n) const { return a.at(n); }
};

/// Coefficients of q * prod_{m >= 1} (1 - q^m)^24 up to q^N (exact). N <= 1e5.
CoeffTable tau_coefficients(std::size_t N);

void write_coeff_csv(std::ostream& os, const CoeffTable& table);
CoeffTable read_coeff_csv(std::istream& is);

/// base^{-(exponent_scale * s + exponent_shift)} * prod Gamma(scale * s + shift)
struct GammaFactor {
  struct Term {
    double scale = 1.0;
    double shift = 0.0;
  };
  double base = numkit::kPi;
  double exponent_scale = 0.5;
  double exponent_shift = 0.0;
  std::vector<Term> terms;

  Complex operator()(Complex s) const;
  /// The same factor written in the variable s + delta.
  GammaFactor shifted(double delta) const;
};

/// A global L-function datum: for each prime, the coefficients of
/// det(1 - chi_p X) as a polynomial in X = p^{-s}.
struct EulerProduct {
  std::string label;
  int degree = 1;
  std::function<std::vector<Complex>(long long p)> local_poly;
  GammaFactor gamma_factor;
  double fe_center = 0.5;
  int fe_sign = 1;
  Normalization normalization = Normalization::unitary;
  /// Shift between the two normalizations: s_arithmetic = s_unitary + shift.
  double arithmetic_shift = 0.0;

  /// Re(s) beyond which the product converges absolutely.
  double convergence_abscissa() const {
    return 1.0 + (normalization == Normalization::arithmetic ? arithmetic_shift : 0.0);
  }
};

EulerProduct riemann_zeta(Normalization normalization = Normalization::unitary);
/// Local polynomials use tau(p) for p <= max_prime (<= 1e5); larger primes throw.
EulerProduct ramanujan_delta(Normalization normalization, long long max_prime = 100'000);
EulerProduct convert(const EulerProduct& L, Normalization target);

struct EulerValue {
  Complex value;
  double log_tail_bound = 0.0;  // bound on |log(full product / partial product)|
  double abs_tail_bound = 0.0;  // |value| * (exp(log_tail_bound) - 1)
  std::size_t primes_used = 0;
};

inline constexpr long long kMaxPrimeCutoff = 200'000;

/// Primes <= limit (limit <= kMaxPrimeCutoff), ascending, from one shared sieve.
std::vector<long long> primes_up_to(long long limit);

/// prod_{p <= P} det(1 - chi_p p^{-s})^{-1} with a tail estimate from
/// sum_{p > P} p^{-sigma} <= 1.25506 sigma P^{1-sigma} / ((sigma-1) log P).
/// Throws DomainError outside the half-plane of absolute convergence.
EulerValue euler_product_eval(const EulerProduct& L, Complex s, long long P);

/// gamma_factor(s) * euler_product_eval(L, s, P).value
Complex completed_from_euler(const EulerProduct& L, Complex s, long long P);

struct ZetaValue {
  Complex value;
  double remainder_bound = 0.0;
};

/// Euler-Maclaurin evaluation of zeta(s) with M - 1 direct terms and B
/// Bernoulli corrections (B <= 20). Requires Re(s) > -2B + 1; PoleError at s = 1.
ZetaValue zeta_em_detailed(Complex s, int M = 100, int B = 10);
inline Complex zeta_em(Complex s, int M = 100, int B = 10) { return zeta_em_detailed(s, M, B).value; }

/// Lambda(s) = pi^{-s/2} Gamma(s/2) zeta(s), from the incomplete theta integral
/// -1/s - 1/(1-s) + \int_1^\infty omega(y) (y^{s/2} + y^{(1-s)/2}) dy/y.
Complex completed_lambda_zeta(Complex s);

/// pi^{-s/2} Gamma(s/2) zeta_em(s): the series route to the same function.
Complex completed_zeta_from_series(Complex s);

/// Lambda(Delta, s) = \int_1^\infty Delta(iy) (y^s + y^{12-s}) dy/y (entire);
/// equals (2 pi)^{-s} Gamma(s) L(Delta, s) in the arithmetic normalization.
Complex completed_lambda_delta(Complex s);

/// Versioned key-value text block describing an EulerProduct. Parsing
/// rebuilds the local polynomials from the label (zeta or delta).
std::string to_descriptor(const EulerProduct& L);
EulerProduct from_descriptor(const std::string& text);

}  // namespace adelic::lfun
