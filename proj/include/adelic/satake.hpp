#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adelic/int128.hpp"
#include "adelic/numkit.hpp"

/// Unramified local theory for split GL(n, Q_p): spherical Hecke functions,
/// the Satake transform (by coset counting for n <= 2), W-invariant Laurent
/// polynomials, Satake parameters and local L-factors.
namespace adelic::satake {

using numkit::Complex;

/// A cocharacter lambda in Z^n, i.e. the diagonal matrix diag(p^{lambda_1}, ..., p^{lambda_n}).
using Weight = std::vector<int>;

inline constexpr int kMaxSymmetricRank = 8;

bool is_dominant(const Weight& lambda);
int total_degree(const Weight& lambda);

/// Exact rational p^e * num with p not dividing num (num == 0 => e == 0).
class PPowerRational {
 public:
  PPowerRational() = default;
  PPowerRational(long long p, Int128 num, int exponent);

  static PPowerRational zero(long long p) { return {p, 0, 0}; }

  long long prime() const { return p_; }
  Int128 numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }
  double value() const;

  friend PPowerRational operator+(const PPowerRational& x, const PPowerRational& y);
  friend PPowerRational operator*(const PPowerRational& x, const PPowerRational& y);
  PPowerRational operator-() const { return {p_, -num_, exp_}; }
  friend bool operator==(const PPowerRational& x, const PPowerRational& y) {
    return x.num_ == y.num_ && x.exp_ == y.exp_;
  }

 private:
  void normalize();

  long long p_ = 0;
  Int128 num_ = 0;
  int exp_ = 0;
};

/// Exact element a + b*sqrt(p) of Z[1/p, sqrt(p)]. This ring holds every
/// value the Satake transform produces: integer counts times powers of p^{1/2}.
/// A default-constructed value is a prime-agnostic zero.
class SqrtPNumber {
 public:
  SqrtPNumber() = default;

  /// c * p^{half_exponent / 2}
  static SqrtPNumber half_power(long long p, long long c, int half_exponent);
  static SqrtPNumber integer(long long p, long long c) { return half_power(p, c, 0); }

  long long prime() const { return p_; }
  bool is_zero() const { return rational_.is_zero() && surd_.is_zero(); }
  double value() const;
  const PPowerRational& rational_part() const { return rational_; }
  const PPowerRational& surd_part() const { return surd_; }
  std::string to_string() const;

  SqrtPNumber& operator+=(const SqrtPNumber& y);
  SqrtPNumber& operator*=(const SqrtPNumber& y);
  friend SqrtPNumber operator+(SqrtPNumber x, const SqrtPNumber& y) { return x += y; }
  friend SqrtPNumber operator*(SqrtPNumber x, const SqrtPNumber& y) { return x *= y; }
  SqrtPNumber operator-() const;
  friend bool operator==(const SqrtPNumber& x, const SqrtPNumber& y);

 private:
  void adopt(long long p);

  long long p_ = 0;
  PPowerRational rational_;
  PPowerRational surd_;
};

inline bool scalar_is_zero(const Complex& c) { return c == Complex(0.0); }
inline bool scalar_is_zero(const SqrtPNumber& c) { return c.is_zero(); }

/// Calls visit(w) for every distinct permutation w of lambda (its W-orbit).
template <class Visitor>
void for_each_orbit_member(const Weight& lambda, Visitor&& visit) {
  Weight w = lambda;
  std::sort(w.begin(), w.end());
  do {
    visit(static_cast<const Weight&>(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

/// W-invariant finitely supported function on Z^n, stored as coefficients of
/// monomial orbit sums m_lambda indexed by dominant lambda.
template <class Scalar>
class SymLaurent {
 public:
  using Coefficients = std::map<Weight, Scalar>;

  explicit SymLaurent(int n = 1) : n_(n) {
    if (n < 1 || n > kMaxSymmetricRank) throw DomainError("SymLaurent: rank out of range");
  }

  /// The orbit sum of lambda (any representative; stored at its dominant form).
  static SymLaurent orbit(const Weight& lambda, Scalar c) {
    SymLaurent g(static_cast<int>(lambda.size()));
    g.add(lambda, c);
    return g;
  }

  int rank() const { return n_; }
  const Coefficients& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }

  Scalar coefficient(const Weight& lambda) const {
    const auto it = coeffs_.find(dominant_form(lambda));
    return it == coeffs_.end() ? Scalar{} : it->second;
  }

  void add(const Weight& lambda, const Scalar& c) {
    if (static_cast<int>(lambda.size()) != n_) throw DomainError("SymLaurent: weight rank mismatch");
    const Weight key = dominant_form(lambda);
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) it->second += c;
    if (scalar_is_zero(it->second)) coeffs_.erase(it);
  }

  SymLaurent& operator+=(const SymLaurent& other) {
    check_rank(other);
    for (const auto& [lambda, c] : other.coeffs_) add(lambda, c);
    return *this;
  }
  friend SymLaurent operator+(SymLaurent a, const SymLaurent& b) { return a += b; }

  /// Product in C[lambda]^W: m_lambda * m_mu expanded over both orbits; the
  /// coefficient of m_nu is read off the dominant monomials.
  friend SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
    a.check_rank(b);
    SymLaurent out(a.n_);
    for (const auto& [lambda, c] : a.coeffs_) {
      for (const auto& [mu, d] : b.coeffs_) {
        for_each_orbit_member(lambda, [&](const Weight& alpha) {
          for_each_orbit_member(mu, [&](const Weight& beta) {
            Weight nu(alpha.size());
            for (std::size_t i = 0; i < nu.size(); ++i) nu[i] = alpha[i] + beta[i];
            if (is_dominant(nu)) out.add(nu, c * d);
          });
        });
      }
    }
    return out;
  }

  friend bool operator==(const SymLaurent& a, const SymLaurent& b) {
    return a.n_ == b.n_ && a.coeffs_ == b.coeffs_;
  }

  static Weight dominant_form(Weight lambda) {
    std::sort(lambda.begin(), lambda.end(), std::greater<>());
    return lambda;
  }

 private:
  void check_rank(const SymLaurent& other) const {
    if (other.n_ != n_) throw DomainError("SymLaurent: rank mismatch");
  }

  int n_;
  Coefficients coeffs_;
};

SymLaurent<Complex> to_complex(const SymLaurent<SqrtPNumber>& g);

/// Unramified Satake parameter chi_pi(varpi_1), ..., chi_pi(varpi_n) at p,
/// kept in canonical order (by modulus, then argument).
class SatakeParam {
 public:
  SatakeParam(long long p, std::vector<Complex> chi);

  int rank() const { return static_cast<int>(chi_.size()); }
  long long prime() const { return p_; }
  const std::vector<Complex>& entries() const { return chi_; }
  /// |pi| = max_j |chi_j| (modulus of the Satake entries).
  double abs_pi() const;
  /// chi_{pi_s} = p^{-s} chi_pi
  SatakeParam twist(Complex s) const;

  friend bool operator==(const SatakeParam& a, const SatakeParam& b) {
    return a.p_ == b.p_ && a.chi_ == b.chi_;
  }

 private:
  long long p_;
  std::vector<Complex> chi_;
};

/// Spherical Hecke function sum_lambda c_lambda 1_{K varpi^lambda K}, or the
/// radial family 1_{M(O)} |x|^sigma (sigma = twice_sigma / 2) when radial is set.
struct HeckeFn {
  int n = 1;
  long long p = 2;
  std::map<Weight, SqrtPNumber> coeffs;
  std::optional<int> radial_twice_sigma;

  bool finite_support() const { return !radial_twice_sigma.has_value(); }

  static HeckeFn double_coset(long long p, const Weight& lambda);
  static HeckeFn radial(int n, long long p, int twice_sigma);
};

/// Right K-coset representative p^{shift} * [[p^a, b], [0, p^c]] (n = 2) or
/// p^{shift} * p^a (n = 1).
struct CosetRep {
  Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic> integral;
  int shift = 0;
  std::vector<int> diagonal_exponents;  // includes shift
};

struct CosetEnumeration {
  int n = 1;
  long long p = 2;
  Weight lambda;
  std::vector<CosetRep> representatives;
  int depth = 1;  // valuations tested modulo p^depth
};

struct ModulusValue {
  int exponent = 0;  // delta(a) = p^exponent
  double value = 1.0;
};

/// delta(a) = |a_1|^{n-1} |a_2|^{n-3} ... |a_n|^{-(n-1)} for a = diag(p^{e_1}, ..., p^{e_n}).
ModulusValue modulus_delta(const std::vector<int>& exponents, long long p);

/// Right cosets K varpi^lambda K / K for n in {1, 2}.
CosetEnumeration enumerate_cosets(long long p, const Weight& lambda);

/// Exact Satake transform Sf(a) = delta(a)^{1/2} \int_N f(an) dn of a
/// finitely supported Hecke function (n <= 2), by counting cosets.
SymLaurent<SqrtPNumber> satake_transform(const HeckeFn& f);

/// Satake transform of 1_{M(O)} |x|^sigma truncated to |lambda| <= d
/// (exact; truncation is exact because det valuation is preserved).
SymLaurent<SqrtPNumber> satake_truncated_radial(int twice_sigma, int d, int n, long long p);

/// Convolution of finitely supported Hecke functions (n <= 2) by coset counting.
HeckeFn convolve(const HeckeFn& f, const HeckeFn& g);

/// sum_lambda c_lambda * (orbit sum of prod_j chi_j^{(w lambda)_j})
Complex eval_character(const SymLaurent<Complex>& g, const SatakeParam& chi);

/// prod_j (1 - chi_j p^{-s})^{-1}. Throws PoleError when a factor vanishes.
Complex local_factor(const SatakeParam& chi, Complex s);

/// Coefficients h_0..h_d of prod_j (1 - chi_j X)^{-1}.
std::vector<Complex> local_factor_series(const SatakeParam& chi, int d);

/// sum over dominant lambda >= 0 with |lambda| <= d of the orbit sum at chi:
/// the truncated trace of pi(1_{M(O)} |x|^{(n-1)/2}).
Complex trace_truncated(const SatakeParam& chi, int d);

/// Dominant lambda >= 0 with |lambda| == k and n parts.
std::vector<Weight> dominant_nonnegative(int n, int k);

}  // namespace adelic::satake
