#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"

namespace adelic::lfun {
namespace {

// Rosser-Schoenfeld: pi(x) < 1.25506 x / log x for x > 1.
constexpr double kPrimeCountConstant = 1.25506;

const std::vector<long long>& sieve() {
  static const std::vector<long long> primes = [] {
    std::vector<bool> composite(static_cast<std::size_t>(kMaxPrimeCutoff) + 1, false);
    std::vector<long long> out;
    for (long long i = 2; i <= kMaxPrimeCutoff; ++i) {
      if (composite[static_cast<std::size_t>(i)]) continue;
      out.push_back(i);
      for (long long j = i * i; j <= kMaxPrimeCutoff; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
  }();
  return primes;
}

std::shared_ptr<const CoeffTable> cached_tau(long long max_prime) {
  static std::mutex mutex;
  static std::shared_ptr<const CoeffTable> cache;
  std::lock_guard lock(mutex);
  if (!cache || static_cast<long long>(cache->size()) < max_prime) {
    cache = std::make_shared<const CoeffTable>(tau_coefficients(static_cast<std::size_t>(max_prime)));
  }
  return cache;
}

// sum_{p > P} p^{-sigma} <= 1.25506 sigma P^{1-sigma} / ((sigma - 1) log P), by
// partial summation against the prime-counting bound.
double prime_tail_sum(double sigma, double P) {
  return kPrimeCountConstant * sigma * std::pow(P, 1.0 - sigma) / ((sigma - 1.0) * std::log(P));
}

}  // namespace

std::string to_string(Normalization n) { return n == Normalization::arithmetic ? "arithmetic" : "unitary"; }

Normalization normalization_from_string(const std::string& s) {
  if (s == "arithmetic") return Normalization::arithmetic;
  if (s == "unitary") return Normalization::unitary;
  throw DomainError("unknown normalization '" + s + "'");
}

Complex GammaFactor::operator()(Complex s) const {
  Complex value = std::exp(-(exponent_scale * s + exponent_shift) * std::log(base));
  for (const Term& term : terms) value *= numkit::gamma(term.scale * s + term.shift);
  return value;
}

GammaFactor GammaFactor::shifted(double delta) const {
  GammaFactor g = *this;
  g.exponent_shift += exponent_scale * delta;
  for (Term& term : g.terms) term.shift += term.scale * delta;
  return g;
}

std::vector<long long> primes_up_to(long long limit) {
  if (limit > kMaxPrimeCutoff) throw DomainError("primes_up_to: limit exceeds the sieve range");
  const auto& all = sieve();
  return {all.begin(), std::upper_bound(all.begin(), all.end(), limit)};
}

EulerProduct riemann_zeta(Normalization normalization) {
  EulerProduct L;
  L.label = "zeta";
  L.degree = 1;
  L.local_poly = [](long long) { return std::vector<Complex>{1.0, -1.0}; };
  L.gamma_factor = GammaFactor{numkit::kPi, 0.5, 0.0, {{0.5, 0.0}}};
  L.fe_center = 0.5;
  L.fe_sign = 1;
  L.normalization = normalization;
  L.arithmetic_shift = 0.0;
  return L;
}

EulerProduct ramanujan_delta(Normalization normalization, long long max_prime) {
  if (max_prime < 2 || max_prime > 100'000) throw DomainError("ramanujan_delta: max_prime must be in [2, 1e5]");
  // The tau table is built on first use.
  struct LazyTau {
    std::once_flag once;
    std::shared_ptr<const CoeffTable> table;
  };
  auto lazy = std::make_shared<LazyTau>();
  EulerProduct L;
  L.label = "delta";
  L.degree = 2;
  L.local_poly = [lazy, max_prime](long long p) {
    if (p > max_prime) throw DomainError("delta local polynomial: prime beyond the tau table");
    std::call_once(lazy->once, [&] { lazy->table = cached_tau(max_prime); });
    const double p11 = std::pow(static_cast<double>(p), 11.0);
    return std::vector<Complex>{1.0, -static_cast<double>((*lazy->table)[static_cast<std::size_t>(p)]), p11};
  };
  L.gamma_factor = GammaFactor{2.0 * numkit::kPi, 1.0, 0.0, {{1.0, 0.0}}};
  L.fe_center = 6.0;
  L.fe_sign = 1;
  L.normalization = Normalization::arithmetic;
  L.arithmetic_shift = 5.5;
  return convert(L, normalization);
}

EulerProduct convert(const EulerProduct& L, Normalization target) {
  if (L.normalization == target) return L;
  // unitary variable = arithmetic variable - shift
  const double delta = target == Normalization::unitary ? L.arithmetic_shift : -L.arithmetic_shift;
  EulerProduct out = L;
  out.normalization = target;
  out.fe_center = L.fe_center - delta;
  out.gamma_factor = L.gamma_factor.shifted(delta);
  out.local_poly = [inner = L.local_poly, delta](long long p) {
    std::vector<Complex> c = inner(p);
    const double scale = std::pow(static_cast<double>(p), -delta);
    double factor = 1.0;
    for (Complex& ck : c) {
      ck *= factor;
      factor *= scale;
    }
    return c;
  };
  return out;
}

EulerValue euler_product_eval(const EulerProduct& L, Complex s, long long P) {
  if (P < 2) throw DomainError("euler_product_eval: cutoff must be >= 2");
  if (P > kMaxPrimeCutoff) throw DomainError("euler_product_eval: cutoff exceeds the sieve range");
  if (!(s.real() > L.convergence_abscissa())) {
    throw DomainError("euler_product_eval: Re(s) outside the half-plane of absolute convergence");
  }
  const std::vector<long long> primes = primes_up_to(P);
  std::vector<double> index(primes.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<double>(i);

  // Per-prime log factors in parallel (real and imaginary parts separately),
  // then summed in ascending p.
  std::vector<Complex> logs(primes.size());
  auto log_factor = [&](std::size_t i) {
    const double p = static_cast<double>(primes[i]);
    const Complex x = std::exp(-s * std::log(p));
    const std::vector<Complex> c = L.local_poly(primes[i]);
    if (static_cast<int>(c.size()) != L.degree + 1) throw DomainError("local polynomial degree mismatch");
    Complex poly = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) poly = poly * x + *it;
    return -std::log(poly);
  };
  const unsigned threads = numkit::thread_budget();
  if (threads > 1 && primes.size() > 4096) {
    const auto re = numkit::parallel_map([&](double i) { return log_factor(static_cast<std::size_t>(i)).real(); },
                                         index, threads);
    const auto im = numkit::parallel_map([&](double i) { return log_factor(static_cast<std::size_t>(i)).imag(); },
                                         index, threads);
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = {re[i], im[i]};
  } else {
    for (std::size_t i = 0; i < logs.size(); ++i) logs[i] = log_factor(i);
  }

  EulerValue out;
  out.value = std::exp(numkit::sum_compensated(logs));
  out.primes_used = primes.size();
  const double sigma = s.real() - (L.convergence_abscissa() - 1.0);
  const double Pd = static_cast<double>(P);
  // -log(1 - x) <= x / (1 - x) for each of the degree Satake parameters of modulus one.
  out.log_tail_bound = L.degree * prime_tail_sum(sigma, Pd) / (1.0 - std::pow(Pd, -sigma));
  out.abs_tail_bound = std::abs(out.value) * std::expm1(out.log_tail_bound);
  return out;
}

Complex completed_from_euler(const EulerProduct& L, Complex s, long long P) {
  return L.gamma_factor(s) * euler_product_eval(L, s, P).value;
}

}  // namespace adelic::lfun
