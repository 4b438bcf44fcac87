#include <algorithm>
#include <cmath>
#include <numeric>

#include "adelic/satake.hpp"

namespace adelic::satake {

bool is_dominant(const Weight& lambda) {
  return std::is_sorted(lambda.begin(), lambda.end(), std::greater<>());
}

int total_degree(const Weight& lambda) { return std::accumulate(lambda.begin(), lambda.end(), 0); }

SatakeParam::SatakeParam(long long p, std::vector<Complex> chi) : p_(p), chi_(std::move(chi)) {
  if (p_ < 2) throw DomainError("SatakeParam: p must be a prime >= 2");
  if (chi_.empty() || static_cast<int>(chi_.size()) > kMaxSymmetricRank) {
    throw DomainError("SatakeParam: rank must be in [1, 8]");
  }
  for (const Complex& c : chi_) {
    if (c == Complex(0.0) || !std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("SatakeParam: entries must be finite and nonzero");
    }
  }
  std::sort(chi_.begin(), chi_.end(), [](const Complex& a, const Complex& b) {
    const double ma = std::abs(a), mb = std::abs(b);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b);
  });
}

double SatakeParam::abs_pi() const {
  double m = 0.0;
  for (const Complex& c : chi_) m = std::max(m, std::abs(c));
  return m;
}

SatakeParam SatakeParam::twist(Complex s) const {
  const Complex scale = std::exp(-s * std::log(static_cast<double>(p_)));
  std::vector<Complex> scaled = chi_;
  for (Complex& c : scaled) c *= scale;
  return {p_, std::move(scaled)};
}

ModulusValue modulus_delta(const std::vector<int>& exponents, long long p) {
  const int n = static_cast<int>(exponents.size());
  ModulusValue out;
  // |p^e| = p^{-e}; the j-th factor carries power n + 1 - 2j (j = 1..n).
  for (int j = 0; j < n; ++j) out.exponent -= (n - 1 - 2 * j) * exponents[static_cast<std::size_t>(j)];
  out.value = std::pow(static_cast<double>(p), out.exponent);
  return out;
}

HeckeFn HeckeFn::double_coset(long long p, const Weight& lambda) {
  if (!is_dominant(lambda)) throw DomainError("HeckeFn: lambda must be dominant");
  HeckeFn f;
  f.n = static_cast<int>(lambda.size());
  f.p = p;
  f.coeffs[lambda] = SqrtPNumber::integer(p, 1);
  return f;
}

HeckeFn HeckeFn::radial(int n, long long p, int twice_sigma) {
  HeckeFn f;
  f.n = n;
  f.p = p;
  f.radial_twice_sigma = twice_sigma;
  return f;
}

std::vector<Weight> dominant_nonnegative(int n, int k) {
  std::vector<Weight> out;
  Weight current;
  // parts in weakly decreasing order, each <= bound
  auto recurse = [&](auto&& self, int remaining, int slots, int bound) -> void {
    if (slots == 0) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const int hi = std::min(bound, remaining);
    for (int part = hi; part >= 0; --part) {
      if (part * slots < remaining) break;
      current.push_back(part);
      self(self, remaining - part, slots - 1, part);
      current.pop_back();
    }
  };
  recurse(recurse, k, n, k);
  return out;
}

}  // namespace adelic::satake
