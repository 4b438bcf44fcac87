#include <algorithm>
#include <climits>

#include "adelic/satake.hpp"

namespace adelic::satake {
namespace {

void require_finite_rank_le2(const HeckeFn& f, const char* who) {
  if (f.n < 1 || f.n > 2) throw DomainError(std::string(who) + ": only n in {1, 2} is supported");
  if (!f.finite_support()) throw DomainError(std::string(who) + ": requires finite support");
}

int valuation(long long b, long long p) {
  if (b == 0) return INT_MAX / 4;
  int v = 0;
  while (b % p == 0) {
    b /= p;
    ++v;
  }
  return v;
}

// Cartan type (lambda_1, lambda_2) of y^{-1} varpi^nu for a coset rep y.
Weight cartan_type_of_quotient(const CosetRep& y, const Weight& nu, long long p) {
  const int a = y.diagonal_exponents[0] - y.shift;
  const int c = y.diagonal_exponents[1] - y.shift;
  const long long b = y.integral(0, 1);
  // y^{-1} varpi^nu = p^{-shift} [[p^{nu1-a}, -b p^{nu2-a-c}], [0, p^{nu2-c}]]
  const int v11 = nu[0] - a - y.shift;
  const int v12 = valuation(b, p) + nu[1] - a - c - y.shift;
  const int v22 = nu[1] - c - y.shift;
  const int det_val = nu[0] + nu[1] - a - c - 2 * y.shift;
  const int lambda2 = std::min({v11, v12, v22});
  return {det_val - lambda2, lambda2};
}

}  // namespace

SymLaurent<SqrtPNumber> satake_transform(const HeckeFn& f) {
  require_finite_rank_le2(f, "satake_transform");
  // Sf(varpi^mu) = delta(varpi^mu)^{1/2} * #{cosets of the support with Iwasawa diagonal mu}
  std::map<Weight, SqrtPNumber> values;
  for (const auto& [lambda, c] : f.coeffs) {
    if (static_cast<int>(lambda.size()) != f.n) throw DomainError("satake_transform: weight rank mismatch");
    const CosetEnumeration cosets = enumerate_cosets(f.p, lambda);
    for (const CosetRep& rep : cosets.representatives) {
      const Weight& mu = rep.diagonal_exponents;
      const int half = modulus_delta(mu, f.p).exponent;
      values[mu] += SqrtPNumber::half_power(f.p, 1, half) * c;
    }
  }

  SymLaurent<SqrtPNumber> out(f.n);
  for (const auto& [mu, v] : values) {
    if (v.is_zero()) continue;
    // W-invariance of the image is a theorem; a violation means a counting bug.
    Weight swapped = mu;
    std::reverse(swapped.begin(), swapped.end());
    const auto it = values.find(swapped);
    if (it == values.end() || !(it->second == v)) {
      throw std::logic_error("satake_transform: image is not W-invariant");
    }
    if (is_dominant(mu)) out.add(mu, v);
  }
  return out;
}

SymLaurent<SqrtPNumber> satake_truncated_radial(int twice_sigma, int d, int n, long long p) {
  if (d < 0) throw DomainError("satake_truncated_radial: degree must be >= 0");
  HeckeFn f;
  f.n = n;
  f.p = p;
  for (int k = 0; k <= d; ++k) {
    // |x|^sigma = p^{-sigma k} on K varpi^lambda K with |lambda| = k
    const SqrtPNumber weight = SqrtPNumber::half_power(p, 1, -twice_sigma * k);
    for (const Weight& lambda : dominant_nonnegative(n, k)) f.coeffs[lambda] = weight;
  }
  return satake_transform(f);
}

HeckeFn convolve(const HeckeFn& f, const HeckeFn& g) {
  require_finite_rank_le2(f, "convolve");
  require_finite_rank_le2(g, "convolve");
  if (f.n != g.n || f.p != g.p) throw DomainError("convolve: rank or prime mismatch");

  HeckeFn out;
  out.n = f.n;
  out.p = f.p;
  for (const auto& [lambda, c] : f.coeffs) {
    for (const auto& [mu, d] : g.coeffs) {
      const SqrtPNumber cd = c * d;
      if (f.n == 1) {
        out.coeffs[{lambda[0] + mu[0]}] += cd;
        continue;
      }
      // (1_{K l K} * 1_{K m K})(varpi^nu) = #{y in K l K / K : y^{-1} varpi^nu in K m K}
      const CosetEnumeration cosets = enumerate_cosets(f.p, lambda);
      const int total = total_degree(lambda) + total_degree(mu);
      for (int nu2 = lambda[1] + mu[1]; 2 * nu2 <= total; ++nu2) {
        const Weight nu = {total - nu2, nu2};
        long long count = 0;
        for (const CosetRep& y : cosets.representatives) {
          if (cartan_type_of_quotient(y, nu, f.p) == mu) ++count;
        }
        if (count != 0) out.coeffs[nu] += SqrtPNumber::integer(f.p, count) * cd;
      }
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

}  // namespace adelic::satake
