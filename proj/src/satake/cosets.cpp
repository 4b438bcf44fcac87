#include "adelic/satake.hpp"

namespace adelic::satake {
namespace {

constexpr long long kMaxCosetIndex = 1LL << 20;

long long ipow(long long p, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

int valuation(long long b, long long p) {
  int v = 0;
  while (b % p == 0) {
    b /= p;
    ++v;
  }
  return v;
}

bool is_small_prime(long long p) {
  if (p < 2 || p > 1'000'003) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

CosetEnumeration enumerate_cosets(long long p, const Weight& lambda) {
  const int n = static_cast<int>(lambda.size());
  if (n < 1 || n > 2) throw DomainError("enumerate_cosets: only n in {1, 2} is supported");
  if (!is_dominant(lambda)) throw DomainError("enumerate_cosets: lambda must be dominant");
  if (!is_small_prime(p)) throw DomainError("enumerate_cosets: p must be a prime");

  CosetEnumeration out;
  out.n = n;
  out.p = p;
  out.lambda = lambda;

  if (n == 1) {
    CosetRep rep;
    rep.integral = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>::Constant(1, 1, 1);
    rep.shift = lambda[0];
    rep.diagonal_exponents = {lambda[0]};
    out.representatives.push_back(std::move(rep));
    out.depth = 1;
    return out;
  }

  // Central shift by p^{lambda_2} reduces to elementary divisors (1, p^k).
  const int shift = lambda[1];
  const int k = lambda[0] - lambda[1];
  if (ipow(p, k) > kMaxCosetIndex) throw DomainError("enumerate_cosets: p^(lambda1-lambda2) too large");
  out.depth = k + 1;

  for (int a = 0; a <= k; ++a) {
    const int c = k - a;
    const long long modulus = ipow(p, a);
    for (long long b = 0; b < modulus; ++b) {
      // [[p^a, b], [0, p^c]] has content p^{min(a, c, v(b))}; keep primitive ones.
      const int vb = b == 0 ? out.depth : valuation(b, p);
      if (std::min({a, c, vb}) != 0) continue;
      CosetRep rep;
      rep.integral.resize(2, 2);
      rep.integral << ipow(p, a), b, 0, ipow(p, c);
      rep.shift = shift;
      rep.diagonal_exponents = {a + shift, c + shift};
      out.representatives.push_back(std::move(rep));
    }
  }
  return out;
}

}  // namespace adelic::satake
