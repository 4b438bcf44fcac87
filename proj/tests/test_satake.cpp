#include <doctest.h>

#include <cmath>
#include <random>

#include "adelic/satake.hpp"
#include "oracles.hpp"

using namespace adelic;
using namespace adelic::satake;

namespace {

std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5a7a4e);
  return engine;
}

Complex random_complex(double radius) {
  std::uniform_real_distribution<double> u(-radius, radius);
  Complex z;
  do {
    z = Complex(u(rng()), u(rng()));
  } while (std::abs(z) < 1e-3);
  return z;
}

}  // namespace

TEST_CASE("SqrtPNumber: canonical exact arithmetic") {
  const auto root2 = SqrtPNumber::half_power(2, 1, 1);
  CHECK(root2 * root2 == SqrtPNumber::integer(2, 2));
  // 2 * 2^{-1/2} == 2^{1/2}
  CHECK(SqrtPNumber::half_power(2, 2, -1) == root2);
  CHECK(SqrtPNumber::half_power(3, 9, -4) == SqrtPNumber::integer(3, 1));
  CHECK((root2 + -root2).is_zero());
  CHECK(std::abs(SqrtPNumber::half_power(3, 5, -3).value() - 5.0 / std::pow(3.0, 1.5)) < 1e-15);
  CHECK_THROWS_AS(SqrtPNumber::integer(2, 1) + SqrtPNumber::integer(3, 1), DomainError);
}

TEST_CASE("modulus_delta: examples") {
  // n = 2, a = (p, 1): |p|^1 = 1/2 for p = 2
  const auto d = modulus_delta({1, 0}, 2);
  CHECK(d.exponent == -1);
  CHECK(d.value == doctest::Approx(0.5));
  CHECK(modulus_delta({5}, 7).exponent == 0);
  CHECK(modulus_delta({0, 0, 0}, 3).value == 1.0);
  // n = 3: |a1|^2 |a2|^0 |a3|^{-2}
  CHECK(modulus_delta({2, 1, 0}, 5).exponent == -4);
}

TEST_CASE("enumerate_cosets: Hecke degree matches lattice counting") {
  for (long long p : {2LL, 3LL, 5LL}) {
    const auto cosets = enumerate_cosets(p, {1, 0});
    CHECK(static_cast<long long>(cosets.representatives.size()) == p + 1);
    CHECK(oracle::count_cyclic_index_sublattices(p, 1) == p + 1);
  }
  for (auto [p, k] : {std::pair{2LL, 2}, std::pair{2LL, 3}, std::pair{3LL, 2}}) {
    const auto cosets = enumerate_cosets(p, {k, 0});
    CHECK(static_cast<long long>(cosets.representatives.size()) ==
          oracle::count_cyclic_index_sublattices(p, k));
  }
  // central shifts do not change the count
  CHECK(enumerate_cosets(3, {1, -2}).representatives.size() == enumerate_cosets(3, {3, 0}).representatives.size());
}

TEST_CASE("enumerate_cosets: representatives are pairwise inequivalent") {
  const auto cosets = enumerate_cosets(2, {3, 0});
  const auto& reps = cosets.representatives;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = i + 1; j < reps.size(); ++j) {
      // g_i^{-1} g_j in K  iff  equal diagonals and b_i == b_j mod p^{a}
      const bool same_diag = reps[i].diagonal_exponents == reps[j].diagonal_exponents;
      const long long mod = reps[i].integral(0, 0);
      const bool same_b = (reps[i].integral(0, 1) - reps[j].integral(0, 1)) % mod == 0;
      CHECK_FALSE((same_diag && same_b));
    }
  }
}

TEST_CASE("enumerate_cosets: n = 1 and errors") {
  const auto c = enumerate_cosets(7, {3});
  REQUIRE(c.representatives.size() == 1);
  CHECK(c.representatives[0].diagonal_exponents == std::vector<int>{3});
  CHECK_THROWS_AS(enumerate_cosets(2, {1, 1, 0}), DomainError);
  CHECK_THROWS_AS(enumerate_cosets(2, {0, 1}), DomainError);
  CHECK_THROWS_AS(enumerate_cosets(4, {1, 0}), DomainError);
  CHECK_THROWS_AS(enumerate_cosets(2, {30, 0}), DomainError);
}

TEST_CASE("satake_transform: agrees with the unipotent-integral oracle") {
  for (long long p : {2LL, 3LL}) {
    for (const Weight& lambda : {Weight{1, 0}, Weight{2, 0}, Weight{2, 1}, Weight{3, -1}}) {
      const auto S = satake_transform(HeckeFn::double_coset(p, lambda));
      const int total = lambda[0] + lambda[1];
      for (int mu2 = lambda[1]; 2 * mu2 <= total; ++mu2) {
        const int mu1 = total - mu2;
        const long long count = oracle::unipotent_orbit_count(p, {lambda[0], lambda[1]}, {mu1, mu2}, 3 + mu1 - lambda[1]);
        const double expected = static_cast<double>(count) * std::pow(static_cast<double>(p), 0.5 * (mu2 - mu1));
        CHECK(S.coefficient({mu1, mu2}).value() == doctest::Approx(expected).epsilon(1e-14));
      }
    }
  }
}

TEST_CASE("satake_transform: worked examples") {
  // n = 1: S(1_{p^m Z_p^x}) = e_(m)
  const auto s1 = satake_transform(HeckeFn::double_coset(5, {3}));
  CHECK(s1 == SymLaurent<SqrtPNumber>::orbit({3}, SqrtPNumber::integer(5, 1)));
  // n = 2, p = 2: coefficient p^{1/2} at (1, 0) and nothing else
  const auto s2 = satake_transform(HeckeFn::double_coset(2, {1, 0}));
  CHECK(s2 == SymLaurent<SqrtPNumber>::orbit({1, 0}, SqrtPNumber::half_power(2, 1, 1)));
  // identity of the Hecke algebra
  const auto s3 = satake_transform(HeckeFn::double_coset(3, {0, 0}));
  CHECK(s3 == SymLaurent<SqrtPNumber>::orbit({0, 0}, SqrtPNumber::integer(3, 1)));
  CHECK_THROWS_AS(satake_transform(HeckeFn::radial(2, 2, 1)), DomainError);
}

TEST_CASE("satake_truncated_radial: normalization identity") {
  for (long long p : {2LL, 3LL, 5LL}) {
    for (int d : {0, 2, 4, 6}) {
      const auto S = satake_truncated_radial(1, d, 2, p);
      std::size_t expected_terms = 0;
      for (int k = 0; k <= d; ++k) {
        for (const Weight& lambda : dominant_nonnegative(2, k)) {
          CHECK(S.coefficient(lambda) == SqrtPNumber::integer(p, 1));
          ++expected_terms;
        }
      }
      CHECK(S.coefficients().size() == expected_terms);
    }
  }
  const auto n1 = satake_truncated_radial(0, 3, 1, 7);
  for (int m = 0; m <= 3; ++m) CHECK(n1.coefficient({m}) == SqrtPNumber::integer(7, 1));
  CHECK(n1.coefficients().size() == 4);
}

TEST_CASE("satake_truncated_radial: sigma = 0 is not normalized") {
  const auto S = satake_truncated_radial(0, 2, 2, 2);
  // 2^{-1/2} * 2 cosets = sqrt(2)
  CHECK(S.coefficient({1, 0}) == SqrtPNumber::half_power(2, 1, 1));
  CHECK_FALSE(S.coefficient({1, 0}) == SqrtPNumber::integer(2, 1));
  CHECK(S.coefficient({0, 0}) == SqrtPNumber::integer(2, 1));
}

TEST_CASE("Satake multiplicativity on random finite-support pairs") {
  std::uniform_int_distribution<int> coeff(-3, 3), entry(-2, 2);
  auto random_hecke = [&](long long p) {
    HeckeFn f;
    f.n = 2;
    f.p = p;
    for (int t = 0; t < 2; ++t) {
      Weight lambda = {entry(rng()), entry(rng())};
      if (lambda[0] < lambda[1]) std::swap(lambda[0], lambda[1]);
      int c = coeff(rng());
      if (c == 0) c = 1;
      f.coeffs[lambda] += SqrtPNumber::integer(p, c);
    }
    std::erase_if(f.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return f;
  };
  for (long long p : {2LL, 3LL}) {
    for (int trial = 0; trial < 5; ++trial) {
      const HeckeFn f = random_hecke(p), g = random_hecke(p);
      CHECK(satake_transform(convolve(f, g)) == satake_transform(f) * satake_transform(g));
    }
  }
  // T_p * T_p = T_{p^2} + (p+1) R_p  (classical relation)
  const HeckeFn tp = HeckeFn::double_coset(2, {1, 0});
  const HeckeFn sq = convolve(tp, tp);
  CHECK(sq.coeffs.at({2, 0}) == SqrtPNumber::integer(2, 1));
  CHECK(sq.coeffs.at({1, 1}) == SqrtPNumber::integer(2, 3));
}

TEST_CASE("eval_character: examples and W-invariance") {
  const SatakeParam any(3, {Complex(0.2, 1.0), Complex(-2.0, 0.5)});
  CHECK(eval_character(SymLaurent<Complex>::orbit({0, 0}, 1.0), any) == Complex(1.0));
  const Complex alpha(0.3, 0.4), beta(-1.1, 0.2);
  const auto m10 = SymLaurent<Complex>::orbit({1, 0}, 1.0);
  CHECK(std::abs(eval_character(m10, SatakeParam(2, {alpha, beta})) - (alpha + beta)) < 1e-15);
  const auto S = to_complex(satake_transform(HeckeFn::double_coset(2, {1, 0})));
  CHECK(std::abs(eval_character(S, SatakeParam(2, {1.0, 1.0})) - 2.0 * std::sqrt(2.0)) < 1e-14);
  CHECK_THROWS_AS(eval_character(m10, SatakeParam(2, {1.0})), DomainError);

  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> chi = {random_complex(1.5), random_complex(1.5), random_complex(1.5)};
    SymLaurent<Complex> g(3);
    g.add({2, 0, -1}, Complex(1.0, -2.0));
    g.add({1, 1, 0}, 0.5);
    const Complex base = eval_character(g, SatakeParam(5, chi));
    std::shuffle(chi.begin(), chi.end(), rng());
    CHECK(std::abs(eval_character(g, SatakeParam(5, chi)) - base) <= 1e-12 * (1.0 + std::abs(base)));
  }
}

TEST_CASE("SatakeParam: validation, canonical order, |pi|") {
  CHECK_THROWS_AS(SatakeParam(2, {1.0, 0.0}), DomainError);
  CHECK_THROWS_AS(SatakeParam(2, {}), DomainError);
  CHECK(SatakeParam(3, {2.0, Complex(0, 1)}) == SatakeParam(3, {Complex(0, 1), 2.0}));
  CHECK(SatakeParam(3, {Complex(0.5, 0.0), Complex(0.0, -0.9)}).abs_pi() == doctest::Approx(0.9));
  // |pi_s| = p^{-Re s} |pi|
  const SatakeParam chi(5, {Complex(0.5, 0.5), 0.25});
  CHECK(chi.twist(Complex(1.0, 3.0)).abs_pi() == doctest::Approx(chi.abs_pi() / 5.0));
}

TEST_CASE("local_factor: examples, poles, twist covariance") {
  CHECK(std::abs(local_factor(SatakeParam(2, {1.0}), 1.0) - 2.0) < 1e-15);
  CHECK_THROWS_AS(local_factor(SatakeParam(3, {1.0, 1.0}), 0.0), PoleError);
  const double theta = numkit::kPi / 3.0;
  const SatakeParam unitary(2, {std::polar(1.0, theta), std::polar(1.0, -theta)});
  CHECK(std::abs(local_factor(unitary, 1.0) - 4.0 / 3.0) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const SatakeParam chi(7, {random_complex(1.0), random_complex(1.0), random_complex(1.0)});
    const Complex s(1.5, 2.0 * trial - 10.0), shift(0.3 * trial - 2.0, 1.0);
    const Complex lhs = local_factor(chi, s + shift);
    CHECK(std::abs(lhs - local_factor(chi.twist(shift), s)) <= 1e-12 * std::abs(lhs));
  }
}

TEST_CASE("local_factor_series: examples and Cauchy identity") {
  const Complex a(0.3, -0.2), b(1.5, 0.7);
  const auto s2 = local_factor_series(SatakeParam(2, {a, b}), 2);
  CHECK(std::abs(s2[0] - 1.0) < 1e-15);
  CHECK(std::abs(s2[1] - (a + b)) < 1e-15);
  CHECK(std::abs(s2[2] - (a * a + a * b + b * b)) < 1e-14);
  const Complex c(0.7, 0.1);
  const auto s1 = local_factor_series(SatakeParam(3, {c}), 3);
  for (int k = 0; k <= 3; ++k) CHECK(std::abs(s1[static_cast<std::size_t>(k)] - std::pow(c, k)) < 1e-15);

  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    std::vector<Complex> chi;
    for (int j = 0; j < n; ++j) chi.push_back(random_complex(1.2));
    const auto series = local_factor_series(SatakeParam(11, chi), 6);
    const auto expected = oracle::inverse_product_series(chi, 6);
    for (int k = 0; k <= 6; ++k) {
      CHECK(std::abs(series[static_cast<std::size_t>(k)] - expected[static_cast<std::size_t>(k)]) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(local_factor_series(SatakeParam(2, {1.0}), -1), DomainError);
}

TEST_CASE("trace_truncated: converges to the local factor") {
  CHECK(std::abs(trace_truncated(SatakeParam(2, {0.5}), 20) - 2.0) < 1e-6);
  CHECK(trace_truncated(SatakeParam(2, {0.5, 0.3}), 0) == Complex(1.0));
  CHECK(std::abs(trace_truncated(SatakeParam(2, {0.5, 0.3}), 30) - 20.0 / 7.0) <= 1e-8);
  // the same limit equals local_factor at s = 0
  const SatakeParam chi(3, {Complex(0.2, 0.3), Complex(-0.4, 0.1), 0.35});
  CHECK(std::abs(trace_truncated(chi, 40) - local_factor(chi, 0.0)) < 1e-10);
}

TEST_CASE("dominant_nonnegative enumerates partitions") {
  CHECK(dominant_nonnegative(2, 4).size() == 3);
  CHECK(dominant_nonnegative(3, 4).size() == 4);
  CHECK(dominant_nonnegative(1, 0).size() == 1);
}
