// Acceptance checks 1-12. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "adelic/lfun.hpp"
#include "adelic/polya.hpp"
#include "adelic/satake.hpp"
#include "adelic/theta.hpp"
#include "oracles.hpp"

using namespace adelic;
using numkit::Complex;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += "failed: " + what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

std::vector<double> dyadic_grid(int lo, int hi, int per_octave = 1) {
  std::vector<double> grid;
  for (int k = lo * per_octave; k <= hi * per_octave; ++k) grid.push_back(std::exp2(static_cast<double>(k) / per_octave));
  return grid;
}

Outcome poisson_functional_equation() {
  Outcome o;
  const auto f = theta::AdelicTestFn::standard_gaussian();
  double worst = 0.0;
  for (double t : {0.1, 1.0 / 3.0, 2.0, 5.0, 10.0}) worst = std::max(worst, theta::functional_eq_residual(f, t));
  o.require(worst <= 1e-12, "residual " + sci(worst) + " > 1e-12");
  o.note("max residual " + sci(worst));
  return o;
}

Outcome zeta_integral_identity() {
  Outcome o;
  const auto f = theta::AdelicTestFn::standard_gaussian();
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double s = 1.2 + 2.8 * i / 9.0;
    worst = std::max(worst, std::abs(theta::mellin_E(f, s) - lfun::completed_lambda_zeta(s + 0.5)));
  }
  o.require(worst <= 1e-9, "deviation " + sci(worst) + " > 1e-9");
  o.note("max deviation " + sci(worst) + " at 10 points");
  return o;
}

Outcome s0_entirety() {
  Outcome o;
  const auto s0 = theta::make_S0(2);
  // s + 1/2 in {0, 1}
  const double r0 = std::abs(theta::residue_probe(s0, -0.5, 0.3));
  const double r1 = std::abs(theta::residue_probe(s0, 0.5, 0.3));
  const double g1 = std::abs(theta::residue_probe(theta::AdelicTestFn::standard_gaussian(), 0.5, 0.3));
  o.require(r0 <= 1e-8 && r1 <= 1e-8, "S0 probe above 1e-8");
  o.require(g1 >= 1e-3, "Gaussian residue not detected");
  o.note("S0 probes " + sci(r0) + ", " + sci(r1) + "; Gaussian " + sci(g1));
  return o;
}

Outcome radial_normalization() {
  Outcome o;
  int checked = 0;
  for (long long p : {2LL, 3LL}) {
    const auto S = satake::satake_truncated_radial(1, 4, 2, p);
    std::size_t expected = 0;
    for (int k = 0; k <= 4; ++k) {
      for (const auto& lambda : satake::dominant_nonnegative(2, k)) {
        o.require(S.coefficient(lambda) == satake::SqrtPNumber::integer(p, 1), "coefficient != 1");
        ++expected;
        ++checked;
      }
    }
    o.require(S.coefficients().size() == expected, "extra support");
  }
  o.note(std::to_string(checked) + " exact coefficients equal 1");
  return o;
}

Outcome trace_limit() {
  Outcome o;
  const Complex tr = satake::trace_truncated(satake::SatakeParam(2, {0.5, 0.3}), 30);
  const double err = std::abs(tr - 20.0 / 7.0);
  o.require(err <= 1e-8, "error " + sci(err));
  o.note("|trace - 20/7| = " + sci(err));
  return o;
}

Outcome cauchy_identity() {
  Outcome o;
  std::mt19937_64 rng(0xacce5);
  std::uniform_real_distribution<double> u(-1.2, 1.2);
  std::uniform_int_distribution<int> rank(1, 3), degree(0, 6);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> chi;
    const int n = rank(rng);
    for (int j = 0; j < n; ++j) chi.emplace_back(u(rng), u(rng));
    const int d = degree(rng);
    const auto series = satake::local_factor_series(satake::SatakeParam(5, chi), d);
    const auto expected = oracle::inverse_product_series(chi, d);
    for (int k = 0; k <= d; ++k) worst = std::max(worst, std::abs(series[k] - expected[k]));
  }
  o.require(worst <= 1e-12, "deviation " + sci(worst));
  o.note("max deviation " + sci(worst) + " over 20 random parameters");
  return o;
}

Outcome hecke_degree_and_multiplicativity() {
  Outcome o;
  for (long long p : {2LL, 3LL, 5LL}) {
    const auto e = satake::enumerate_cosets(p, {1, 0});
    o.require(static_cast<long long>(e.representatives.size()) == p + 1, "coset count at p = " + std::to_string(p));
  }
  std::mt19937_64 rng(0x4ecce);
  std::uniform_int_distribution<int> coeff(-3, 3), entry(-2, 2);
  auto random_hecke = [&] {
    satake::HeckeFn f;
    f.n = 2;
    f.p = 2;
    for (int t = 0; t < 2; ++t) {
      satake::Weight lambda = {entry(rng), entry(rng)};
      if (lambda[0] < lambda[1]) std::swap(lambda[0], lambda[1]);
      const int c = coeff(rng);
      f.coeffs[lambda] += satake::SqrtPNumber::integer(2, c == 0 ? 1 : c);
    }
    std::erase_if(f.coeffs, [](const auto& kv) { return kv.second.is_zero(); });
    return f;
  };
  for (int trial = 0; trial < 5; ++trial) {
    const auto f = random_hecke();
    const auto g = random_hecke();
    o.require(satake::satake_transform(satake::convolve(f, g)) ==
                  satake::satake_transform(f) * satake::satake_transform(g),
              "multiplicativity on pair " + std::to_string(trial));
  }
  o.note("p + 1 cosets for p = 2, 3, 5; 5 exact products");
  return o;
}

Outcome euler_convergence() {
  Outcome o;
  const auto zeta = lfun::riemann_zeta(lfun::Normalization::unitary);
  const auto delta = lfun::ramanujan_delta(lfun::Normalization::unitary, 20'000);
  double worst_ratio = 0.0;
  for (const auto* L : {&zeta, &delta}) {
    for (const Complex s : {Complex(1.1, 0.0), Complex(1.1, 7.0)}) {
      const auto a = lfun::euler_product_eval(*L, s, 10'000);
      const auto b = lfun::euler_product_eval(*L, s, 20'000);
      const double change = std::abs(b.value - a.value);
      o.require(change <= a.abs_tail_bound, L->label + " change exceeds tail bound");
      worst_ratio = std::max(worst_ratio, change / a.abs_tail_bound);
    }
  }
  o.note("largest change / predicted tail " + sci(worst_ratio));
  return o;
}

Outcome delta_consistency() {
  Outcome o;
  const auto tau = lfun::tau_coefficients(10'000);
  for (long long m = 1; m <= 100; ++m) {
    for (long long n = 1; m * n <= 100; ++n) {
      if (std::gcd(m, n) == 1 && tau[m * n] != tau[m] * tau[n]) o.require(false, "multiplicativity");
    }
  }
  for (long long p : {2LL, 3LL, 5LL, 7LL}) {
    const Int128 p11 = static_cast<Int128>(oracle::ipow(p, 11));
    for (long long pk = p; pk * p * p <= 10'000; pk *= p) {
      // tau(p^{k+1}) = tau(p) tau(p^k) - p^11 tau(p^{k-1})
      if (tau[pk * p] != tau[p] * tau[pk] - p11 * tau[pk / p]) o.require(false, "Hecke recursion at p = " + std::to_string(p));
    }
  }
  for (long long n = 1; n <= 50; ++n) {
    const long long r = static_cast<long long>(((tau[n] % 691) + 691) % 691);
    if (r != oracle::sigma_mod(n, 11, 691)) o.require(false, "mod 691 at n = " + std::to_string(n));
  }
  const auto arithmetic = lfun::ramanujan_delta(lfun::Normalization::arithmetic, 10'000);
  const double e13 = std::abs(lfun::completed_lambda_delta(13.0) - lfun::completed_from_euler(arithmetic, 13.0, 10'000));
  const double sym = std::abs(lfun::completed_lambda_delta(7.3) - lfun::completed_lambda_delta(4.7));
  o.require(e13 <= 1e-6, "Lambda(13) deviation " + sci(e13));
  o.require(sym <= 1e-10, "reflection deviation " + sci(sym));
  o.note("Lambda(13) vs Euler " + sci(e13) + "; |Lambda(7.3) - Lambda(4.7)| " + sci(sym));
  return o;
}

Outcome critical_line_spectrum() {
  Outcome o;
  const polya::CriticalLineFn F(polya::LFunctionKind::zeta);
  const auto zl = polya::scan_zeros(F, 10.0, 26.0);
  o.require(zl.zeros.size() == 3, std::to_string(zl.zeros.size()) + " zeros instead of 3");
  if (zl.zeros.empty()) return o;
  const double expected = oracle::hardy_z_root(14.0, 14.3);
  const double err = std::abs(zl.zeros[0].rho - expected);
  o.require(err <= 1e-6, "first zero off by " + sci(err));
  double worst_zero = 0.0;
  double weakest_mid = INFINITY;
  for (std::size_t i = 0; i < zl.zeros.size(); ++i) {
    worst_zero = std::max(worst_zero, polya::annihilator_residual(F, zl.zeros[i].rho, 0));
    if (i + 1 < zl.zeros.size()) {
      const double mid = 0.5 * (zl.zeros[i].rho + zl.zeros[i + 1].rho);
      weakest_mid = std::min(weakest_mid, polya::annihilator_residual(F, mid, 0));
    }
  }
  o.require(worst_zero <= 1e-8, "residual at a zero " + sci(worst_zero));
  o.require(weakest_mid >= 1e-3, "residual at a midpoint " + sci(weakest_mid));
  struct Row {
    int mult;
    double delta;
    int literal;
    int inclusive;
  };
  const Row rows[] = {{1, 3.0, 0, 1}, {3, 3.0, 1, 1}, {2, 1.5, 0, 0}, {1, 3.5, 0, 1}, {2, 4.0, 1, 2}, {4, 2.5, 1, 1}};
  for (const Row& r : rows) {
    o.require(polya::n_rho(r.mult, r.delta, polya::RuleVariant::literal) == r.literal &&
                  polya::n_rho(r.mult, r.delta, polya::RuleVariant::inclusive) == r.inclusive,
              "n_rho table row (" + std::to_string(r.mult) + ", " + sci(r.delta) + ")");
  }
  o.note("first zero " + std::to_string(zl.zeros[0].rho) + " (oracle gap " + sci(err) + "); residual at zeros <= " +
         sci(worst_zero) + ", at midpoints >= " + sci(weakest_mid) + "; 6 n_rho rows x 2 variants");
  return o;
}

Outcome operator_layer() {
  Outcome o;
  const auto band = polya::BandDiscretization::make(20.0, 0.01);
  std::mt19937_64 rng(0x0be7);
  std::normal_distribution<double> normal;
  double identity = 0.0;
  double laplace = 0.0;
  for (Complex kappa : {Complex(1.0), Complex(-1.0), Complex(2.0), Complex(-2.0), Complex(1.0, 1.0)}) {
    Eigen::VectorXcd v(band.size());
    for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = Complex(normal(rng), normal(rng));
    const Eigen::VectorXcd r = polya::resolvent_apply(band, v, kappa);
    identity = std::max(identity, (polya::generator_apply(band, r) - kappa * r - v).cwiseAbs().maxCoeff());
    laplace = std::max(laplace, (polya::resolvent_laplace(band, v, kappa) - r).cwiseAbs().maxCoeff());
  }
  o.require(identity <= 1e-10, "resolvent identity " + sci(identity));
  o.require(laplace <= 1e-6, "Laplace route " + sci(laplace));
  double worst_ratio = 0.0;
  for (double a : {0.0, 0.5, 1.0, 2.0, 5.0}) {
    for (double delta : {0.0, 1.5, 3.0}) {
      const auto r = polya::norm_bound_check(a, delta, 5, 1);
      o.require(r.measured <= r.bound * (1 + 1e-6), "norm bound at a = " + sci(a) + ", delta = " + sci(delta));
      worst_ratio = std::max(worst_ratio, r.measured / r.bound);
    }
  }
  o.note("identity " + sci(identity) + "; Laplace vs diagonal " + sci(laplace) + "; max measured/bound " +
         sci(worst_ratio));
  return o;
}

Outcome decay_bound() {
  Outcome o;
  double worst_extension = 0.0;
  double worst_refinement = 0.0;
  for (long long p : {2LL, 3LL}) {
    const auto f = theta::make_S0(p);
    for (int n = 0; n <= 6; ++n) {
      const double c = theta::decay_constant(f, n, dyadic_grid(-6, 6));
      o.require(std::isfinite(c) && c > 0.0, "non-finite constant");
      const double wider = theta::decay_constant(f, n, dyadic_grid(-12, 12));
      const double fine = theta::decay_constant(f, n, dyadic_grid(-6, 6, 8));
      const double finer = theta::decay_constant(f, n, dyadic_grid(-6, 6, 32));
      worst_extension = std::max(worst_extension, std::abs(wider - c) / c);
      worst_refinement = std::max(worst_refinement, (finer - fine) / fine);
    }
  }
  o.require(worst_extension <= 1e-12, "constant moves when the grid is widened");
  o.require(worst_refinement <= 0.03, "constant moves under refinement");
  o.note("S0 data p = 2, 3, n <= 6; widening changes " + sci(worst_extension) + ", refinement " +
         sci(worst_refinement));
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double time_limit;  // seconds, 0 when none is stated
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "Poisson functional equation", 1.0, poisson_functional_equation},
      {2, "zeta integral identity", 10.0, zeta_integral_identity},
      {3, "S0 entirety witness", 30.0, s0_entirety},
      {4, "radial Satake normalization", 20.0, radial_normalization},
      {5, "truncated trace limit", 0.0, trace_limit},
      {6, "Cauchy identity for local factors", 0.0, cauchy_identity},
      {7, "Hecke degree and Satake multiplicativity", 0.0, hecke_degree_and_multiplicativity},
      {8, "Euler product convergence at Re s = 1.1", 0.0, euler_convergence},
      {9, "Delta consistency", 0.0, delta_consistency},
      {10, "critical-line zeros and multiplicity rule", 60.0, critical_line_spectrum},
      {11, "resolvent and weighted norm bound", 0.0, operator_layer},
      {12, "theta decay bound", 0.0, decay_bound},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0) {
      outcome.require(seconds < c.time_limit, "runtime over " + std::to_string(static_cast<int>(c.time_limit)) + " s");
    }
    if (!outcome.pass) ++failures;
    std::printf("criterion %2d %s: %s (%s; %.2f s)\n", c.id, outcome.pass ? "PASS" : "FAIL", c.name,
                outcome.detail.c_str(), seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
