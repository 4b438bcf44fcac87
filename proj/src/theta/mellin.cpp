#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"
#include "adelic/theta.hpp"

namespace adelic::theta {
namespace {

using numkit::kPi;

constexpr double kMellinTolerance = 1e-12;
constexpr double kPoleExclusion = 0.05;
constexpr double kZeroTolerance = 1e-14;

Complex power(double base, Complex exponent) { return std::exp(exponent * std::log(base)); }

Complex mellin_direct(const AdelicTestFn& f, Complex s) {
  const auto integrand = [&](double t) { return E_eval(f, t) * power(t, s - 1.0); };
  return numkit::integrate_halfline(integrand, {.target_abs_tol = kMellinTolerance}).value;
}

Complex mellin_continued(const AdelicTestFn& f, const AdelicTestFn& f_hat, Complex s) {
  const auto integrand = [&](double x) {
    const double t = 1.0 + x;
    return E_eval(f, t, EvalMode::direct) * power(t, s - 1.0) + E_eval(f_hat, t, EvalMode::direct) * power(t, -s - 1.0);
  };
  const Complex tail = numkit::integrate_halfline(integrand, {.target_abs_tol = kMellinTolerance}).value;
  Complex value = tail;
  const Complex f0 = f.value_at_zero();
  const Complex fhat0 = f_hat.value_at_zero();
  if (std::abs(fhat0) > kZeroTolerance) value += fhat0 / (s - 0.5);
  if (std::abs(f0) > kZeroTolerance) value -= f0 / (s + 0.5);
  return value;
}

}  // namespace

Complex mellin_E(const AdelicTestFn& f, Complex s, MellinRoute route) {
  const AdelicTestFn f_hat = fourier(f);
  const bool f0_vanishes = std::abs(f.value_at_zero()) <= kZeroTolerance;
  const bool fhat0_vanishes = std::abs(f_hat.value_at_zero()) <= kZeroTolerance;
  if (!fhat0_vanishes && std::abs(s - 0.5) < kPoleExclusion) throw PoleError("mellin_E: pole at s + 1/2 = 1");
  if (!f0_vanishes && std::abs(s + 0.5) < kPoleExclusion) throw PoleError("mellin_E: pole at s + 1/2 = 0");

  if (route == MellinRoute::automatic) {
    route = (f0_vanishes && fhat0_vanishes) || s.real() >= 1.0 ? MellinRoute::direct : MellinRoute::continued;
  }
  if (route == MellinRoute::continued) return mellin_continued(f, f_hat, s);

  // E(f)(t) ~ t^{-1/2} f_hat(0) - t^{1/2} f(0) as t -> 0
  if ((!fhat0_vanishes && s.real() <= 0.5) || (!f0_vanishes && s.real() <= -0.5)) {
    throw DomainError("mellin_E: the direct integral diverges at this s; use the continued route");
  }
  return mellin_direct(f, s);
}

Complex mellin_closed_form(const AdelicTestFn& f, Complex s) {
  const Complex w = s + 0.5;
  Complex total = 0.0;
  for (const auto& [g, h] : f.summands) {
    Complex lattice = 0.0;
    for (const auto& term : g.terms) lattice += term.c * power(term.m.value(), -w);
    Complex arch = 0.0;
    for (std::size_t j = 0; j < h.poly.size(); j += 2) {
      if (h.poly[j] == Complex(0.0)) continue;
      const Complex a = 0.5 * (static_cast<double>(j) + w);
      arch += h.poly[j] * power(kPi, -a) * numkit::gamma(a);
    }
    total += lattice * arch;
  }
  return lfun::zeta_em(w) * total;
}

Complex residue_probe(const AdelicTestFn& f, Complex center, double radius, int nodes, MellinRoute route) {
  if (!(radius > 0.0) || nodes < 4) throw DomainError("residue_probe: radius > 0 and nodes >= 4 required");
  std::vector<double> index(static_cast<std::size_t>(nodes));
  for (std::size_t j = 0; j < index.size(); ++j) index[j] = static_cast<double>(j);
  std::vector<Complex> weighted(index.size());
  // each worker writes only its own slots
  numkit::parallel_map(
      [&](double j) {
        const double theta = 2.0 * kPi * j / nodes;
        const Complex e = std::polar(1.0, theta);
        weighted[static_cast<std::size_t>(j)] = mellin_E(f, center + radius * e, route) * e;
        return 0.0;
      },
      index, numkit::thread_budget());
  // (2 pi i)^{-1} \oint F ds with s = c + r e^{i theta}, ds = i r e^{i theta} d theta
  return radius / nodes * numkit::sum_compensated(weighted);
}

}  // namespace adelic::theta
