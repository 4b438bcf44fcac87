#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "adelic/errors.hpp"
#include "adelic/theta.hpp"

namespace adelic::theta {
namespace {

using numkit::kPi;

constexpr double kTailTarget = 1e-17;
constexpr double kRadiusStep = 0.125;

// B(u) = sum_k |p_k| u^k e^{-pi u^2}
double majorant(const ArchTestFn& h, double u) {
  double p = 0.0;
  for (auto it = h.poly.rbegin(); it != h.poly.rend(); ++it) p = p * u + std::abs(*it);
  return p * std::exp(-kPi * u * u);
}

// Smallest R on a fixed 1/8 lattice with weight * sum_{k d > R} B(k d) < kTailTarget.
// Past 2 pi R^2 > deg, B(u) <= B(R) e^{-(2 pi R - deg / R)(u - R)}, so the
// tail is at most B(R) (1 + 1 / (d (2 pi R - deg / R))).
double truncation_radius(const ArchTestFn& h, double d, double weight) {
  const double deg = std::max(0, h.degree());
  double R = std::max(1.0, std::ceil(std::sqrt(deg / (2.0 * kPi)) / kRadiusStep) * kRadiusStep + kRadiusStep);
  for (;; R += kRadiusStep) {
    const double rate = 2.0 * kPi * R - deg / R;
    if (rate <= 0.0) continue;
    if (weight * majorant(h, R) * (1.0 + 1.0 / (d * rate)) < kTailTarget) return R;
  }
}

// Hard cap for a forced direct sum, in either mode.
constexpr double kMaxForcedTerms = 1e8;

struct DirectSum {
  Complex value;
  double radius = 0.0;
  std::size_t terms = 0;
};

// Counted in double so extreme t cannot overflow the conversion.
double direct_term_count(const AdelicTestFn& f, double t) {
  double count = 0.0;
  for (const auto& [g, h] : f.summands) {
    for (const auto& term : g.terms) {
      const double d = term.m.value() * t;
      count += std::floor(truncation_radius(h, d, std::abs(term.c) * std::sqrt(t)) / d);
    }
  }
  return count;
}

// t^{1/2} sum_{gamma in Q^x} f(gamma t). For a term c 1_{m Zhat} (x) h the
// gamma-sum runs over k m, k != 0; the pair +-k leaves twice the even part of h.
DirectSum direct_sum(const AdelicTestFn& f, double t) {
  DirectSum out;
  numkit::CompensatedSum total;
  const double sqrt_t = std::sqrt(t);
  for (const auto& [g, h] : f.summands) {
    ArchTestFn even = h;
    for (std::size_t j = 1; j < even.poly.size(); j += 2) even.poly[j] = 0.0;
    for (const auto& term : g.terms) {
      const double d = term.m.value() * t;
      const double R = truncation_radius(h, d, std::abs(term.c) * sqrt_t);
      if (R / d > kMaxForcedTerms) {
        throw DomainError("E_eval: direct lattice sum would exceed 1e8 terms at this t; use the other mode");
      }
      // the leading term k = 1 is always kept, so tiny values stay relatively accurate
      const auto K = std::max<std::size_t>(1, static_cast<std::size_t>(R / d));
      numkit::CompensatedSum lattice;
      for (std::size_t k = K; k >= 1; --k) lattice += even(static_cast<double>(k) * d);
      total += 2.0 * term.c * lattice.value();
      out.radius = std::max(out.radius, R);
      out.terms += K;
    }
  }
  out.value = sqrt_t * total.value();
  return out;
}

std::string format_complex(Complex z) {
  char buf[80];
  if (z.imag() == 0.0) {
    std::snprintf(buf, sizeof buf, "%.17g", z.real());
  } else {
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  }
  return buf;
}

}  // namespace

EValue E_eval_detailed(const AdelicTestFn& f, double t, EvalMode mode) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("E_eval: t must be positive and finite");
  if (mode == EvalMode::automatic) {
    mode = direct_term_count(f, t) > static_cast<double>(kMaxDirectTerms) ? EvalMode::dual : EvalMode::direct;
  }
  EValue out;
  out.used = mode;
  if (mode == EvalMode::direct) {
    const DirectSum s = direct_sum(f, t);
    out.value = s.value;
    out.radius = s.radius;
    out.terms = s.terms;
    return out;
  }
  const AdelicTestFn f_hat = fourier(f);
  const DirectSum s = direct_sum(f_hat, 1.0 / t);
  out.value = s.value + f_hat.value_at_zero() / std::sqrt(t) - std::sqrt(t) * f.value_at_zero();
  out.radius = s.radius;
  out.terms = s.terms;
  return out;
}

double functional_eq_residual(const AdelicTestFn& f, double t) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("functional_eq_residual: t must be positive and finite");
  const AdelicTestFn f_hat = fourier(f);
  const Complex lhs = direct_sum(f, t).value + std::sqrt(t) * f.value_at_zero();
  const Complex rhs = direct_sum(f_hat, 1.0 / t).value + f_hat.value_at_zero() / std::sqrt(t);
  return std::abs(lhs - rhs);
}

double decay_constant(const AdelicTestFn& f, int n, const std::vector<double>& grid) {
  if (n < 0 || n > kMaxArchDegree) throw DomainError("decay_constant: n must be in [0, 8]");
  if (grid.empty()) throw DomainError("decay_constant: empty grid");
  for (double t : grid) {
    if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("decay_constant: grid points must be positive");
  }
  const auto weighted = numkit::parallel_map(
      [&](double t) { return std::abs(E_eval(f, t, EvalMode::direct)) * std::pow(std::max(t, 1.0 / t), n); },
      grid, numkit::thread_budget());
  return *std::max_element(weighted.begin(), weighted.end());
}

EProfile make_profile(const AdelicTestFn& f, const std::vector<double>& grid) {
  EProfile profile{f, grid, std::vector<Complex>(grid.size())};
  std::vector<double> index(grid.size());
  for (std::size_t i = 0; i < index.size(); ++i) index[i] = static_cast<double>(i);
  // each worker writes only its own slots
  numkit::parallel_map(
      [&](double i) {
        const auto k = static_cast<std::size_t>(i);
        profile.values[k] = E_eval(f, grid[k]);
        return 0.0;
      },
      index, numkit::thread_budget());
  return profile;
}

void write_profile_csv(std::ostream& os, const EProfile& profile) {
  os << "t,E(f)(t)\n";
  for (std::size_t i = 0; i < profile.t.size(); ++i) {
    os << format_complex(profile.t[i]) << ',' << format_complex(profile.values[i]) << '\n';
  }
}

}  // namespace adelic::theta
