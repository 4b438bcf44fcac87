#include <cmath>

#include "adelic/satake.hpp"

namespace adelic::satake {
namespace {

Complex orbit_sum(const Weight& lambda, const std::vector<Complex>& chi) {
  numkit::CompensatedSum acc;
  for_each_orbit_member(lambda, [&](const Weight& w) {
    Complex term = 1.0;
    for (std::size_t j = 0; j < w.size(); ++j) term *= std::pow(chi[j], w[j]);
    acc += term;
  });
  return acc.value();
}

}  // namespace

Complex eval_character(const SymLaurent<Complex>& g, const SatakeParam& chi) {
  if (g.rank() != chi.rank()) throw DomainError("eval_character: rank mismatch");
  numkit::CompensatedSum acc;
  for (const auto& [lambda, c] : g.coefficients()) acc += c * orbit_sum(lambda, chi.entries());
  return acc.value();
}

Complex local_factor(const SatakeParam& chi, Complex s) {
  const Complex p_minus_s = std::exp(-s * std::log(static_cast<double>(chi.prime())));
  Complex inverse = 1.0;
  for (const Complex& c : chi.entries()) {
    const Complex factor = 1.0 - c * p_minus_s;
    if (std::abs(factor) <= 1e-14) throw PoleError("local_factor: 1 - chi_j p^{-s} vanishes");
    inverse *= factor;
  }
  return 1.0 / inverse;
}

std::vector<Complex> local_factor_series(const SatakeParam& chi, int d) {
  if (d < 0) throw DomainError("local_factor_series: degree must be >= 0");
  // product of truncated geometric series sum_k chi_j^k X^k
  std::vector<Complex> series(static_cast<std::size_t>(d) + 1, 0.0);
  series[0] = 1.0;
  for (const Complex& c : chi.entries()) {
    std::vector<Complex> next(series.size(), 0.0);
    for (std::size_t i = 0; i < series.size(); ++i) {
      Complex power = 1.0;
      for (std::size_t k = 0; i + k < series.size(); ++k) {
        next[i + k] += series[i] * power;
        power *= c;
      }
    }
    series = std::move(next);
  }
  return series;
}

Complex trace_truncated(const SatakeParam& chi, int d) {
  if (d < 0) throw DomainError("trace_truncated: degree must be >= 0");
  numkit::CompensatedSum acc;
  for (int k = 0; k <= d; ++k) {
    for (const Weight& lambda : dominant_nonnegative(chi.rank(), k)) {
      acc += orbit_sum(lambda, chi.entries());
    }
  }
  return acc.value();
}

}  // namespace adelic::satake
