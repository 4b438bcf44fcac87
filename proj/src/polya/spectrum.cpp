#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/polya.hpp"

namespace adelic::polya {

std::string to_string(RuleVariant v) { return v == RuleVariant::literal ? "literal" : "inclusive"; }

RuleVariant rule_variant_from_string(const std::string& s) {
  if (s == "literal") return RuleVariant::literal;
  if (s == "inclusive") return RuleVariant::inclusive;
  throw DomainError("unknown rule variant '" + s + "' (expected literal or inclusive)");
}

int n_rho(int mult, double delta, RuleVariant variant) {
  if (!(delta > 1.0) || !std::isfinite(delta)) throw DomainError("n_rho: delta must be > 1");
  if (mult < 1) throw DomainError("n_rho: multiplicity must be >= 1");
  // n = 0 always qualifies since delta - 1 > 0 and mult >= 1
  const int mult_cap = variant == RuleVariant::literal ? mult - 1 : mult;
  int n = 0;
  while (n + 1 <= mult_cap && static_cast<double>(n + 1) < delta - 1.0) ++n;
  return n;
}

PolyaSpectrum build_spectrum(const ZeroList& zeros, double delta, int m_pi, RuleVariant variant) {
  if (!(delta > 1.0)) throw DomainError("build_spectrum: delta must be > 1");
  if (m_pi < 1) throw DomainError("build_spectrum: m_pi must be >= 1");
  PolyaSpectrum spectrum;
  spectrum.delta = delta;
  spectrum.m_pi = m_pi;
  spectrum.variant = variant;
  for (const Zero& z : zeros.zeros) {
    SpectrumEntry e;
    e.rho = z.rho;
    e.mult = z.mult_assumed;
    e.n_rho = n_rho(z.mult_assumed, delta, variant);
    e.eig_mult = m_pi * e.n_rho;
    spectrum.entries.push_back(e);
  }
  return spectrum;
}

}  // namespace adelic::polya
