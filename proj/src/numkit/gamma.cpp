#include <array>
#include <cmath>

#include "adelic/numkit.hpp"

namespace adelic::numkit {
namespace {

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosCoeffs = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLog2Pi = 0.5 * std::log(2.0 * kPi);

bool is_nonpositive_integer(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

// log Gamma(z) for Re z >= 1/2.
Complex lanczos_log_gamma(Complex z) {
  z -= 1.0;
  Complex series = kLanczosCoeffs[0];
  for (std::size_t k = 1; k < kLanczosCoeffs.size(); ++k) {
    series += kLanczosCoeffs[k] / (z + static_cast<double>(k));
  }
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLog2Pi + (z + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    throw PoleError("gamma: pole at nonpositive integer");
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return kPi / (std::sin(kPi * z) * std::exp(lanczos_log_gamma(1.0 - z)));
  }
  return std::exp(lanczos_log_gamma(z));
}

Complex log_gamma(Complex z) {
  if (z.real() < 0.5) {
    throw DomainError("log_gamma: requires Re z >= 1/2");
  }
  return lanczos_log_gamma(z);
}

}  // namespace adelic::numkit
