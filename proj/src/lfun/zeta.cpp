#include <array>
#include <cmath>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"

namespace adelic::lfun {
namespace {

// B_2, B_4, ..., B_42
constexpr std::array<double, 21> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
    -7709321041217.0 / 510.0,
    2577687858367.0 / 6.0,
    -26315271553053477373.0 / 1919190.0,
    2929993913841559.0 / 6.0,
    -261082718496449122051.0 / 13530.0,
    1520097643918070802691.0 / 1806.0,
};

}  // namespace

ZetaValue zeta_em_detailed(Complex s, int M, int B) {
  if (M < 1) throw DomainError("zeta_em: M must be >= 1");
  if (B < 0 || B > 20) throw DomainError("zeta_em: B must be in [0, 20]");
  if (!(s.real() > -2.0 * B + 1.0)) throw DomainError("zeta_em: requires Re(s) > -2B + 1");
  if (std::abs(s - 1.0) < 1e-14) throw PoleError("zeta_em: pole at s = 1");

  numkit::CompensatedSum sum;
  for (int n = M - 1; n >= 1; --n) sum += std::exp(-s * std::log(static_cast<double>(n)));
  const double logM = std::log(static_cast<double>(M));
  const Complex M_minus_s = std::exp(-s * logM);
  sum += M_minus_s * static_cast<double>(M) / (s - 1.0);
  sum += 0.5 * M_minus_s;

  // rising = s (s+1) ... (s+2k-2), inverse_factorial = 1 / (2k)!, m_power = M^{-s-2k+1}
  Complex rising = s;
  double inverse_factorial = 0.5;
  Complex m_power = M_minus_s / static_cast<double>(M);
  for (int k = 1; k <= B; ++k) {
    sum += kBernoulliEven[static_cast<std::size_t>(k - 1)] * inverse_factorial * rising * m_power;
    rising *= (s + static_cast<double>(2 * k - 1)) * (s + static_cast<double>(2 * k));
    inverse_factorial /= static_cast<double>((2 * k + 1) * (2 * k + 2));
    m_power /= static_cast<double>(M) * static_cast<double>(M);
  }

  // |R_B| <= |s (s+1) ... (s+2B) B_{2B+2} / (2B+2)!| M^{-sigma-2B-1} / (sigma + 2B + 1)
  const double sigma = s.real();
  ZetaValue out;
  out.value = sum.value();
  out.remainder_bound = std::abs(rising * kBernoulliEven[static_cast<std::size_t>(B)] * inverse_factorial) *
                        std::exp(-(sigma + 2.0 * B + 1.0) * logM) / (sigma + 2.0 * B + 1.0);
  return out;
}

}  // namespace adelic::lfun
