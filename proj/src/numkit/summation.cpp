#include <cmath>

#include "adelic/numkit.hpp"

namespace adelic::numkit {
namespace {

void neumaier(double& sum, double& comp, double x) {
  const double t = sum + x;
  if (std::abs(sum) >= std::abs(x)) {
    comp += (sum - t) + x;
  } else {
    comp += (x - t) + sum;
  }
  sum = t;
}

}  // namespace

void CompensatedSum::add(Complex x) {
  neumaier(re_, re_c_, x.real());
  neumaier(im_, im_c_, x.imag());
}

Complex sum_compensated(std::span<const Complex> terms) {
  CompensatedSum acc;
  for (const Complex& x : terms) acc.add(x);
  return acc.value();
}

}  // namespace adelic::numkit
