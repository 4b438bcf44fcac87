#include <cmath>
#include <sstream>

#include "adelic/satake.hpp"

namespace adelic::satake {
namespace {

Int128 ipow(long long p, int e) {
  Int128 r = 1;
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

std::string rational_to_string(const PPowerRational& r) {
  std::ostringstream os;
  os << adelic::to_string(r.numerator());
  if (r.exponent() > 0) os << "*p^" << r.exponent();
  if (r.exponent() < 0) os << "*p^(" << r.exponent() << ")";
  return os.str();
}

long long common_prime(long long a, long long b) {
  if (a != 0 && b != 0 && a != b) throw DomainError("SqrtPNumber: mixing different primes");
  return a != 0 ? a : b;
}

}  // namespace

PPowerRational::PPowerRational(long long p, Int128 num, int exponent)
    : p_(p), num_(num), exp_(exponent) {
  normalize();
}

void PPowerRational::normalize() {
  if (num_ == 0) {
    exp_ = 0;
    return;
  }
  if (p_ < 2) throw DomainError("PPowerRational: prime required for nonzero value");
  while (num_ % p_ == 0) {
    num_ /= p_;
    ++exp_;
  }
}

double PPowerRational::value() const {
  if (num_ == 0) return 0.0;
  return static_cast<double>(num_) * std::pow(static_cast<double>(p_), exp_);
}

PPowerRational operator+(const PPowerRational& x, const PPowerRational& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const long long p = common_prime(x.p_, y.p_);
  const int e = std::min(x.exp_, y.exp_);
  const Int128 num = x.num_ * ipow(p, x.exp_ - e) + y.num_ * ipow(p, y.exp_ - e);
  return {p, num, e};
}

PPowerRational operator*(const PPowerRational& x, const PPowerRational& y) {
  if (x.is_zero() || y.is_zero()) return {};
  return {common_prime(x.p_, y.p_), x.num_ * y.num_, x.exp_ + y.exp_};
}

SqrtPNumber SqrtPNumber::half_power(long long p, long long c, int half_exponent) {
  SqrtPNumber r;
  r.p_ = p;
  // p^{k/2} = p^{floor(k/2)} * sqrt(p)^{k mod 2}
  const int whole = half_exponent >= 0 ? half_exponent / 2 : -((1 - half_exponent) / 2);
  const bool odd = (half_exponent - 2 * whole) == 1;
  const PPowerRational term(p, c, whole);
  if (odd) {
    r.surd_ = term;
  } else {
    r.rational_ = term;
  }
  return r;
}

void SqrtPNumber::adopt(long long p) { p_ = common_prime(p_, p); }

double SqrtPNumber::value() const {
  return rational_.value() + surd_.value() * std::sqrt(static_cast<double>(p_));
}

SqrtPNumber& SqrtPNumber::operator+=(const SqrtPNumber& y) {
  adopt(y.p_);
  rational_ = rational_ + y.rational_;
  surd_ = surd_ + y.surd_;
  return *this;
}

SqrtPNumber& SqrtPNumber::operator*=(const SqrtPNumber& y) {
  adopt(y.p_);
  // (a + b sqrt p)(c + d sqrt p) = (ac + p bd) + (ad + bc) sqrt p
  const PPowerRational p_one = p_ != 0 ? PPowerRational(p_, 1, 1) : PPowerRational{};
  const PPowerRational a = rational_ * y.rational_ + p_one * (surd_ * y.surd_);
  const PPowerRational b = rational_ * y.surd_ + surd_ * y.rational_;
  rational_ = a;
  surd_ = b;
  return *this;
}

SqrtPNumber SqrtPNumber::operator-() const {
  SqrtPNumber r = *this;
  r.rational_ = -rational_;
  r.surd_ = -surd_;
  return r;
}

bool operator==(const SqrtPNumber& x, const SqrtPNumber& y) {
  if (x.is_zero() && y.is_zero()) return true;
  return x.p_ == y.p_ && x.rational_ == y.rational_ && x.surd_ == y.surd_;
}

std::string SqrtPNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  if (!rational_.is_zero()) os << rational_to_string(rational_);
  if (!surd_.is_zero()) {
    if (!rational_.is_zero()) os << " + ";
    os << rational_to_string(surd_) << "*sqrt(p)";
  }
  return os.str();
}

SymLaurent<Complex> to_complex(const SymLaurent<SqrtPNumber>& g) {
  SymLaurent<Complex> out(g.rank());
  for (const auto& [lambda, c] : g.coefficients()) out.add(lambda, Complex(c.value()));
  return out;
}

}  // namespace adelic::satake
