#include <algorithm>
#include <cmath>
#include <numeric>

#include "adelic/errors.hpp"
#include "adelic/int128.hpp"
#include "adelic/theta.hpp"

namespace adelic::theta {
namespace {

using numkit::kPi;

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long long num, long long den) : num_(num), den_(den) {
  if (den == 0) throw DomainError("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  const long long g = std::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::inverse() const {
  if (num_ == 0) throw DomainError("Rational: inverse of zero");
  return {den_, num_};
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
  try {
    const auto slash = text.find('/');
    std::size_t used = 0;
    const long long num = std::stoll(text.substr(0, slash), &used);
    if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
    if (slash == std::string::npos) return {num, 1};
    const std::string rest = text.substr(slash + 1);
    const long long den = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {num, den};
  } catch (const DomainError&) {
    throw;
  } catch (const std::logic_error&) {
    throw DomainError("Rational: cannot parse '" + text + "'");
  }
}

Rational operator*(const Rational& a, const Rational& b) {
  // cross-reduce first to keep the products small
  const long long g1 = std::gcd(a.num_, b.den_);
  const long long g2 = std::gcd(b.num_, a.den_);
  const long long n1 = g1 ? a.num_ / g1 : a.num_, d2 = g1 ? b.den_ / g1 : b.den_;
  const long long n2 = g2 ? b.num_ / g2 : b.num_, d1 = g2 ? a.den_ / g2 : a.den_;
  return {n1 * n2, d1 * d2};
}

bool operator<(const Rational& a, const Rational& b) {
  return static_cast<Int128>(a.num_) * b.den_ < static_cast<Int128>(b.num_) * a.den_;
}

FiniteTestFn FiniteTestFn::lattice(Rational m, Complex c) {
  FiniteTestFn g;
  g.terms.push_back({c, m});
  return g.normalize();
}

FiniteTestFn& FiniteTestFn::normalize() {
  for (const Term& term : terms) {
    if (!(Rational(0) < term.m)) throw DomainError("FiniteTestFn: lattice scales must be positive");
  }
  std::stable_sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.m < b.m; });
  std::vector<Term> merged;
  for (const Term& term : terms) {
    if (!merged.empty() && merged.back().m == term.m) {
      merged.back().c += term.c;
    } else {
      merged.push_back(term);
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.c == Complex(0.0); });
  terms = std::move(merged);
  return *this;
}

Complex FiniteTestFn::value_at_zero() const {
  Complex v = 0.0;
  for (const Term& t : terms) v += t.c;
  return v;
}

Complex FiniteTestFn::total_integral() const {
  Complex v = 0.0;
  for (const Term& t : terms) v += t.c / t.m.value();
  return v;
}

Complex FiniteTestFn::operator()(const Rational& x) const {
  Complex v = 0.0;
  for (const Term& t : terms) {
    if ((x / t.m).is_integer()) v += t.c;
  }
  return v;
}

FiniteTestFn operator+(FiniteTestFn a, const FiniteTestFn& b) {
  a.terms.insert(a.terms.end(), b.terms.begin(), b.terms.end());
  return a.normalize();
}

bool operator==(const FiniteTestFn& a, const FiniteTestFn& b) {
  if (a.terms.size() != b.terms.size()) return false;
  for (std::size_t i = 0; i < a.terms.size(); ++i) {
    if (!(a.terms[i].m == b.terms[i].m) || a.terms[i].c != b.terms[i].c) return false;
  }
  return true;
}

ArchTestFn ArchTestFn::monomial(int k, Complex c) {
  if (k < 0 || k > kMaxArchDegree) throw DomainError("ArchTestFn: degree must be in [0, 8]");
  ArchTestFn h;
  h.poly.assign(static_cast<std::size_t>(k) + 1, 0.0);
  h.poly.back() = c;
  return h;
}

Complex ArchTestFn::operator()(double u) const {
  Complex p = 0.0;
  for (auto it = poly.rbegin(); it != poly.rend(); ++it) p = p * u + *it;
  return p * std::exp(-kPi * u * u);
}

Complex ArchTestFn::total_integral() const {
  // \int u^k e^{-pi u^2} du = Gamma((k+1)/2) / pi^{(k+1)/2} for even k
  Complex v = 0.0;
  for (std::size_t k = 0; k < poly.size(); k += 2) {
    const double a = 0.5 * static_cast<double>(k + 1);
    v += poly[k] * std::exp(std::lgamma(a) - a * std::log(kPi));
  }
  return v;
}

ArchTestFn& ArchTestFn::normalize() {
  while (!poly.empty() && poly.back() == Complex(0.0)) poly.pop_back();
  if (degree() > kMaxArchDegree) throw DomainError("ArchTestFn: degree must be <= 8");
  return *this;
}

bool operator==(const ArchTestFn& a, const ArchTestFn& b) { return a.poly == b.poly; }

Complex AdelicTestFn::value_at_zero() const {
  Complex v = 0.0;
  for (const auto& [g, h] : summands) v += g.value_at_zero() * h.value_at_zero();
  return v;
}

Complex AdelicTestFn::total_integral() const {
  Complex v = 0.0;
  for (const auto& [g, h] : summands) v += g.total_integral() * h.total_integral();
  return v;
}

bool operator==(const AdelicTestFn& a, const AdelicTestFn& b) { return a.summands == b.summands; }

FiniteTestFn fourier_fin(const FiniteTestFn& g) {
  FiniteTestFn out;
  for (const auto& t : g.terms) out.terms.push_back({t.c / t.m.value(), t.m.inverse()});
  return out.normalize();
}

ArchTestFn fourier_arch(const ArchTestFn& h) {
  if (h.degree() > kMaxArchDegree) throw DomainError("fourier_arch: degree must be <= 8");
  const Complex two_pi_i(0.0, 2.0 * kPi);
  std::vector<Complex> q = {1.0};  // Q_k with F[u^k G] = Q_k G
  std::vector<Complex> out(h.poly.size(), 0.0);
  for (std::size_t k = 0; k < h.poly.size(); ++k) {
    if (k > 0) {
      std::vector<Complex> next(q.size() + 1, 0.0);
      for (std::size_t j = 1; j < q.size(); ++j) next[j - 1] += static_cast<double>(j) * q[j];
      for (std::size_t j = 0; j < q.size(); ++j) next[j + 1] -= 2.0 * kPi * q[j];
      for (Complex& c : next) c /= two_pi_i;
      q = std::move(next);
    }
    for (std::size_t j = 0; j < q.size(); ++j) out[j] += h.poly[k] * q[j];
  }
  ArchTestFn r{out};
  return r.normalize();
}

AdelicTestFn fourier(const AdelicTestFn& f) {
  AdelicTestFn out;
  for (const auto& [g, h] : f.summands) out.summands.emplace_back(fourier_fin(g), fourier_arch(h));
  return out;
}

bool is_S0(const AdelicTestFn& f, double tol) {
  return std::abs(f.value_at_zero()) <= tol && std::abs(fourier(f).value_at_zero()) <= tol;
}

AdelicTestFn make_S0(long long p) {
  if (!is_prime(p)) throw DomainError("make_S0: p must be prime");
  FiniteTestFn g = FiniteTestFn::lattice(1) + FiniteTestFn::lattice(p, -static_cast<double>(p));
  return AdelicTestFn::pure(std::move(g), ArchTestFn::monomial(2));
}

}  // namespace adelic::theta
