#include <cmath>
#include <map>
#include <sstream>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"

namespace adelic::lfun {
namespace {

constexpr int kDescriptorVersion = 1;

std::string format_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

double parse_double(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw DomainError("descriptor: missing key '" + key + "'");
  try {
    std::size_t used = 0;
    const double v = std::stod(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::logic_error&) {
    throw DomainError("descriptor: bad number for '" + key + "'");
  }
}

const std::string& lookup(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw DomainError("descriptor: missing key '" + key + "'");
  return it->second;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)); }

}  // namespace

std::string to_descriptor(const EulerProduct& L) {
  std::ostringstream os;
  os << "format = euler-product\n";
  os << "version = " << kDescriptorVersion << '\n';
  os << "label = " << L.label << '\n';
  os << "degree = " << L.degree << '\n';
  os << "normalization = " << to_string(L.normalization) << '\n';
  os << "fe_center = " << format_double(L.fe_center) << '\n';
  os << "fe_sign = " << L.fe_sign << '\n';
  os << "arithmetic_shift = " << format_double(L.arithmetic_shift) << '\n';
  os << "gamma.base = " << format_double(L.gamma_factor.base) << '\n';
  os << "gamma.exponent_scale = " << format_double(L.gamma_factor.exponent_scale) << '\n';
  os << "gamma.exponent_shift = " << format_double(L.gamma_factor.exponent_shift) << '\n';
  os << "gamma.terms = " << L.gamma_factor.terms.size() << '\n';
  for (std::size_t i = 0; i < L.gamma_factor.terms.size(); ++i) {
    os << "gamma.term." << i << ".scale = " << format_double(L.gamma_factor.terms[i].scale) << '\n';
    os << "gamma.term." << i << ".shift = " << format_double(L.gamma_factor.terms[i].shift) << '\n';
  }
  return os.str();
}

EulerProduct from_descriptor(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) throw DomainError("descriptor: malformed line '" + line + "'");
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  if (lookup(kv, "format") != "euler-product") throw DomainError("descriptor: unexpected format");
  if (parse_double(kv, "version") != kDescriptorVersion) throw DomainError("descriptor: unsupported version");

  const Normalization normalization = normalization_from_string(lookup(kv, "normalization"));
  const std::string& label = lookup(kv, "label");
  EulerProduct L;
  if (label == "zeta") {
    L = riemann_zeta(normalization);
  } else if (label == "delta") {
    L = ramanujan_delta(normalization);
  } else {
    throw DomainError("descriptor: unknown label '" + label + "'");
  }

  // The stored fields must agree with the rebuilt instance.
  const GammaFactor& g = L.gamma_factor;
  bool ok = parse_double(kv, "degree") == L.degree && parse_double(kv, "fe_sign") == L.fe_sign &&
            close(parse_double(kv, "fe_center"), L.fe_center) &&
            close(parse_double(kv, "arithmetic_shift"), L.arithmetic_shift) &&
            close(parse_double(kv, "gamma.base"), g.base) &&
            close(parse_double(kv, "gamma.exponent_scale"), g.exponent_scale) &&
            close(parse_double(kv, "gamma.exponent_shift"), g.exponent_shift) &&
            parse_double(kv, "gamma.terms") == static_cast<double>(g.terms.size());
  for (std::size_t i = 0; ok && i < g.terms.size(); ++i) {
    const std::string prefix = "gamma.term." + std::to_string(i);
    ok = close(parse_double(kv, prefix + ".scale"), g.terms[i].scale) &&
         close(parse_double(kv, prefix + ".shift"), g.terms[i].shift);
  }
  if (!ok) throw DomainError("descriptor: fields disagree with the '" + label + "' instance");
  return L;
}

}  // namespace adelic::lfun
