#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "adelic/errors.hpp"
#include "adelic/theta.hpp"

namespace adelic::theta {
namespace {

constexpr int kDescriptorVersion = 1;

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double parse_double(const std::string& text) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::logic_error&) {
  }
  throw DomainError("test-function descriptor: bad number '" + text + "'");
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, sep)) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    out.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
  }
  return out;
}

const std::string& lookup(const std::map<std::string, std::string>& kv, const std::string& key) {
  const auto it = kv.find(key);
  if (it == kv.end()) throw DomainError("test-function descriptor: missing key '" + key + "'");
  return it->second;
}

}  // namespace

// One line per tensor factor:
//   summand.<i>.finite = <re> <im> <m>; ...     (c 1_{m Zhat})
//   summand.<i>.arch = <re> <im>; ...           (coefficients of u^0, u^1, ...)
std::string to_descriptor(const AdelicTestFn& f) {
  std::ostringstream os;
  os << "format = adelic-test-function\n";
  os << "version = " << kDescriptorVersion << '\n';
  os << "summands = " << f.summands.size() << '\n';
  for (std::size_t i = 0; i < f.summands.size(); ++i) {
    const auto& [g, h] = f.summands[i];
    os << "summand." << i << ".finite = ";
    for (std::size_t k = 0; k < g.terms.size(); ++k) {
      if (k) os << "; ";
      os << format_double(g.terms[k].c.real()) << ' ' << format_double(g.terms[k].c.imag()) << ' '
         << g.terms[k].m.to_string();
    }
    os << '\n' << "summand." << i << ".arch = ";
    for (std::size_t k = 0; k < h.poly.size(); ++k) {
      if (k) os << "; ";
      os << format_double(h.poly[k].real()) << ' ' << format_double(h.poly[k].imag());
    }
    os << '\n';
  }
  return os.str();
}

AdelicTestFn from_descriptor(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto eq = line.find(" = ");
    if (eq == std::string::npos) {
      // an empty value leaves "key =" with no trailing space
      if (line.size() >= 2 && line.compare(line.size() - 2, 2, " =") == 0) {
        kv[line.substr(0, line.size() - 2)] = "";
        continue;
      }
      throw DomainError("test-function descriptor: malformed line '" + line + "'");
    }
    kv[line.substr(0, eq)] = line.substr(eq + 3);
  }
  if (lookup(kv, "format") != "adelic-test-function") throw DomainError("test-function descriptor: unexpected format");
  if (lookup(kv, "version") != std::to_string(kDescriptorVersion)) {
    throw DomainError("test-function descriptor: unsupported version");
  }
  const double count = parse_double(lookup(kv, "summands"));
  if (count < 0 || count != std::floor(count)) throw DomainError("test-function descriptor: bad summand count");

  AdelicTestFn f;
  for (std::size_t i = 0; i < static_cast<std::size_t>(count); ++i) {
    const std::string prefix = "summand." + std::to_string(i);
    FiniteTestFn g;
    for (const std::string& item : split(lookup(kv, prefix + ".finite"), ';')) {
      if (item.empty()) continue;
      const auto parts = split(item, ' ');
      if (parts.size() != 3) throw DomainError("test-function descriptor: finite term needs 're im m'");
      g.terms.push_back({{parse_double(parts[0]), parse_double(parts[1])}, Rational::parse(parts[2])});
    }
    ArchTestFn h;
    for (const std::string& item : split(lookup(kv, prefix + ".arch"), ';')) {
      if (item.empty()) continue;
      const auto parts = split(item, ' ');
      if (parts.size() != 2) throw DomainError("test-function descriptor: arch coefficient needs 're im'");
      h.poly.emplace_back(parse_double(parts[0]), parse_double(parts[1]));
    }
    f.summands.emplace_back(std::move(g.normalize()), std::move(h.normalize()));
  }
  return f;
}

}  // namespace adelic::theta
