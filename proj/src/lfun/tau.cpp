#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "adelic/errors.hpp"
#include "adelic/lfun.hpp"

namespace adelic::lfun {
namespace {

Int128 parse_int128(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) negative = text[i++] == '-';
  if (i == text.size()) throw DomainError("read_coeff_csv: empty integer");
  Int128 v = 0;
  for (; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') throw DomainError("read_coeff_csv: bad integer '" + text + "'");
    v = v * 10 + (text[i] - '0');
  }
  return negative ? -v : v;
}

}  // namespace

CoeffTable tau_coefficients(std::size_t N) {
  if (N > 100'000) throw DomainError("tau_coefficients: N must be <= 1e5");
  CoeffTable table;
  table.a.assign(N + 1, 0);
  if (N == 0) return table;

  // prod (1 - q^m)^3 = sum_k (-1)^k (2k + 1) q^{k(k+1)/2}; the 24th power is its 8th power.
  std::vector<std::pair<std::size_t, Int128>> jacobi;
  for (std::size_t k = 0; k * (k + 1) / 2 < N; ++k) {
    const Int128 c = (k % 2 == 0 ? 1 : -1) * static_cast<Int128>(2 * k + 1);
    jacobi.emplace_back(k * (k + 1) / 2, c);
  }
  std::vector<Int128> series(N, 0);  // coefficients of q^0..q^{N-1}
  for (const auto& [e, c] : jacobi) series[e] = c;
  for (int power = 2; power <= 8; ++power) {
    std::vector<Int128> next(N, 0);
    for (std::size_t i = 0; i < N; ++i) {
      if (series[i] == 0) continue;
      for (const auto& [e, c] : jacobi) {
        if (i + e >= N) break;
        next[i + e] += series[i] * c;
      }
    }
    series = std::move(next);
  }
  for (std::size_t n = 1; n <= N; ++n) table.a[n] = series[n - 1];
  return table;
}

void write_coeff_csv(std::ostream& os, const CoeffTable& table) {
  os << "n,a_n\n";
  for (std::size_t n = 1; n <= table.size(); ++n) os << n << ',' << adelic::to_string(table.a[n]) << '\n';
}

CoeffTable read_coeff_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line) || line != "n,a_n") throw DomainError("read_coeff_csv: expected header 'n,a_n'");
  CoeffTable table;
  table.a.push_back(0);
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw DomainError("read_coeff_csv: missing comma");
    const Int128 n = parse_int128(line.substr(0, comma));
    if (n != static_cast<Int128>(table.a.size())) throw DomainError("read_coeff_csv: indices must run 1..N");
    table.a.push_back(parse_int128(line.substr(comma + 1)));
  }
  return table;
}

}  // namespace adelic::lfun
