#include <algorithm>
#include <cmath>

#include "adelic/numkit.hpp"

namespace adelic::numkit {

std::vector<double> bracket_and_bisect(const std::function<double(double)>& f, double a, double b,
                                       double step, double tol, unsigned threads) {
  if (!(a < b) || !(step > 0.0) || !(tol > 0.0)) {
    throw DomainError("bracket_and_bisect: requires a < b, step > 0, tol > 0");
  }
  std::vector<double> xs;
  const auto count = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-12));
  xs.reserve(count + 1);
  for (std::size_t i = 0; i < count; ++i) xs.push_back(a + static_cast<double>(i) * step);
  xs.push_back(b);
  const std::vector<double> ys = parallel_map(f, xs, threads);

  std::vector<double> roots;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0.0) {
      roots.push_back(xs[i]);
      continue;
    }
    if (i + 1 == xs.size() || ys[i + 1] == 0.0) continue;
    if ((ys[i] < 0.0) == (ys[i + 1] < 0.0)) continue;

    double lo = xs[i], hi = xs[i + 1];
    double flo = ys[i];
    while (hi - lo > tol) {
      const double mid = 0.5 * (lo + hi);
      const double fm = f(mid);
      if (fm == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((fm < 0.0) == (flo < 0.0)) {
        lo = mid;
        flo = fm;
      } else {
        hi = mid;
      }
    }
    roots.push_back(0.5 * (lo + hi));
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace adelic::numkit
