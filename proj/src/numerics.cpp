#include "sympcool/numerics.hpp"

#include <cmath>

namespace sympcool::numerics {

double find_root(const std::function<double(double)>& f, RootSpec spec) {
  double lo = spec.lo, hi = spec.hi;
  double flo = f(lo), fhi = f(hi);
  if (flo == 0) return lo;
  if (fhi == 0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw BracketError("find_root: no sign change over bracket", flo, fhi);

  double x = lo, fx = flo;
  for (int it = 0; it < spec.max_iter; ++it) {
    // secant proposal from the bracket ends
    double s = hi - fhi * (hi - lo) / (fhi - flo);
    const double mid = 0.5 * (lo + hi);
    if (!(s > lo && s < hi)) s = mid;
    fx = f(s);
    x = s;
    if (fx == 0) return x;
    if ((fx > 0) == (flo > 0)) {
      lo = s;
      flo = fx;
    } else {
      hi = s;
      fhi = fx;
    }
    if (hi - lo <= spec.x_tol) return 0.5 * (lo + hi);
    // a stalled secant end is broken up with plain bisection
    if (it % 2 == 1) {
      const double m = 0.5 * (lo + hi);
      const double fm = f(m);
      if (fm == 0) return m;
      if ((fm > 0) == (flo > 0)) {
        lo = m;
        flo = fm;
      } else {
        hi = m;
        fhi = fm;
      }
      if (hi - lo <= spec.x_tol) return 0.5 * (lo + hi);
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace sympcool::numerics
