#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

namespace relplasma {

class RootNotBracketed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct BisectionResult {
  double root = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Bisection on [lo, hi] given f(lo) and f(hi) of opposite sign. Runs until
/// the bracket cannot shrink further in double precision or f hits zero.
inline BisectionResult bisect(const std::function<double(double)>& f, double lo, double hi,
                              double flo, double fhi, int maxIter = 200) {
  if (!(flo * fhi <= 0.0)) throw RootNotBracketed("no sign change on the bracket");
  BisectionResult r;
  if (flo == 0.0) return {lo, 0.0, 0};
  if (fhi == 0.0) return {hi, 0.0, 0};
  for (r.iterations = 0; r.iterations < maxIter; ++r.iterations) {
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi)) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, 0.0, r.iterations + 1};
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
      fhi = fm;
    }
  }
  if (std::abs(flo) <= std::abs(fhi)) {
    r.root = lo;
    r.value = flo;
  } else {
    r.root = hi;
    r.value = fhi;
  }
  return r;
}

}  // namespace relplasma
