#pragma once

// Template bodies for rational_lp.hpp.

namespace qgadget::lp {

namespace detail {

// Returns false when `visit` asked to stop.
template <class Visit>
bool enumerate_from(LinearSystem& sys, std::size_t k, const std::vector<bool>& nonzero,
                    Visit& visit, SolverStats* stats) {
  const std::size_t n = sys.variables();
  if (k == n) {
    std::vector<Coeff> x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = sys.lower(j);
    if (!sys.satisfied_by(x)) return true;
    return visit(x);
  }
  std::vector<Coeff> obj(n, 0);
  obj[k] = 1;
  auto lo = minimize(sys, obj, stats);
  if (!lo) return true;
  obj[k] = -1;
  auto neg_hi = minimize(sys, obj, stats);
  const Coeff first = lo->ceil();
  const Coeff last = -neg_hi->ceil();
  const Coeff saved_lo = sys.lower(k), saved_hi = sys.upper(k);
  for (Coeff v = first; v <= last; ++v) {
    if (v == 0 && k < nonzero.size() && nonzero[k]) continue;
    sys.set_bounds(k, v, v);
    const bool go_on = enumerate_from(sys, k + 1, nonzero, visit, stats);
    sys.set_bounds(k, saved_lo, saved_hi);
    if (!go_on) return false;
  }
  return true;
}

}  // namespace detail

template <class Visit>
void enumerate_integer_points(LinearSystem sys, const std::vector<bool>& nonzero, Visit&& visit,
                              SolverStats* stats) {
  detail::enumerate_from(sys, 0, nonzero, visit, stats);
}

}  // namespace qgadget::lp
