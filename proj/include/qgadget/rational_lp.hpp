#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "qgadget/polynomial.hpp"

namespace qgadget::lp {

enum class Relation { le, ge, eq };

struct Constraint {
  std::vector<Coeff> a;
  Relation rel;
  Coeff b;
};

// Integer-coefficient linear system over box-bounded variables. Feasibility is
// decided over the rationals, in exact arithmetic.
class LinearSystem {
 public:
  LinearSystem(std::size_t n, Coeff lo, Coeff hi);

  std::size_t variables() const { return lo_.size(); }
  const std::vector<Constraint>& constraints() const { return rows_; }
  Coeff lower(std::size_t j) const { return lo_[j]; }
  Coeff upper(std::size_t j) const { return hi_[j]; }

  void add(std::vector<Coeff> a, Relation rel, Coeff b);
  void set_bounds(std::size_t j, Coeff lo, Coeff hi);
  // Backtracking support: truncate to a previously observed size().
  std::size_t size() const { return rows_.size(); }
  void truncate(std::size_t n) { rows_.resize(n); }

  bool satisfied_by(const std::vector<Coeff>& x) const;

 private:
  std::vector<Constraint> rows_;
  std::vector<Coeff> lo_, hi_;
};

struct Fraction {
  Coeff num = 0;
  Coeff den = 1;
  Coeff floor() const;
  Coeff ceil() const;
  friend bool operator==(const Fraction&, const Fraction&) = default;
};

struct SolverStats {
  std::uint64_t solves = 0;
  std::uint64_t pivots = 0;
  std::uint64_t exact_fallbacks = 0;  // reruns in arbitrary precision
};

bool feasible(const LinearSystem& sys, SolverStats* stats = nullptr);

// Minimum of objective . x over the system, or nullopt when infeasible. The box
// bounds keep every feasible system bounded.
std::optional<Fraction> minimize(const LinearSystem& sys, const std::vector<Coeff>& objective,
                                 SolverStats* stats = nullptr);

// Integer points of the bounded polytope in lexicographic order, filtered by
// `accept`; stops early when `visit` returns false. Variables listed in
// `nonzero` skip the value 0.
template <class Visit>
void enumerate_integer_points(LinearSystem sys, const std::vector<bool>& nonzero, Visit&& visit,
                              SolverStats* stats = nullptr);

}  // namespace qgadget::lp

#include "qgadget/rational_lp_impl.hpp"
