#include "qgadget/rational_lp.hpp"

#include <gmpxx.h>

#include <limits>
#include <numeric>
#include <set>
#include <tuple>

namespace qgadget::lp {

LinearSystem::LinearSystem(std::size_t n, Coeff lo, Coeff hi) : lo_(n, lo), hi_(n, hi) {
  if (lo > hi) throw Error("linear system: empty variable box");
}

void LinearSystem::add(std::vector<Coeff> a, Relation rel, Coeff b) {
  if (a.size() != variables()) throw Error("linear system: constraint width mismatch");
  rows_.push_back({std::move(a), rel, b});
}

void LinearSystem::set_bounds(std::size_t j, Coeff lo, Coeff hi) {
  lo_.at(j) = lo;
  hi_.at(j) = hi;
}

bool LinearSystem::satisfied_by(const std::vector<Coeff>& x) const {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < lo_[j] || x[j] > hi_[j]) return false;
  }
  for (const auto& r : rows_) {
    Coeff lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += r.a[j] * x[j];
    if ((r.rel == Relation::le && lhs > r.b) || (r.rel == Relation::ge && lhs < r.b) ||
        (r.rel == Relation::eq && lhs != r.b)) {
      return false;
    }
  }
  return true;
}

Coeff Fraction::floor() const {
  Coeff q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Coeff Fraction::ceil() const { return -Fraction{-num, den}.floor(); }

namespace {

struct Overflow {};

// int64 rational with 128-bit intermediates; throws Overflow instead of
// wrapping. Denominator is always positive and the pair is reduced.
class SmallRational {
 public:
  SmallRational() = default;
  SmallRational(Coeff n) : n_(n) {}  // NOLINT: implicit from integers

  bool is_zero() const { return n_ == 0; }
  int sign() const { return (n_ > 0) - (n_ < 0); }

  friend SmallRational operator+(const SmallRational& a, const SmallRational& b) {
    if (a.d_ == 1 && b.d_ == 1) {
      Coeff r;
      if (!__builtin_add_overflow(a.n_, b.n_, &r) && r <= kMax && r >= -kMax) return SmallRational(r);
    }
    const Coeff g = std::gcd(a.d_, b.d_);
    const __int128 num = static_cast<__int128>(a.n_) * (b.d_ / g) +
                         static_cast<__int128>(b.n_) * (a.d_ / g);
    const __int128 den = static_cast<__int128>(a.d_ / g) * b.d_;
    return make(num, den);
  }
  friend SmallRational operator-(const SmallRational& a, const SmallRational& b) {
    return a + SmallRational(-b.n_, b.d_);
  }
  friend SmallRational operator*(const SmallRational& a, const SmallRational& b) {
    if (a.n_ == 0 || b.n_ == 0) return {};
    if (a.d_ == 1 && b.d_ == 1) {
      Coeff r;
      if (!__builtin_mul_overflow(a.n_, b.n_, &r) && r <= kMax && r >= -kMax) return SmallRational(r);
    }
    const Coeff g1 = std::gcd(a.n_, b.d_), g2 = std::gcd(b.n_, a.d_);
    const __int128 num = static_cast<__int128>(a.n_ / g1) * (b.n_ / g2);
    const __int128 den = static_cast<__int128>(a.d_ / g2) * (b.d_ / g1);
    return checked(num, den);
  }
  friend SmallRational operator/(const SmallRational& a, const SmallRational& b) {
    return b.n_ < 0 ? a * SmallRational(-b.d_, -b.n_) : a * SmallRational(b.d_, b.n_);
  }
  friend bool operator<(const SmallRational& a, const SmallRational& b) {
    return static_cast<__int128>(a.n_) * b.d_ < static_cast<__int128>(b.n_) * a.d_;
  }

  Fraction fraction() const { return {n_, d_}; }

 private:
  SmallRational(Coeff n, Coeff d) : n_(n), d_(d) {}

  static constexpr __int128 kMax = std::numeric_limits<Coeff>::max() / 4;

  static SmallRational checked(__int128 num, __int128 den) {
    if (num > kMax || num < -kMax || den > kMax) throw Overflow{};
    return SmallRational(static_cast<Coeff>(num), static_cast<Coeff>(den));
  }
  static SmallRational make(__int128 num, __int128 den) {
    if (num == 0) return {};
    if (num <= kMax && num >= -kMax && den <= kMax) {
      const Coeff n = static_cast<Coeff>(num), d = static_cast<Coeff>(den);
      const Coeff g = std::gcd(n, d);
      return SmallRational(n / g, d / g);
    }
    __int128 a = num < 0 ? -num : num, b = den;
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return checked(num / a, den / a);
  }

  Coeff n_ = 0;
  Coeff d_ = 1;
};

class GmpRational {
 public:
  GmpRational() = default;
  GmpRational(Coeff n) : v_(static_cast<long>(n)) {}  // NOLINT
  explicit GmpRational(mpq_class v) : v_(std::move(v)) {}

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  friend GmpRational operator+(const GmpRational& a, const GmpRational& b) {
    return GmpRational(mpq_class(a.v_ + b.v_));
  }
  friend GmpRational operator-(const GmpRational& a, const GmpRational& b) {
    return GmpRational(mpq_class(a.v_ - b.v_));
  }
  friend GmpRational operator*(const GmpRational& a, const GmpRational& b) {
    return GmpRational(mpq_class(a.v_ * b.v_));
  }
  friend GmpRational operator/(const GmpRational& a, const GmpRational& b) {
    return GmpRational(mpq_class(a.v_ / b.v_));
  }
  friend bool operator<(const GmpRational& a, const GmpRational& b) { return a.v_ < b.v_; }

  Fraction fraction() const {
    if (!v_.get_num().fits_slong_p() || !v_.get_den().fits_slong_p()) {
      throw Error("linear program: optimum does not fit in 64 bits");
    }
    return {v_.get_num().get_si(), v_.get_den().get_si()};
  }

 private:
  mpq_class v_;
};

// Dense two-phase simplex over the shifted variables
// u = x - lo, 0 <= u <= hi - lo.
template <class T>
class Simplex {
 public:
  Simplex(const LinearSystem& sys, SolverStats* stats) : stats_(stats) {
    const std::size_t n = sys.variables();
    n_ = n;
    struct Row {
      std::vector<T> a;
      Relation rel;
      T b;
    };
    std::vector<Row> rows;
    for (const auto& c : sys.constraints()) {
      Row r{std::vector<T>(n), c.rel, T(c.b)};
      for (std::size_t j = 0; j < n; ++j) {
        r.a[j] = T(c.a[j]);
        if (c.a[j] != 0) r.b = r.b - T(c.a[j]) * T(sys.lower(j));
      }
      rows.push_back(std::move(r));
    }
    for (std::size_t j = 0; j < n; ++j) {
      Row r{std::vector<T>(n), Relation::le, T(sys.upper(j) - sys.lower(j))};
      r.a[j] = T(1);
      rows.push_back(std::move(r));
    }
    for (auto& r : rows) {
      if (r.b.sign() < 0) {
        for (auto& v : r.a) v = T(0) - v;
        r.b = T(0) - r.b;
        if (r.rel == Relation::le) r.rel = Relation::ge;
        else if (r.rel == Relation::ge) r.rel = Relation::le;
      }
    }
    m_ = rows.size();
    std::size_t n_slack = 0, n_art = 0;
    for (const auto& r : rows) {
      if (r.rel != Relation::eq) ++n_slack;
      if (r.rel != Relation::le) ++n_art;
    }
    art_begin_ = n_ + n_slack;
    cols_ = art_begin_ + n_art;
    width_ = cols_ + 1;
    t_.assign((m_ + 1) * width_, T(0));
    basis_.assign(m_, 0);
    std::size_t slack = n_, art = art_begin_;
    for (std::size_t i = 0; i < m_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) at(i, j) = rows[i].a[j];
      at(i, cols_) = rows[i].b;
      if (rows[i].rel == Relation::le) {
        at(i, slack) = T(1);
        basis_[i] = slack++;
      } else {
        if (rows[i].rel == Relation::ge) at(i, slack++) = T(-1);
        at(i, art) = T(1);
        basis_[i] = art++;
      }
    }
  }

  bool phase_one() {
    std::vector<T> cost(cols_, T(0));
    for (std::size_t j = art_begin_; j < cols_; ++j) cost[j] = T(1);
    load_objective(cost);
    run(cols_);
    if (!at(m_, cols_).is_zero()) return false;
    // Pivot zero-level artificials out where a structural column allows it.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < art_begin_) continue;
      for (std::size_t j = 0; j < art_begin_; ++j) {
        if (!at(i, j).is_zero()) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Assumes phase_one() succeeded. Returns min of objective . u.
  T minimize(const std::vector<Coeff>& objective) {
    std::vector<T> cost(cols_, T(0));
    for (std::size_t j = 0; j < n_; ++j) cost[j] = T(objective[j]);
    load_objective(cost);
    run(art_begin_);
    return T(0) - at(m_, cols_);
  }

 private:
  T& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }

  void load_objective(const std::vector<T>& cost) {
    for (std::size_t j = 0; j < cols_; ++j) at(m_, j) = cost[j];
    at(m_, cols_) = T(0);
    for (std::size_t i = 0; i < m_; ++i) {
      const T cb = cost[basis_[i]];
      if (cb.is_zero()) continue;
      for (std::size_t j = 0; j <= cols_; ++j) {
        if (!at(i, j).is_zero()) at(m_, j) = at(m_, j) - cb * at(i, j);
      }
    }
  }

  // Dantzig pricing, switching to Bland's rule after a run of degenerate
  // pivots so that cycling is impossible. Columns >= allowed never enter.
  void run(std::size_t allowed) {
    constexpr std::size_t kBlandAfter = 20;
    std::size_t degenerate = 0;
    for (;;) {
      std::size_t enter = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (at(m_, j).sign() >= 0) continue;
        if (enter == allowed) {
          enter = j;
          if (degenerate >= kBlandAfter) break;
        } else if (at(m_, j) < at(m_, enter)) {
          enter = j;
        }
      }
      if (enter == allowed) return;
      std::size_t leave = m_;
      T best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (at(i, enter).sign() <= 0) continue;
        T ratio = at(i, cols_) / at(i, enter);
        if (leave == m_ || ratio < best || (!(best < ratio) && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      // The box rows bound every structural column; slack columns can only be
      // unbounded in directions the box already rules out.
      if (leave == m_) throw Error("linear program: unbounded direction in bounded system");
      degenerate = best.is_zero() ? degenerate + 1 : 0;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    if (stats_) ++stats_->pivots;
    const T inv = T(1) / at(r, c);
    nz_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (at(r, j).is_zero()) continue;
      at(r, j) = at(r, j) * inv;
      nz_.push_back(j);
    }
    for (std::size_t i = 0; i <= m_; ++i) {
      if (i == r) continue;
      const T f = at(i, c);
      if (f.is_zero()) continue;
      for (std::size_t j : nz_) at(i, j) = at(i, j) - f * at(r, j);
    }
    basis_[r] = c;
  }

  SolverStats* stats_;
  std::size_t n_ = 0, m_ = 0, cols_ = 0, width_ = 0, art_begin_ = 0;
  std::vector<T> t_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nz_;
};

// Drops all-zero rows (or reports them infeasible) and duplicate rows, after
// dividing each row by the gcd of its entries where that is exact.
std::optional<LinearSystem> reduced(const LinearSystem& sys) {
  LinearSystem out(sys.variables(), 0, 0);
  for (std::size_t j = 0; j < sys.variables(); ++j) out.set_bounds(j, sys.lower(j), sys.upper(j));
  std::set<std::tuple<std::vector<Coeff>, int, Coeff>> seen;
  for (const auto& c : sys.constraints()) {
    Coeff g = 0;
    for (Coeff v : c.a) g = std::gcd(g, v < 0 ? -v : v);
    if (g == 0) {
      const bool ok = (c.rel == Relation::le && 0 <= c.b) || (c.rel == Relation::ge && 0 >= c.b) ||
                      (c.rel == Relation::eq && c.b == 0);
      if (!ok) return std::nullopt;
      continue;
    }
    std::vector<Coeff> a = c.a;
    Coeff b = c.b;
    if (b % g == 0) {
      for (auto& v : a) v /= g;
      b /= g;
    }
    if (seen.emplace(a, static_cast<int>(c.rel), b).second) out.add(std::move(a), c.rel, b);
  }
  return out;
}

template <class T>
std::optional<Fraction> solve(const LinearSystem& sys, const std::vector<Coeff>* objective,
                              SolverStats* stats) {
  Simplex<T> s(sys, stats);
  if (!s.phase_one()) return std::nullopt;
  if (!objective) return Fraction{0, 1};
  T shift(0);
  for (std::size_t j = 0; j < sys.variables(); ++j) {
    shift = shift + T((*objective)[j]) * T(sys.lower(j));
  }
  return (s.minimize(*objective) + shift).fraction();
}

std::optional<Fraction> dispatch(const LinearSystem& sys, const std::vector<Coeff>* objective,
                                 SolverStats* stats) {
  if (stats) ++stats->solves;
  auto r = reduced(sys);
  if (!r) return std::nullopt;
  try {
    return solve<SmallRational>(*r, objective, stats);
  } catch (const Overflow&) {
    if (stats) ++stats->exact_fallbacks;
    return solve<GmpRational>(*r, objective, stats);
  }
}

}  // namespace

bool feasible(const LinearSystem& sys, SolverStats* stats) {
  return dispatch(sys, nullptr, stats).has_value();
}

std::optional<Fraction> minimize(const LinearSystem& sys, const std::vector<Coeff>& objective,
                                 SolverStats* stats) {
  if (objective.size() != sys.variables()) throw Error("linear program: objective width mismatch");
  return dispatch(sys, &objective, stats);
}

}  // namespace qgadget::lp
