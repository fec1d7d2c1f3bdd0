#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qgadget/error.hpp"

namespace qgadget {

using Var = std::string;
using Coeff = std::int64_t;

// A monomial is a sorted set of distinct variables; the empty monomial is the
// constant term.
using Monomial = std::vector<Var>;

// Bits keyed by variable name. Values are 0 or 1.
using Assignment = std::map<Var, int>;

// Sorts and deduplicates, applying x*x = x.
Monomial make_monomial(std::vector<Var> vars);

// Multilinear pseudo-Boolean polynomial with integer coefficients. Never stores
// a zero coefficient, so two polynomials are equal iff their term maps are.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Coeff>;

  Polynomial() = default;

  static Polynomial constant(Coeff c);
  static Polynomial term(Coeff c, std::vector<Var> vars);

  // Adds c * prod(vars); repeated variables collapse.
  void add_term(std::vector<Var> vars, Coeff c);

  const TermMap& terms() const { return terms_; }
  Coeff coefficient(const Monomial& m) const;
  std::set<Var> variables() const;
  std::size_t degree() const;
  bool is_zero() const { return terms_.empty(); }

  Coeff evaluate(const Assignment& s) const;
  // Substitutes the assigned variables and collects what remains.
  Polynomial restrict(const Assignment& partial) const;
  // Renames variables; the map must be injective on variables().
  Polynomial renamed(const std::map<Var, Var>& names) const;
  Polynomial scaled(Coeff factor) const;

  Polynomial& operator+=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Canonical text form: constant first, then monomials by degree and name,
  // one term per line.
  std::string to_string() const;

 private:
  TermMap terms_;
};

// Parses the `<int-coeff> [: var ...]` line format with `#` comments.
Polynomial parse_pbf(std::string_view text);

// Dense, index-based view of a polynomial for enumeration. Variables are the
// sorted variable names (or an explicit order); bit i of a state is variable i.
class DensePolynomial {
 public:
  explicit DensePolynomial(const Polynomial& p);
  DensePolynomial(const Polynomial& p, std::vector<Var> order);

  const std::vector<Var>& variables() const { return vars_; }
  std::size_t size() const { return vars_.size(); }
  Coeff evaluate(std::uint64_t state) const;
  std::size_t index_of(const Var& v) const;

 private:
  std::vector<Var> vars_;
  std::vector<std::pair<std::uint64_t, Coeff>> terms_;
};

}  // namespace qgadget
