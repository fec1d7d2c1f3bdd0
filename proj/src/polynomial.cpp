#include "qgadget/polynomial.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace qgadget {

Monomial make_monomial(std::vector<Var> vars) {
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

Polynomial Polynomial::constant(Coeff c) {
  Polynomial p;
  p.add_term({}, c);
  return p;
}

Polynomial Polynomial::term(Coeff c, std::vector<Var> vars) {
  Polynomial p;
  p.add_term(std::move(vars), c);
  return p;
}

void Polynomial::add_term(std::vector<Var> vars, Coeff c) {
  if (c == 0) return;
  auto m = make_monomial(std::move(vars));
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(std::move(m), c);
  } else if ((it->second += c) == 0) {
    terms_.erase(it);
  }
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

std::set<Var> Polynomial::variables() const {
  std::set<Var> out;
  for (const auto& [m, c] : terms_) out.insert(m.begin(), m.end());
  return out;
}

std::size_t Polynomial::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

Coeff Polynomial::evaluate(const Assignment& s) const {
  Coeff total = 0;
  for (const auto& [m, c] : terms_) {
    bool on = true;
    for (const auto& v : m) {
      auto it = s.find(v);
      if (it == s.end()) throw Error("evaluate: variable '" + v + "' is not assigned");
      if (it->second == 0) on = false;
    }
    if (on) total += c;
  }
  return total;
}

Polynomial Polynomial::restrict(const Assignment& partial) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<Var> rest;
    bool zero = false;
    for (const auto& v : m) {
      auto it = partial.find(v);
      if (it == partial.end()) {
        rest.push_back(v);
      } else if (it->second == 0) {
        zero = true;
        break;
      }
    }
    if (!zero) out.add_term(std::move(rest), c);
  }
  return out;
}

Polynomial Polynomial::renamed(const std::map<Var, Var>& names) const {
  Polynomial out;
  for (const auto& [m, c] : terms_) {
    std::vector<Var> vars;
    vars.reserve(m.size());
    for (const auto& v : m) {
      auto it = names.find(v);
      vars.push_back(it == names.end() ? v : it->second);
    }
    out.add_term(std::move(vars), c);
  }
  return out;
}

Polynomial Polynomial::scaled(Coeff factor) const {
  Polynomial out;
  if (factor == 0) return out;
  for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * factor);
  return out;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

std::string Polynomial::to_string() const {
  std::vector<std::pair<const Monomial*, Coeff>> order;
  order.reserve(terms_.size());
  for (const auto& [m, c] : terms_) order.emplace_back(&m, c);
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first->size() != b.first->size()) return a.first->size() < b.first->size();
    return *a.first < *b.first;
  });
  std::ostringstream os;
  for (const auto& [m, c] : order) {
    os << c;
    if (!m->empty()) {
      os << " :";
      for (const auto& v : *m) os << ' ' << v;
    }
    os << '\n';
  }
  return os.str();
}

namespace {

std::string_view trim(std::string_view s) {
  const char* ws = " \t\r\f\v";
  auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

}  // namespace

Polynomial parse_pbf(std::string_view text) {
  Polynomial p;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    std::string_view coeff_text = line;
    std::string_view vars_text;
    if (auto colon = line.find(':'); colon != std::string_view::npos) {
      coeff_text = trim(line.substr(0, colon));
      vars_text = line.substr(colon + 1);
      if (vars_text.find(':') != std::string_view::npos) {
        throw ParseError(line_no, "more than one ':' separator");
      }
    }
    if (coeff_text.empty()) throw ParseError(line_no, "missing coefficient");
    std::string_view digits = coeff_text;
    if (digits.front() == '+') digits.remove_prefix(1);
    Coeff c = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), c);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw ParseError(line_no, "coefficient '" + std::string(coeff_text) + "' is not an integer");
    }

    std::vector<Var> vars;
    std::istringstream is{std::string(vars_text)};
    for (std::string v; is >> v;) vars.push_back(std::move(v));
    if (vars.empty() && line.find(':') != std::string_view::npos) {
      throw ParseError(line_no, "':' must be followed by at least one variable");
    }
    p.add_term(std::move(vars), c);
  }
  return p;
}

DensePolynomial::DensePolynomial(const Polynomial& p) {
  auto vs = p.variables();
  vars_.assign(vs.begin(), vs.end());
  *this = DensePolynomial(p, vars_);
}

DensePolynomial::DensePolynomial(const Polynomial& p, std::vector<Var> order)
    : vars_(std::move(order)) {
  if (vars_.size() > 64) throw Error("dense form supports at most 64 variables");
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t mask = 0;
    for (const auto& v : m) mask |= std::uint64_t{1} << index_of(v);
    terms_.emplace_back(mask, c);
  }
}

std::size_t DensePolynomial::index_of(const Var& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) throw Error("variable '" + v + "' missing from dense ordering");
  return static_cast<std::size_t>(it - vars_.begin());
}

Coeff DensePolynomial::evaluate(std::uint64_t state) const {
  Coeff total = 0;
  for (const auto& [mask, c] : terms_) {
    if ((state & mask) == mask) total += c;
  }
  return total;
}

}  // namespace qgadget
