#include "csmcalc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "csmcalc/error.hpp"

namespace csmcalc::poly {

Polynomial::Polynomial(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Polynomial::Polynomial(std::vector<std::string> variables, std::map<Exponent, Rational> terms)
    : variables_(std::move(variables)) {
  for (auto& [e, c] : terms) {
    if (e.size() != variables_.size())
      throw ValidationError("exponent length does not match variable count");
    if (c != 0) terms_.emplace(e, c);
  }
}

Polynomial Polynomial::constant(std::vector<std::string> variables, const Rational& c) {
  Exponent zero(variables.size(), 0);
  return monomial(std::move(variables), std::move(zero), c);
}

Polynomial Polynomial::variable(std::vector<std::string> variables, std::size_t index) {
  Exponent e(variables.size(), 0);
  e.at(index) = 1;
  return monomial(std::move(variables), std::move(e), 1);
}

Polynomial Polynomial::monomial(std::vector<std::string> variables, Exponent e, const Rational& c) {
  Polynomial p(std::move(variables));
  if (e.size() != p.variables_.size())
    throw ValidationError("exponent length does not match variable count");
  if (c != 0) p.terms_.emplace(std::move(e), c);
  return p;
}

bool Polynomial::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& e = terms_.begin()->first;
  return std::all_of(e.begin(), e.end(), [](unsigned a) { return a == 0; });
}

int Polynomial::total_degree() const {
  int best = -1;
  for (const auto& [e, c] : terms_)
    best = std::max(best, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return best;
}

bool Polynomial::is_homogeneous() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int td = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    if (d >= 0 && td != d) return false;
    d = td;
  }
  return true;
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::require_same_variables(const Polynomial& other) const {
  if (variables_ != other.variables_) throw ValidationError("variable-list mismatch");
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_variables(other);
  for (const auto& [e, c] : other.terms_) {
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.require_same_variables(b);
  Polynomial r(a.variables_);
  const std::size_t n = a.variables_.size();
  Exponent e(n);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      auto [it, inserted] = r.terms_.emplace(e, ca * cb);
      if (!inserted) {
        it->second += ca * cb;
        if (it->second == 0) r.terms_.erase(it);
      }
    }
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  if (var >= variables_.size()) throw ValidationError("variable index out of range");
  Polynomial r(variables_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.terms_.emplace(std::move(d), c * e[var]);
  }
  return r;
}

Polynomial Polynomial::specialize(std::size_t var, const Rational& value) const {
  if (var >= variables_.size()) throw ValidationError("variable index out of range");
  std::vector<std::string> vars = variables_;
  vars.erase(vars.begin() + static_cast<std::ptrdiff_t>(var));
  Polynomial r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d.erase(d.begin() + static_cast<std::ptrdiff_t>(var));
    Rational v = c;
    for (unsigned k = 0; k < e[var]; ++k) v *= value;
    r += monomial(vars, std::move(d), v);
  }
  return r;
}

Polynomial Polynomial::with_variables_inserted(std::size_t position,
                                               const std::vector<std::string>& names) const {
  if (position > variables_.size()) throw ValidationError("insert position out of range");
  std::vector<std::string> vars = variables_;
  vars.insert(vars.begin() + static_cast<std::ptrdiff_t>(position), names.begin(), names.end());
  Polynomial r(vars);
  for (const auto& [e, c] : terms_) {
    Exponent d = e;
    d.insert(d.begin() + static_cast<std::ptrdiff_t>(position), names.size(), 0u);
    r.terms_.emplace(std::move(d), c);
  }
  return r;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Highest total degree first, lexicographically descending within a degree.
  std::vector<const std::pair<const Exponent, Rational>*> order;
  for (const auto& t : terms_) order.push_back(&t);
  auto deg = [](const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0u); };
  std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
    auto da = deg(a->first), db = deg(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* t : order) {
    const auto& [e, c] = *t;
    Rational mag = abs(c);
    if (first)
      out << (c < 0 ? "-" : "");
    else
      out << (c < 0 ? " - " : " + ");
    first = false;

    std::vector<std::string> factors;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      factors.push_back(e[i] == 1 ? variables_[i] : variables_[i] + "^" + std::to_string(e[i]));
    }
    if (factors.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial result(vars_);
    skip_ws();
    if (at_end()) throw ParseError("empty expression", pos_);
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      Polynomial t = term();
      result += negative ? -t : t;
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') {
        if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '(')
          throw ParseError("implicit multiplication is not allowed", pos_);
        throw ParseError(std::string("unexpected character '") + peek() + "'", pos_);
      }
      negative = peek() == '-';
      ++pos_;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  mpz_class integer() {
    skip_ws();
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", pos_);
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial term() {
    skip_ws();
    if (at_end()) throw ParseError("expected term", pos_);
    Exponent e(vars_.size(), 0);
    Rational coef = 1;
    bool need_factor = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      mpz_class num = integer();
      mpz_class den = 1;
      skip_ws();
      if (!at_end() && peek() == '/') {
        ++pos_;
        std::size_t at = pos_;
        den = integer();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coef = Rational(num, den);
      coef.canonicalize();
      skip_ws();
      if (at_end() || peek() != '*') return Polynomial::monomial(vars_, e, coef);
      ++pos_;
    }
    while (need_factor) {
      factor(e);
      skip_ws();
      if (!at_end() && peek() == '*')
        ++pos_;
      else
        need_factor = false;
    }
    return Polynomial::monomial(vars_, std::move(e), coef);
  }

  void factor(Exponent& e) {
    skip_ws();
    std::size_t start = pos_;
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      throw ParseError("expected variable", pos_);
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    auto it = std::find(vars_.begin(), vars_.end(), name);
    if (it == vars_.end()) throw ParseError("unknown variable '" + name + "'", start);
    std::size_t index = static_cast<std::size_t>(it - vars_.begin());
    unsigned power = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      if (!at_end() && peek() == '-') throw ParseError("negative exponent", pos_);
      std::size_t at = pos_;
      mpz_class p = integer();
      if (p == 0) throw ParseError("exponent must be positive", at);
      if (!p.fits_uint_p()) throw ParseError("exponent too large", at);
      power = static_cast<unsigned>(p.get_ui());
    }
    e[index] += power;
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables) {
  return Parser(text, variables).run();
}

std::vector<std::string> default_variables(std::size_t count) {
  switch (count) {
    case 1: return {"x"};
    case 2: return {"x", "y"};
    case 3: return {"x", "y", "z"};
    case 4: return {"x", "y", "z", "w"};
    default: break;
  }
  std::vector<std::string> names;
  for (std::size_t i = 0; i < count; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace csmcalc::poly
