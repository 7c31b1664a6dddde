#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace csmcalc::poly {

using Rational = mpq_class;
using Exponent = std::vector<unsigned>;

// Exact multivariate polynomial over Q.  Terms with zero coefficient are never
// stored, so the zero polynomial is the empty term map.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<std::string> variables);
  Polynomial(std::vector<std::string> variables, std::map<Exponent, Rational> terms);

  static Polynomial constant(std::vector<std::string> variables, const Rational& c);
  static Polynomial variable(std::vector<std::string> variables, std::size_t index);
  static Polynomial monomial(std::vector<std::string> variables, Exponent e, const Rational& c);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  std::size_t num_variables() const noexcept { return variables_.size(); }
  const std::map<Exponent, Rational>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  // -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  Rational coefficient(const Exponent& e) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  Polynomial derivative(std::size_t var) const;
  // Substitutes a value for one variable and removes it from the variable list.
  Polynomial specialize(std::size_t var, const Rational& value) const;
  // Same polynomial over a longer variable list; new variables are inserted at `position`.
  Polynomial with_variables_inserted(std::size_t position,
                                     const std::vector<std::string>& names) const;

  // Text in the input grammar: parse_polynomial(p.to_string(), p.variables()) == p.
  std::string to_string() const;

 private:
  void require_same_variables(const Polynomial& other) const;

  std::vector<std::string> variables_;
  std::map<Exponent, Rational> terms_;
};

// Grammar: terms joined by '+'/'-' (optional leading sign); a term is a
// coefficient, or [coefficient '*'] factor ('*' factor)*; a factor is a
// variable with optional '^' positive-integer; a coefficient is an integer or
// integer '/' positive-integer.  Whitespace between tokens is ignored.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

// Default homogeneous coordinate names for P^n: x,y,z (n=2), x,y,z,w (n=3), else x0..xn.
std::vector<std::string> default_variables(std::size_t count);

}  // namespace csmcalc::poly
