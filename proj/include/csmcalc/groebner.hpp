#pragma once

#include <cstddef>
#include <optional>
#include <stop_token>
#include <vector>

#include "csmcalc/polynomial.hpp"

namespace csmcalc::poly {

enum class MonomialOrder {
  GrevLex,
  Lex,
  // Block order: the first variable is compared first, the remaining
  // variables by grevlex.  Eliminates the first variable.
  EliminateFirst,
};

// Three-way comparison of exponent vectors under `order` (>0 when a > b).
int compare_monomials(const Exponent& a, const Exponent& b, MonomialOrder order);

class PolyIdeal {
 public:
  explicit PolyIdeal(std::vector<Polynomial> generators);

  const std::vector<Polynomial>& generators() const noexcept { return generators_; }
  const std::vector<std::string>& variables() const noexcept { return generators_.front().variables(); }

 private:
  std::vector<Polynomial> generators_;
};

// Reduced Groebner basis: elements are monic, sorted by ascending leading monomial.
class GroebnerBasis {
 public:
  GroebnerBasis(std::vector<std::string> variables, MonomialOrder order, std::vector<Polynomial> basis);

  const std::vector<Polynomial>& basis() const noexcept { return basis_; }
  const std::vector<std::string>& variables() const noexcept { return variables_; }
  MonomialOrder order() const noexcept { return order_; }

  bool is_unit_ideal() const;
  // Remainder of full multivariate division by the basis.
  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  std::vector<Exponent> leading_monomials() const;

  friend bool operator==(const GroebnerBasis&, const GroebnerBasis&) = default;

 private:
  std::vector<std::string> variables_;
  MonomialOrder order_;
  std::vector<Polynomial> basis_;
};

Exponent leading_monomial(const Polynomial& p, MonomialOrder order);
Rational leading_coefficient(const Polynomial& p, MonomialOrder order);

// Remainder of p on division by `divisors` (full reduction, divisors in the given order).
Polynomial divide_remainder(const Polynomial& p, const std::vector<Polynomial>& divisors,
                            MonomialOrder order);
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Buchberger's algorithm with the product and chain criteria.  Polls `stop`
// before each critical pair and throws Cancelled when requested.
GroebnerBasis groebner(const PolyIdeal& ideal, MonomialOrder order = MonomialOrder::GrevLex,
                       std::stop_token stop = {});

// dim_Q of Q[x]/I by counting standard monomials; nullopt when infinite.
std::optional<std::size_t> quotient_dim(const GroebnerBasis& g);

// I : (f), via eliminating a tag variable from t*I + (1-t)*f.
PolyIdeal ideal_quotient(const PolyIdeal& ideal, const Polynomial& f, std::stop_token stop = {});
// I : (f)^infinity by iterated quotients until the reduced grevlex basis stabilizes.
PolyIdeal saturate(const PolyIdeal& ideal, const Polynomial& f, std::stop_token stop = {});

// Exact division; throws MathError if `divisor` does not divide `p`.
Polynomial exact_divide(const Polynomial& p, const Polynomial& divisor);

}  // namespace csmcalc::poly
