#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace csmcalc::chow {

using Integer = mpz_class;
using Exponent = std::vector<int>;
using Multidegree = std::vector<int>;

// P^{n_1} x ... x P^{n_k}.
class AmbientSpace {
 public:
  explicit AmbientSpace(std::vector<int> factors);

  const std::vector<int>& factors() const noexcept { return factors_; }
  std::size_t num_factors() const noexcept { return factors_.size(); }
  int factor_dim(std::size_t i) const { return factors_.at(i); }
  int dim() const;

  AmbientSpace with_factor(std::size_t position, int n) const;
  AmbientSpace without_factor(std::size_t position) const;

  friend bool operator==(const AmbientSpace&, const AmbientSpace&) = default;

 private:
  std::vector<int> factors_;
};

// Element of Z[H_1..H_k]/(H_i^{n_i+1}).  The monomial H^a stands for
// H^a ∩ [ambient], a cycle of dimension dim(ambient) - |a|.
class ChowClass {
 public:
  explicit ChowClass(AmbientSpace ambient);
  ChowClass(AmbientSpace ambient, const std::map<Exponent, Integer>& coefficients);

  static ChowClass one(const AmbientSpace& ambient);
  static ChowClass constant(const AmbientSpace& ambient, const Integer& c);
  static ChowClass hyperplane(const AmbientSpace& ambient, std::size_t factor);
  static ChowClass monomial(const AmbientSpace& ambient, Exponent e, const Integer& c = 1);
  // Class of a point: H_1^{n_1} ... H_k^{n_k}.
  static ChowClass point(const AmbientSpace& ambient);

  const AmbientSpace& ambient() const noexcept { return ambient_; }
  const std::map<Exponent, Integer>& coefficients() const noexcept { return coeffs_; }
  Integer coefficient(const Exponent& e) const;
  bool is_zero() const noexcept { return coeffs_.empty(); }

  // Part of pure codimension `codim` (sum of exponents).
  ChowClass component(int codim) const;

  ChowClass operator-() const;
  ChowClass& operator+=(const ChowClass& other);
  ChowClass& operator-=(const ChowClass& other);
  ChowClass& operator*=(const Integer& c);
  ChowClass& operator*=(const ChowClass& other);

  friend ChowClass operator+(ChowClass a, const ChowClass& b) { return a += b; }
  friend ChowClass operator-(ChowClass a, const ChowClass& b) { return a -= b; }
  friend ChowClass operator*(ChowClass a, const ChowClass& b) { return a *= b; }
  friend ChowClass operator*(ChowClass a, const Integer& c) { return a *= c; }
  friend ChowClass operator*(const Integer& c, ChowClass a) { return a *= c; }
  friend bool operator==(const ChowClass&, const ChowClass&) = default;

  // Human-readable, e.g. "3H + H^2", "-H^2 - 2H^2K"; variables are H, K for
  // at most two factors and H1..Hk otherwise.
  std::string to_string() const;

 private:
  void require_same_ambient(const ChowClass& other) const;
  bool in_box(const Exponent& e) const;

  AmbientSpace ambient_;
  std::map<Exponent, Integer> coeffs_;
};

// A class with constant coefficient 1, such as a total Chern class.
class BundleClass {
 public:
  explicit BundleClass(ChowClass c);

  const ChowClass& value() const noexcept { return value_; }
  operator const ChowClass&() const noexcept { return value_; }

 private:
  ChowClass value_;
};

BundleClass unit_inverse(const BundleClass& u);
// Throws ValidationError when `u` has constant coefficient other than 1.
ChowClass unit_inverse(const ChowClass& u);

// Pushforward to a point: the coefficient of the top monomial.
Integer degree(const ChowClass& x);

// c(T) = prod_i (1 + H_i)^{n_i + 1}.
BundleClass tangent_class(const AmbientSpace& ambient);
// c(T) of the single factor `factor`, as a class on the whole ambient.
BundleClass factor_tangent_class(const AmbientSpace& ambient, std::size_t factor);
// c_1 of O(d_1,..,d_k): sum_i d_i H_i.
ChowClass divisor_class(const AmbientSpace& ambient, const Multidegree& d);
// c(O(d)) = 1 + sum_i d_i H_i.
BundleClass line_bundle_class(const AmbientSpace& ambient, const Multidegree& d);

// Flat pullback along the projection forgetting a new factor P^m inserted at `position`.
ChowClass pullback_projection(const ChowClass& x, std::size_t position, int m);
// Proper pushforward along the projection forgetting factor `position`.
ChowClass pushforward_projection(const ChowClass& x, std::size_t position);

// Places a class on the sub-ambient of factors [offset, offset + x.factors) of `ambient`.
ChowClass embed_factors(const ChowClass& x, const AmbientSpace& ambient, std::size_t offset);

// For X a divisor of multidegree d: the Gysin pullback after pushforward
// (k^* k_*) agrees with capping by c_1(N) on every basis monomial.
bool self_intersection_check(const AmbientSpace& ambient, const Multidegree& d);

}  // namespace csmcalc::chow
