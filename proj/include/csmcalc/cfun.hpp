#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "csmcalc/milnor.hpp"
#include "csmcalc/scene.hpp"

namespace csmcalc::cfun {

enum class Representation {
  // values[S] is the value of the function on stratum S.
  Stratumwise,
  // values[T] is the coefficient n_T of 1_{closure(T)}.
  Indicator,
};

// Integer-valued function constant on the strata of a scene.
class ConstructibleFunction {
 public:
  ConstructibleFunction(ScenePtr scene, Representation rep, std::vector<std::int64_t> values);
  ConstructibleFunction(ScenePtr scene, Representation rep, const std::map<std::string, std::int64_t>& values);

  static ConstructibleFunction zero(ScenePtr scene, Representation rep = Representation::Stratumwise);
  // 1_X: value 1 on every stratum.
  static ConstructibleFunction one(ScenePtr scene);
  // 1_{closure(id)}.
  static ConstructibleFunction closure_indicator(ScenePtr scene, const std::string& id);

  const ScenePtr& scene() const noexcept { return scene_; }
  Representation representation() const noexcept { return rep_; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }

  // Value on stratum `id` (whatever the representation).
  std::int64_t value(const std::string& id) const;
  std::int64_t value(std::size_t index) const;
  // Indicator coefficient of 1_{closure(index)}.
  std::int64_t indicator_coefficient(std::size_t index) const;

  ConstructibleFunction to_stratumwise() const;
  ConstructibleFunction to_indicator() const;
  // Switches to the other representation.
  ConstructibleFunction converted() const;

  bool is_zero() const;

  ConstructibleFunction operator-() const;
  friend ConstructibleFunction operator+(const ConstructibleFunction& a, const ConstructibleFunction& b);
  friend ConstructibleFunction operator-(const ConstructibleFunction& a, const ConstructibleFunction& b);
  friend ConstructibleFunction operator*(std::int64_t c, const ConstructibleFunction& a);
  // Pointwise product; the result is stratum-wise.
  friend ConstructibleFunction pointwise_product(const ConstructibleFunction& a, const ConstructibleFunction& b);
  // Equal as functions, independent of representation.
  friend bool operator==(const ConstructibleFunction& a, const ConstructibleFunction& b);

 private:
  void require_same_scene(const ConstructibleFunction& other) const;

  ScenePtr scene_;
  Representation rep_;
  std::vector<std::int64_t> values_;
};

// sum_S alpha(S) * chi_c(S).  Throws ValidationError if chi_c is missing on a
// stratum where alpha is nonzero.
std::int64_t euler(const ConstructibleFunction& alpha);

// A stratified map: each source stratum S maps onto target stratum image[S]
// with fibers S ∩ f^{-1}(y) of compactly supported Euler characteristic fiber_chi_c[S].
class SceneMap {
 public:
  SceneMap(ScenePtr source, ScenePtr target, std::vector<std::size_t> image,
           std::vector<std::int64_t> fiber_chi_c);

  static SceneMap identity(const ScenePtr& scene);
  static SceneMap to_point(const ScenePtr& source);
  // Projection X x P^m -> X for a product built by product_with_projective.
  static SceneMap projection(const ScenePtr& product, const ScenePtr& base, int m);

  const ScenePtr& source() const noexcept { return source_; }
  const ScenePtr& target() const noexcept { return target_; }
  std::size_t image(std::size_t s) const { return image_.at(s); }
  std::int64_t fiber_chi_c(std::size_t s) const { return fiber_.at(s); }

 private:
  ScenePtr source_;
  ScenePtr target_;
  std::vector<std::size_t> image_;
  std::vector<std::int64_t> fiber_;
};

// g ∘ f.
SceneMap compose(const SceneMap& g, const SceneMap& f);

// f_*(alpha)(T) = sum over S with f(S) = T of alpha(S) * fiber_chi_c(S).
ConstructibleFunction pushforward(const ConstructibleFunction& alpha, const SceneMap& f);
// f^*(alpha)(S) = alpha(f(S)).
ConstructibleFunction pullback(const ConstructibleFunction& alpha, const SceneMap& f);

struct IsolatedMu {
  ConstructibleFunction mu;
  poly::MilnorResult milnor;
};

// Vanishing-cycle function mu(1_Y) for a hypersurface {F=0} in P^n with
// isolated singularities in the chart.  The scene has a stratum "smooth" and,
// when singular, one merged zero-dimensional stratum "sing" carrying
// (-1)^{n-1} * (total Milnor number).  Euler data is left unset.
IsolatedMu mu_isolated(const poly::Polynomial& F, const chow::AmbientSpace& ambient, std::size_t chart,
                       std::stop_token stop = {});

// Monodromic function on the normal line bundle of X: equal to pi_part(x) on
// nonzero vectors over x and to pi_part(x) + zero_part(x) on the zero section.
class MonodromicCF {
 public:
  MonodromicCF(ConstructibleFunction pi_part, ConstructibleFunction zero_part);

  const ConstructibleFunction& pi_part() const noexcept { return pi_part_; }
  const ConstructibleFunction& zero_part() const noexcept { return zero_part_; }
  std::int64_t value_off_zero(const std::string& id) const { return pi_part_.value(id); }
  std::int64_t value_at_zero(const std::string& id) const { return pi_part_.value(id) + zero_part_.value(id); }

  friend MonodromicCF operator+(const MonodromicCF& a, const MonodromicCF& b);
  friend MonodromicCF operator*(std::int64_t c, const MonodromicCF& a);

 private:
  ConstructibleFunction pi_part_;
  ConstructibleFunction zero_part_;
};

// (pi^* - k_*) mu.
MonodromicCF phi_codim1(const ConstructibleFunction& mu);
// Value on the zero section: pi_part + zero_part.
ConstructibleFunction restrict_to_vertex(const MonodromicCF& phi);

}  // namespace csmcalc::cfun
