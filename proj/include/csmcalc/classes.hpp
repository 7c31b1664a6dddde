#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stop_token>
#include <string>
#include <utility>
#include <vector>

#include "csmcalc/cfun.hpp"
#include "csmcalc/chow.hpp"
#include "csmcalc/milnor.hpp"

namespace csmcalc::classes {

using chow::AmbientSpace;
using chow::ChowClass;
using chow::Multidegree;

// c(T_ambient) * prod_j (1 + L_j)^{-1} * prod_j L_j, L_j = sum_i d_ji H_i:
// the Fulton-Johnson class of a complete intersection, pushed to the ambient.
ChowClass fulton_johnson(const AmbientSpace& ambient, std::span<const Multidegree> degrees);

// Smooth shapes whose CSM class is c(T) ∩ [shape].
class Shape {
 public:
  enum class Kind { Point, Linear, SmoothCI, Product };

  static Shape point();
  // Linear P^k in a single factor P^n.
  static Shape linear(int k);
  static Shape smooth_ci(std::vector<Multidegree> degrees);
  static Shape product(Shape left, Shape right);

  Kind kind() const noexcept { return kind_; }
  // Number of ambient factors the shape occupies inside a product.
  std::size_t factor_count() const;

 private:
  friend ChowClass csm_library(const Shape&, const AmbientSpace&);

  Kind kind_ = Kind::Point;
  int k_ = 0;
  std::vector<Multidegree> degrees_;
  std::vector<Shape> parts_;
};

ChowClass csm_library(const Shape& shape, const AmbientSpace& ambient);

// (1 + L)^{-1} * sum_S n_S csm(closure S), n_S the indicator coefficients of mu.
// Requires a codimension-one scene unless mu vanishes.
ChowClass milnor_class(const cfun::ConstructibleFunction& mu);
// c_*(alpha) = sum_S n_S csm(closure S) for the indicator coefficients n_S.
ChowClass csm_of_function(const cfun::ConstructibleFunction& alpha);
// c_*(1_X) = c^FJ - M_0.
ChowClass csm(const cfun::ConstructibleFunction& mu);

// Per-component terms (1 + L)^{-1} * n_S * csm(closure S); they sum to milnor_class.
std::vector<std::pair<std::string, ChowClass>> localization(const cfun::ConstructibleFunction& mu);

// i_*(c^d((N|S)/V) ∩ c(V) ∩ c_*(1_S)) for a subbundle V of N|S of corank
// d = rank_normal - rank_sub, with c((N|S)/V) = c(N|S) * c(V)^{-1}.
ChowClass subbundle_contribution(const ChowClass& csm_closure, const chow::BundleClass& normal, int rank_normal,
                                 const chow::BundleClass& sub, int rank_sub);

// k^* c_*(Phi) for a monodromic function on the normal line bundle: the pi
// part is the full fiber (corank 0) and the zero part the zero subbundle (corank 1).
ChowClass zero_section_class(const cfun::MonodromicCF& phi);

struct CheckResult {
  bool pass = false;
  // lhs - rhs.
  ChowClass residual{AmbientSpace({0})};
  std::string detail;
};

// M_0(X x P^m) = c(T P^m) * pr^* M_0(X).
ChowClass smooth_pullback_milnor(const cfun::ConstructibleFunction& mu, int m);

// c_*(1_{X x P^m}) against c(T P^m) * pr^* c_*(1_X).
CheckResult verdier_smooth_check(const cfun::ConstructibleFunction& mu, int m);
// (1+L)^{-1} L c(T) - c_*(1_X) against (1+L)^{-1} c_*(mu).  When `known_csm`
// is given it is used for c_*(1_X) instead of c^FJ - M_0.
CheckResult defect_codim1_check(const cfun::ConstructibleFunction& mu,
                                const std::optional<ChowClass>& known_csm = std::nullopt);
// pr_* M_0(X x P^m) against chi(P^m) * M_0(X).
CheckResult proper_pushdown_check(const cfun::ConstructibleFunction& mu, int m);
// For f : X x P^m -> X, the divisor X x P^m in ambient x P^m composed with the
// projection: c(T_f) f^* c(T_ambient) - c_*(1_{X x P^m}) against
// (1+L)^{-1} c_*(f^* mu).
CheckResult lci_defect_check(const cfun::ConstructibleFunction& mu, int m);

struct VarietyInput {
  AmbientSpace ambient{std::vector<int>{1}};
  std::vector<Multidegree> degrees;
  std::optional<poly::Polynomial> polynomial;
  std::optional<std::size_t> chart;
  // User-supplied stratification (may be null).
  cfun::ScenePtr strata;
  // User-supplied mu(1_Y), stratum-wise values on `strata`.
  std::optional<std::map<std::string, std::int64_t>> mu;
  bool declared_smooth = false;
};

struct ResolvedMu {
  cfun::ConstructibleFunction mu;
  std::optional<poly::MilnorResult> milnor;
};

// Chooses mu from the input: user-supplied values, the polynomial engine, or
// zero for a smooth declaration.
ResolvedMu resolve_mu(const VarietyInput& input, std::stop_token stop = {});

struct ClassReport {
  ChowClass fulton_johnson;
  ChowClass milnor_class;
  ChowClass csm;
  chow::Integer euler;
  std::vector<std::pair<std::string, ChowClass>> localization;
  std::map<std::string, CheckResult> checks;
  std::optional<poly::MilnorResult> milnor;
};

// Check names accepted by run_check / build_report.
const std::vector<std::string>& check_names();

// Runs a named check (verdier_smooth, defect_codim1, pushdown, lci) with parameter m.
CheckResult run_check(const std::string& name, const VarietyInput& input, const ResolvedMu& resolved, int m);

// Full report: the classes, localization, the structural checks, and each
// named check for every m in `ms` (recorded as "<name>[m=<m>]").
ClassReport build_report(const VarietyInput& input, const std::vector<int>& ms = {1}, std::stop_token stop = {});

}  // namespace csmcalc::classes
