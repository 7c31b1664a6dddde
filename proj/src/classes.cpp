#include "csmcalc/classes.hpp"

#include <algorithm>

#include "csmcalc/error.hpp"

namespace csmcalc::classes {

using chow::BundleClass;
using chow::Integer;

ChowClass fulton_johnson(const AmbientSpace& ambient, std::span<const Multidegree> degrees) {
  ChowClass result = chow::tangent_class(ambient).value();
  for (const auto& d : degrees) {
    if (std::all_of(d.begin(), d.end(), [](int a) { return a == 0; })) throw ValidationError("zero multidegree");
    result *= chow::unit_inverse(chow::line_bundle_class(ambient, d)).value();
    result *= chow::divisor_class(ambient, d);
  }
  return result;
}

Shape Shape::point() { return Shape{}; }

Shape Shape::linear(int k) {
  if (k < 0) throw ValidationError("linear subspace dimension must be >= 0");
  Shape s;
  s.kind_ = Kind::Linear;
  s.k_ = k;
  return s;
}

Shape Shape::smooth_ci(std::vector<Multidegree> degrees) {
  if (degrees.empty()) throw ValidationError("complete intersection needs at least one multidegree");
  for (const auto& d : degrees)
    if (d.size() != degrees.front().size()) throw ValidationError("multidegrees must have equal length");
  Shape s;
  s.kind_ = Kind::SmoothCI;
  s.degrees_ = std::move(degrees);
  return s;
}

Shape Shape::product(Shape left, Shape right) {
  Shape s;
  s.kind_ = Kind::Product;
  s.parts_.push_back(std::move(left));
  s.parts_.push_back(std::move(right));
  return s;
}

std::size_t Shape::factor_count() const {
  switch (kind_) {
    case Kind::Point:
    case Kind::Linear:
      return 1;
    case Kind::SmoothCI:
      return degrees_.front().size();
    case Kind::Product:
      return parts_[0].factor_count() + parts_[1].factor_count();
  }
  return 1;
}

ChowClass csm_library(const Shape& shape, const AmbientSpace& ambient) {
  switch (shape.kind_) {
    case Shape::Kind::Point:
      return ChowClass::point(ambient);
    case Shape::Kind::Linear: {
      if (ambient.num_factors() != 1) throw ValidationError("linear shape needs a single-factor ambient");
      const int n = ambient.factor_dim(0);
      if (shape.k_ > n) throw ValidationError("linear subspace larger than the ambient");
      ChowClass h = ChowClass::hyperplane(ambient, 0);
      ChowClass r = ChowClass::monomial(ambient, {n - shape.k_});
      for (int j = 0; j <= shape.k_; ++j) r *= ChowClass::one(ambient) + h;
      return r;
    }
    case Shape::Kind::SmoothCI:
      return fulton_johnson(ambient, shape.degrees_);
    case Shape::Kind::Product: {
      const std::size_t left = shape.parts_[0].factor_count();
      if (left + shape.parts_[1].factor_count() != ambient.num_factors())
        throw ValidationError("product shape does not match the ambient factors");
      const auto& f = ambient.factors();
      AmbientSpace a(std::vector<int>(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(left)));
      AmbientSpace b(std::vector<int>(f.begin() + static_cast<std::ptrdiff_t>(left), f.end()));
      return chow::embed_factors(csm_library(shape.parts_[0], a), ambient, 0) *
             chow::embed_factors(csm_library(shape.parts_[1], b), ambient, left);
    }
  }
  throw ValidationError("unsupported shape");
}

namespace {

const Multidegree& hypersurface_degree(const cfun::StrataScene& scene) {
  if (scene.codim() != 1) throw MathError("this computation requires a codimension-one scene");
  return scene.degrees().front();
}

ChowClass normal_inverse(const cfun::StrataScene& scene) {
  return chow::unit_inverse(chow::line_bundle_class(scene.ambient(), hypersurface_degree(scene))).value();
}

ChowClass needed_closure_csm(const cfun::StrataScene& scene, std::size_t i) {
  auto c = cfun::closure_csm(scene, i);
  if (!c) throw ValidationError("missing csm_class on stratum '" + scene.stratum(i).id + "'");
  return *c;
}

}  // namespace

ChowClass csm_of_function(const cfun::ConstructibleFunction& alpha) {
  const auto& scene = *alpha.scene();
  cfun::ConstructibleFunction ind = alpha.to_indicator();
  ChowClass total(scene.ambient());
  for (std::size_t s = 0; s < scene.size(); ++s) {
    std::int64_t n = ind.values()[s];
    if (n != 0) total += needed_closure_csm(scene, s) * Integer(static_cast<long>(n));
  }
  return total;
}

ChowClass milnor_class(const cfun::ConstructibleFunction& mu) {
  const auto& scene = *mu.scene();
  if (mu.is_zero()) return ChowClass(scene.ambient());
  return normal_inverse(scene) * csm_of_function(mu);
}

ChowClass csm(const cfun::ConstructibleFunction& mu) {
  const auto& scene = *mu.scene();
  return fulton_johnson(scene.ambient(), scene.degrees()) - milnor_class(mu);
}

std::vector<std::pair<std::string, ChowClass>> localization(const cfun::ConstructibleFunction& mu) {
  std::vector<std::pair<std::string, ChowClass>> terms;
  if (mu.is_zero()) return terms;
  const auto& scene = *mu.scene();
  const ChowClass inv = normal_inverse(scene);
  cfun::ConstructibleFunction ind = mu.to_indicator();
  for (std::size_t s = 0; s < scene.size(); ++s) {
    std::int64_t n = ind.values()[s];
    if (n == 0) continue;
    terms.emplace_back(scene.stratum(s).id, inv * needed_closure_csm(scene, s) * Integer(static_cast<long>(n)));
  }
  return terms;
}

ChowClass subbundle_contribution(const ChowClass& csm_closure, const BundleClass& normal, int rank_normal,
                                 const BundleClass& sub, int rank_sub) {
  if (rank_sub < 0 || rank_normal < rank_sub) throw ValidationError("inconsistent ranks");
  const int top = csm_closure.ambient().dim();
  for (int c = rank_normal + 1; c <= top; ++c)
    if (!normal.value().component(c).is_zero()) throw ValidationError("inconsistent ranks: c(N) exceeds its rank");
  for (int c = rank_sub + 1; c <= top; ++c)
    if (!sub.value().component(c).is_zero()) throw ValidationError("inconsistent ranks: c(V) exceeds its rank");
  const int corank = rank_normal - rank_sub;
  ChowClass quotient = normal.value() * chow::unit_inverse(sub).value();
  return quotient.component(corank) * sub.value() * csm_closure;
}

ChowClass zero_section_class(const cfun::MonodromicCF& phi) {
  const auto& scene = *phi.pi_part().scene();
  const AmbientSpace& ambient = scene.ambient();
  const BundleClass normal = chow::line_bundle_class(ambient, hypersurface_degree(scene));
  const BundleClass zero_bundle(ChowClass::one(ambient));
  cfun::ConstructibleFunction pi = phi.pi_part().to_indicator();
  cfun::ConstructibleFunction zero = phi.zero_part().to_indicator();
  ChowClass total(ambient);
  for (std::size_t s = 0; s < scene.size(); ++s) {
    std::int64_t a = pi.values()[s], b = zero.values()[s];
    if (a == 0 && b == 0) continue;
    ChowClass c = needed_closure_csm(scene, s);
    if (a != 0) total += subbundle_contribution(c, normal, 1, normal, 1) * Integer(static_cast<long>(a));
    if (b != 0) total += subbundle_contribution(c, normal, 1, zero_bundle, 0) * Integer(static_cast<long>(b));
  }
  return total;
}

namespace {

CheckResult compare(const ChowClass& lhs, const ChowClass& rhs, std::string detail = {}) {
  ChowClass residual = lhs - rhs;
  bool pass = residual.is_zero();
  return {pass, std::move(residual), std::move(detail)};
}

struct ProductData {
  AmbientSpace ambient;
  std::size_t fiber_factor;
  std::vector<Multidegree> degrees;
};

ProductData product_data(const cfun::StrataScene& scene, int m) {
  if (m < 0) throw ValidationError("m must be >= 0");
  const std::size_t pos = scene.ambient().num_factors();
  std::vector<Multidegree> degrees = scene.degrees();
  for (auto& d : degrees) d.push_back(0);
  return {scene.ambient().with_factor(pos, m), pos, std::move(degrees)};
}

}  // namespace

ChowClass smooth_pullback_milnor(const cfun::ConstructibleFunction& mu, int m) {
  const auto& scene = *mu.scene();
  ProductData p = product_data(scene, m);
  return chow::factor_tangent_class(p.ambient, p.fiber_factor).value() *
         chow::pullback_projection(milnor_class(mu), p.fiber_factor, m);
}

CheckResult verdier_smooth_check(const cfun::ConstructibleFunction& mu, int m) {
  const auto& scene = *mu.scene();
  ProductData p = product_data(scene, m);
  ChowClass lhs = fulton_johnson(p.ambient, p.degrees) - smooth_pullback_milnor(mu, m);
  ChowClass rhs = chow::factor_tangent_class(p.ambient, p.fiber_factor).value() *
                  chow::pullback_projection(csm(mu), p.fiber_factor, m);
  return compare(lhs, rhs);
}

CheckResult defect_codim1_check(const cfun::ConstructibleFunction& mu, const std::optional<ChowClass>& known_csm) {
  const auto& scene = *mu.scene();
  const AmbientSpace& ambient = scene.ambient();
  const ChowClass inv = normal_inverse(scene);
  const ChowClass gysin = chow::divisor_class(ambient, hypersurface_degree(scene)) * chow::tangent_class(ambient).value();
  const ChowClass csm_x = known_csm ? *known_csm : csm(mu);
  ChowClass lhs = inv * gysin - csm_x;
  ChowClass rhs = inv * csm_of_function(mu);
  return compare(lhs, rhs, known_csm ? "c_*(1_X) from supplied strata classes" : "c_*(1_X) = c^FJ - M_0");
}

CheckResult proper_pushdown_check(const cfun::ConstructibleFunction& mu, int m) {
  ProductData p = product_data(*mu.scene(), m);
  ChowClass lhs = chow::pushforward_projection(smooth_pullback_milnor(mu, m), p.fiber_factor);
  Integer fiber_chi = chow::degree(chow::tangent_class(AmbientSpace({m})).value());
  return compare(lhs, milnor_class(mu) * fiber_chi, "generic fiber chi = " + fiber_chi.get_str());
}

CheckResult lci_defect_check(const cfun::ConstructibleFunction& mu, int m) {
  const auto& base = mu.scene();
  ProductData p = product_data(*base, m);
  const Multidegree& d = p.degrees.front();
  hypersurface_degree(*base);

  const ChowClass fiber_tangent = chow::factor_tangent_class(p.ambient, p.fiber_factor).value();
  const ChowClass inv = chow::unit_inverse(chow::line_bundle_class(p.ambient, d)).value();
  const ChowClass relative_tangent = fiber_tangent * inv;
  // f^* = Gysin of the divisor after flat pullback.
  const ChowClass f_star = chow::divisor_class(p.ambient, d) *
                           chow::pullback_projection(chow::tangent_class(base->ambient()).value(), p.fiber_factor, m);
  const ChowClass csm_product = fiber_tangent * chow::pullback_projection(csm(mu), p.fiber_factor, m);
  ChowClass lhs = relative_tangent * f_star - csm_product;

  cfun::ScenePtr product = cfun::product_with_projective(base, m);
  cfun::ConstructibleFunction mu_z = cfun::pullback(mu, cfun::SceneMap::projection(product, base, m));
  ChowClass rhs = inv * csm_of_function(mu_z);
  return compare(lhs, rhs);
}

ResolvedMu resolve_mu(const VarietyInput& input, std::stop_token stop) {
  if (input.mu) {
    if (!input.strata) throw ValidationError("mu values need strata");
    return {cfun::ConstructibleFunction(input.strata, cfun::Representation::Stratumwise, *input.mu), std::nullopt};
  }
  if (input.polynomial) {
    if (!input.chart) throw ValidationError("polynomial needs a chart");
    const int deg = input.polynomial->total_degree();
    if (input.degrees.size() != 1 || input.degrees.front() != Multidegree{deg})
      throw ValidationError("degrees do not match the polynomial degree " + std::to_string(deg));
    cfun::IsolatedMu r = cfun::mu_isolated(*input.polynomial, input.ambient, *input.chart, stop);
    return {std::move(r.mu), r.milnor};
  }
  if (input.declared_smooth) {
    cfun::ScenePtr scene = input.strata ? input.strata : cfun::smooth_scene(input.ambient, input.degrees);
    return {cfun::ConstructibleFunction::zero(scene), std::nullopt};
  }
  throw ValidationError("scene needs polynomial+chart, strata+mu, or smooth: true");
}

namespace {

// c_*(1_X) from the supplied strata classes, when every needed closure has one.
std::optional<ChowClass> strata_csm(const VarietyInput& input) {
  if (!input.strata) return std::nullopt;
  try {
    return csm_of_function(cfun::ConstructibleFunction::one(input.strata));
  } catch (const ValidationError&) {
    return std::nullopt;
  }
}

std::string with_m(const std::string& name, int m) { return name + "[m=" + std::to_string(m) + "]"; }

}  // namespace

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"verdier_smooth", "defect_codim1", "pushdown", "lci"};
  return names;
}

CheckResult run_check(const std::string& name, const VarietyInput& input, const ResolvedMu& resolved, int m) {
  if (name == "verdier_smooth") return verdier_smooth_check(resolved.mu, m);
  if (name == "defect_codim1") return defect_codim1_check(resolved.mu, strata_csm(input));
  if (name == "pushdown") return proper_pushdown_check(resolved.mu, m);
  if (name == "lci") return lci_defect_check(resolved.mu, m);
  throw ValidationError("unknown check '" + name + "'");
}

ClassReport build_report(const VarietyInput& input, const std::vector<int>& ms, std::stop_token stop) {
  ResolvedMu resolved = resolve_mu(input, stop);
  const cfun::ConstructibleFunction& mu = resolved.mu;
  const auto& scene = *mu.scene();
  const bool codim_one = scene.codim() == 1;

  ClassReport report{
      .fulton_johnson = fulton_johnson(scene.ambient(), scene.degrees()),
      .milnor_class = milnor_class(mu),
      .csm = ChowClass(scene.ambient()),
      .euler = 0,
      .localization = localization(mu),
      .checks = {},
      .milnor = resolved.milnor,
  };
  report.csm = report.fulton_johnson - report.milnor_class;
  report.euler = chow::degree(report.csm);

  auto& checks = report.checks;
  checks["report_invariants"] = compare(report.csm, csm(mu));

  ChowClass loc_sum(scene.ambient());
  for (const auto& [id, c] : report.localization) loc_sum += c;
  checks["localization_sum"] = compare(loc_sum, report.milnor_class);

  if (mu.is_zero()) checks["support"] = compare(report.milnor_class, ChowClass(scene.ambient()), "smooth: M_0 = 0");

  if (codim_one) {
    cfun::MonodromicCF phi = cfun::phi_codim1(mu);
    cfun::ConstructibleFunction vertex = cfun::restrict_to_vertex(phi);
    checks["gv5"] = {vertex.is_zero(), ChowClass(scene.ambient()), "restrict_to_vertex(phi_codim1(mu)) = 0"};
    checks["generalized_pp"] = compare(normal_inverse(scene) * zero_section_class(phi), report.milnor_class,
                                       "(1+L)^{-1} k^* c_*(Phi) via subbundle terms");
    bool self = chow::self_intersection_check(scene.ambient(), scene.degrees().front());
    checks["self_intersection"] = {self, ChowClass(scene.ambient()), "k^*k_* = c_1(N)"};
  }

  if (input.strata && input.strata->has_chi_data()) {
    std::int64_t chi = cfun::euler(cfun::ConstructibleFunction::one(input.strata));
    Integer diff = Integer(static_cast<long>(chi)) - report.euler;
    checks["euler_strata"] = {diff == 0, ChowClass::point(scene.ambient()) * diff,
                              "chi from strata = " + std::to_string(chi)};
  }
  std::optional<ChowClass> known = strata_csm(input);
  if (known) checks["csm_strata"] = compare(*known, report.csm, "c_*(1_X) from supplied strata classes");

  if (input.mu && input.polynomial && input.chart) {
    try {
      cfun::IsolatedMu engine = cfun::mu_isolated(*input.polynomial, input.ambient, *input.chart, stop);
      report.milnor = engine.milnor;
      checks["mu_engine"] = compare(csm_of_function(mu), csm_of_function(engine.mu),
                                    "c_*(mu) supplied vs. polynomial engine");
    } catch (const MathError&) {
      // Non-isolated input: the supplied mu stands alone.
    }
  }

  if (codim_one) checks["defect_codim1"] = defect_codim1_check(mu, known);
  for (int m : ms) {
    checks[with_m("verdier_smooth", m)] = verdier_smooth_check(mu, m);
    checks[with_m("pushdown", m)] = proper_pushdown_check(mu, m);
    if (codim_one) checks[with_m("lci", m)] = lci_defect_check(mu, m);
  }
  return report;
}

}  // namespace csmcalc::classes
