#include "csmcalc/milnor.hpp"

#include "csmcalc/error.hpp"

namespace csmcalc::poly {

PolyIdeal jacobian_ideal(const Polynomial& f) {
  if (f.is_constant()) throw ValidationError("Jacobian ideal of a constant polynomial");
  std::vector<Polynomial> partials;
  for (std::size_t i = 0; i < f.num_variables(); ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) partials.push_back(std::move(d));
  }
  return PolyIdeal(std::move(partials));
}

MilnorResult total_milnor_number(const Polynomial& F, std::size_t chart, std::stop_token stop) {
  if (F.is_zero()) throw ValidationError("zero polynomial");
  if (!F.is_homogeneous() || F.total_degree() < 1)
    throw ValidationError("polynomial must be homogeneous of degree >= 1");
  if (chart >= F.num_variables()) throw ValidationError("chart variable out of range");

  MilnorResult result;
  result.chart = chart;

  Polynomial f = F.specialize(chart, 1);
  if (f.is_constant()) throw MathError("singularities outside the chart");
  GroebnerBasis jac = groebner(jacobian_ideal(f), MonomialOrder::GrevLex, stop);
  auto jdim = quotient_dim(jac);
  if (!jdim) throw MathError("non-isolated singularities");

  // No singular point of {F=0} may lie on the hyperplane at infinity:
  // (dF/dx_0, ..., dF/dx_n, x_chart) must cut out only the origin of the cone.
  std::vector<Polynomial> at_infinity;
  for (std::size_t i = 0; i < F.num_variables(); ++i) {
    Polynomial d = F.derivative(i);
    if (!d.is_zero()) at_infinity.push_back(std::move(d));
  }
  at_infinity.push_back(Polynomial::variable(F.variables(), chart));
  if (!quotient_dim(groebner(PolyIdeal(std::move(at_infinity)), MonomialOrder::GrevLex, stop)))
    throw MathError("singularities outside the chart");

  GroebnerBasis sat = groebner(saturate(PolyIdeal(jac.basis()), f, stop), MonomialOrder::GrevLex, stop);
  auto sdim = quotient_dim(sat);
  if (!sdim || *sdim > *jdim) throw MathError("saturation did not produce a finite sub-quotient");

  result.jacobian_dim = *jdim;
  result.off_curve_dim = *sdim;
  result.total_milnor = *jdim - *sdim;
  return result;
}

}  // namespace csmcalc::poly
