#pragma once

#include <cstddef>
#include <stop_token>

#include "csmcalc/groebner.hpp"
#include "csmcalc/polynomial.hpp"

namespace csmcalc::poly {

struct MilnorResult {
  // Sum of Milnor numbers over the singular points of {F=0} in the chart.
  std::size_t total_milnor = 0;
  std::size_t chart = 0;
  // dim of Q[x]/(J : f^inf): critical points of f off the hypersurface.
  std::size_t off_curve_dim = 0;
  // dim of Q[x]/J for the dehomogenized f.
  std::size_t jacobian_dim = 0;
};

// Ideal of all nonzero partial derivatives.  Throws ValidationError for constants.
PolyIdeal jacobian_ideal(const Polynomial& f);

// Total Milnor number of the projective hypersurface {F=0} in the affine chart
// {x_chart != 0}, as dim Q[x]/J - dim Q[x]/(J : f^inf).
//
// Throws MathError when the affine critical locus is positive-dimensional
// ("non-isolated singularities") or when {F=0} is singular on the hyperplane
// x_chart = 0 ("singularities outside the chart").
MilnorResult total_milnor_number(const Polynomial& F, std::size_t chart, std::stop_token stop = {});

}  // namespace csmcalc::poly
