#pragma once

#include "spincurve/curve.hpp"

namespace spincurve {

// Coordinate-pair spiral: for S^3, (c1 cos(a1 t), c1 sin(a1 t),
// c2 cos(a2 t), c2 sin(a2 t)); for S^2 a constant first coordinate is
// prepended. Requires sum c_i^2 = 1 and distinct positive a_i.
SampledCurve xi_curve(int sphere_dim, const std::vector<double>& c,
                      const std::vector<double>& a, const Grid& grid = Grid());

// Circle of length c on S^2 traversed m times, identity initial frame;
// c = 2 pi sin(rho), geodesic curvature cot(rho). m may be fractional.
SampledCurve sigma(double c, double m = 1.0, const Grid& grid = Grid());
CurvatureProfile2 sigma_profile(double c, double m = 1.0, const Grid& grid = Grid());
double sigma_curvature(double c);  // cot(asin(c / 2 pi))

// Example curves on S^3 with constant logarithmic derivative
// (pi/2) tridiag(q sqrt3, 2q, q sqrt3), q = 1, 2, 4.
SampledCurve gamma_1_1(const Grid& grid = Grid());
SampledCurve gamma_1_2(const Grid& grid = Grid());
// The q = 4 member in closed-form trigonometric coordinates.
SampledCurve omega3(const Grid& grid = Grid());

// Constant intrinsic profiles of the three curves above.
CurvatureProfile3 gamma_1_1_profile(const Grid& grid = Grid());
CurvatureProfile3 gamma_1_2_profile(const Grid& grid = Grid());
CurvatureProfile3 omega3_profile(const Grid& grid = Grid());

// Logarithmic-derivative matrix (pi/2) tridiag(q sqrt3, 2q, q sqrt3).
Eigen::Matrix4d gamma_1_lambda(double q);

}  // namespace spincurve
