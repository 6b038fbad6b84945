#pragma once

#include <optional>
#include <random>

#include "spincurve/curve.hpp"

namespace spincurve {

// Gram-Schmidt frame at one parameter value from the curve and its
// derivatives; the last column completes by the cross-product rule so
// the determinant is +1.
Eigen::MatrixXd frame_from_derivatives(const std::vector<Eigen::VectorXd>& derivs);

// Frenet frames on the grid, with the continuous spin lift started at 1.
FrameCurve frenet_frame(const SampledCurve& curve);

// Frame at an arbitrary parameter (needs an analytic evaluator).
Eigen::MatrixXd frame_at(const SampledCurve& curve, double t);

// Geodesic curvature (and torsion on S^3) from the derivatives.
CurvatureProfile2 curvature_profile2(const SampledCurve& curve);
CurvatureProfile3 curvature_profile3(const SampledCurve& curve);

struct ConvexityWitness {
    bool value = false;
    double witness_t = 0;  // first failing sample when value is false
};

// kappa > 0 on S^2; tau > 0 on S^3 (cross-checked against the sign of
// det(curve, first, second, third derivative)).
ConvexityWitness is_locally_convex(const SampledCurve& curve);

// Monte-Carlo global convexity test over random hyperplanes: transversal
// sign changes of <gamma, v> on (lo, hi), endpoints excluded, must not
// exceed sphere_dim. One-sided: may accept a non-convex curve, never
// rejects a convex one (up to grid resolution).
bool is_convex_arc(const SampledCurve& curve, int trials, unsigned seed = 12345,
                   int lo = 0, int hi = -1);

// Number k of convex arcs separated by identity-frame times, or nullopt.
// Frame-identity hits are located on the grid and refined by golden
// section before acceptance; requires an analytic evaluator.
std::optional<int> multiconvex_multiplicity(const SampledCurve& curve,
                                            std::vector<double>* times = nullptr,
                                            int trials = 2000, unsigned seed = 12345);

double det3(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c);

// x with det(a, b, c, x) = |x|^2 (4-dimensional cross product).
Eigen::Vector4d cross4(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                       const Eigen::Vector4d& c);

}  // namespace spincurve
