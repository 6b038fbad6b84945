#pragma once

#include <utility>

#include "spincurve/curve.hpp"

namespace spincurve {

// Pair (h_l, h_r) of imaginary-quaternion tangents of the special form
// (b_l i + d k, b_r i + d k) shared by the two spin factors.
struct ImTangentPair {
    ImaginaryQuaternion h_l, h_r;
};

// Tridiagonal skew checks: Jacobi has positive subdiagonal entries,
// quasi-Jacobi relaxes only the last one.
bool is_jacobi(const Eigen::MatrixXd& m, double tolerance = 1e-6);
bool is_quasi_jacobi(const Eigen::MatrixXd& m, double tolerance = 1e-6);

Eigen::Matrix3d jacobi2(double c1, double c2);
Eigen::Matrix4d jacobi3(double c1, double c2, double c3);

// Frame log-derivative samples Lambda(t) = F(t)^T F'(t), with F' from
// finite differences of the frame entries.
std::vector<Eigen::MatrixXd> log_derivative(const FrameCurve& F);

// Logarithmic-derivative samples of a curvature profile, entries
// (v, v kappa[, v tau]).
std::vector<Eigen::MatrixXd> lambda_samples(const CurvatureProfile2& p);
std::vector<Eigen::MatrixXd> lambda_samples(const CurvatureProfile3& p);

// Spin tangents matched to the tridiagonal entries through the
// differential of the covering map at the identity.
ImaginaryQuaternion spin_tangent3(const Eigen::MatrixXd& lambda);
ImTangentPair spin_tangent4(const Eigen::MatrixXd& lambda);

// Running integration state: SO frame plus the spin lift components.
struct FrameState {
    Eigen::MatrixXd G;
    Quaternion ql{1, 0, 0, 0}, qr{1, 0, 0, 0};
};

// Advances the state across lambda (size steps + 1) with RK4 of step dt
// and per-step re-orthonormalization, appending every post-step frame
// and lift to record. The spin lift is integrated alongside directly in
// S^3 (or S^3 x S^3), never by lifting the SO path.
void advance_frames(FrameState& state, const std::vector<Eigen::MatrixXd>& lambda, double dt,
                    FrameCurve& record);

// RK4 solution of Gamma' = Gamma Lambda(t), Gamma(0) = I.
FrameCurve integrate_frame(const std::vector<Eigen::MatrixXd>& lambda, const Grid& grid);

// RK4 solutions of q' = q h(t), q(0) = 1, renormalized each step.
std::vector<UnitQuaternion> integrate_spin3(const std::vector<ImaginaryQuaternion>& h,
                                            const Grid& grid);
std::vector<Spin4Element> integrate_spin4(const std::vector<ImTangentPair>& h, const Grid& grid);

// Curve recovered from intrinsic data: gamma(t) = Gamma(t) e1.
std::pair<SampledCurve, FrameCurve> curve_from_profile(const CurvatureProfile2& p);
std::pair<SampledCurve, FrameCurve> curve_from_profile(const CurvatureProfile3& p);

}  // namespace spincurve
