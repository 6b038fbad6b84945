#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "spincurve/errors.hpp"
#include "spincurve/quaternion.hpp"

namespace spincurve {

// Uniform grid t_i = i/n, i = 0..n.
struct Grid {
    int n = 1024;

    Grid() = default;
    explicit Grid(int n_) : n(n_) {
        if (n < 16) throw PreconditionError("Grid: need at least 16 samples");
    }
    double t(int i) const { return static_cast<double>(i) / n; }
    int size() const { return n + 1; }
    bool operator==(const Grid& o) const { return n == o.n; }
};

// Analytic curve description: evaluator(t, order) returns the order-th
// derivative at t (order 0 is the point itself).
using CurveEvaluator = std::function<Eigen::VectorXd(double, int)>;

// Curve on S^2 (sphere_dim 2, ambient R^3) or S^3 (sphere_dim 3, R^4),
// sampled on a grid; if eval is set, derivatives are exact, otherwise
// they come from 4th-order finite differences of the points.
struct SampledCurve {
    int sphere_dim = 2;
    Grid grid;
    std::vector<Eigen::VectorXd> points;
    CurveEvaluator eval;  // may be empty
};

SampledCurve sample_curve(int sphere_dim, const Grid& grid, const CurveEvaluator& eval);

// Derivative of given order at grid index i (exact or finite-difference).
Eigen::VectorXd curve_derivative(const SampledCurve& curve, int i, int order);

struct CurvatureProfile2 {
    Grid grid;
    std::vector<double> v;      // speed, positive
    std::vector<double> kappa;  // geodesic curvature
};

struct CurvatureProfile3 {
    Grid grid;
    std::vector<double> v;
    std::vector<double> kappa;
    std::vector<double> tau;
};

// Sampled SO frames with their continuous spin lifts, lift(0) = 1.
struct FrameCurve {
    int sphere_dim = 2;
    Grid grid;
    std::vector<Eigen::MatrixXd> frames;
    std::vector<UnitQuaternion> lift3;    // sphere_dim == 2
    std::vector<Spin4Element> lift4;      // sphere_dim == 3
};

// Shared-speed pair of S^2 curvature profiles with final lifts; the
// intrinsic form of a decomposed S^3 curve.
struct CurvePair {
    Grid grid;
    std::vector<double> v;
    std::vector<double> kappa_l;
    std::vector<double> kappa_r;
    UnitQuaternion z_l, z_r;
};

struct BBDTriple {
    Grid grid;
    std::vector<double> b_l;
    std::vector<double> b_r;
    std::vector<double> d;
};

// Finite-difference weights for the m-th derivative at x0 from nodes x
// (Fornberg's recursion).
std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m);

}  // namespace spincurve
