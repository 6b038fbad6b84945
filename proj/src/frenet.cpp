#include "spincurve/frenet.hpp"

#include <algorithm>
#include <cmath>

#include "spincurve/spin_cover.hpp"
#include "spincurve/tolerances.hpp"

namespace spincurve {

std::vector<double> fd_weights(double x0, const std::vector<double>& x, int m) {
    // Fornberg's recursion for finite-difference weights.
    const int nn = static_cast<int>(x.size());
    std::vector<std::vector<std::vector<double>>> delta(
        m + 1, std::vector<std::vector<double>>(nn, std::vector<double>(nn, 0.0)));
    delta[0][0][0] = 1.0;
    double c1 = 1.0;
    for (int n = 1; n < nn; ++n) {
        double c2 = 1.0;
        for (int nu = 0; nu < n; ++nu) {
            double c3 = x[n] - x[nu];
            c2 *= c3;
            for (int k = 0; k <= std::min(n, m); ++k) {
                double prev = k > 0 ? delta[k - 1][n - 1][nu] : 0.0;
                delta[k][n][nu] = ((x[n] - x0) * delta[k][n - 1][nu] - k * prev) / c3;
            }
        }
        for (int k = 0; k <= std::min(n, m); ++k) {
            double prev = k > 0 ? delta[k - 1][n - 1][n - 1] : 0.0;
            delta[k][n][n] = c1 / c2 * (k * prev - (x[n - 1] - x0) * delta[k][n - 1][n - 1]);
        }
        c1 = c2;
    }
    std::vector<double> w(nn);
    for (int nu = 0; nu < nn; ++nu) w[nu] = delta[m][nn - 1][nu];
    return w;
}

SampledCurve sample_curve(int sphere_dim, const Grid& grid, const CurveEvaluator& eval) {
    if (sphere_dim != 2 && sphere_dim != 3)
        throw PreconditionError("sample_curve: sphere_dim must be 2 or 3");
    SampledCurve c;
    c.sphere_dim = sphere_dim;
    c.grid = grid;
    c.eval = eval;
    c.points.reserve(grid.size());
    for (int i = 0; i < grid.size(); ++i) {
        Eigen::VectorXd p = eval(grid.t(i), 0);
        if (p.size() != sphere_dim + 1)
            throw PreconditionError("sample_curve: evaluator dimension mismatch");
        if (std::abs(p.norm() - 1.0) > 1e-8)
            throw PreconditionError("sample_curve: point off the unit sphere");
        c.points.push_back(p);
    }
    return c;
}

Eigen::VectorXd curve_derivative(const SampledCurve& curve, int i, int order) {
    if (order == 0) return curve.points[i];
    if (curve.eval) return curve.eval(curve.grid.t(i), order);
    // 7-node finite-difference stencil, clamped at the ends; order >= 4
    // accuracy for derivatives up to the third.
    const int n = curve.grid.n;
    int lo = std::clamp(i - 3, 0, n - 6);
    std::vector<double> nodes(7);
    for (int k = 0; k < 7; ++k) nodes[k] = curve.grid.t(lo + k);
    std::vector<double> w = fd_weights(curve.grid.t(i), nodes, order);
    Eigen::VectorXd d = Eigen::VectorXd::Zero(curve.sphere_dim + 1);
    for (int k = 0; k < 7; ++k) d += w[k] * curve.points[lo + k];
    return d;
}

double det3(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c) {
    Eigen::Matrix3d m;
    m << a, b, c;
    return m.determinant();
}

Eigen::Vector4d cross4(const Eigen::Vector4d& a, const Eigen::Vector4d& b,
                       const Eigen::Vector4d& c) {
    Eigen::Vector4d x;
    for (int i = 0; i < 4; ++i) {
        Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
        m.col(0) = a;
        m.col(1) = b;
        m.col(2) = c;
        m(i, 3) = 1.0;
        x(i) = m.determinant();
    }
    return x;
}

Eigen::MatrixXd frame_from_derivatives(const std::vector<Eigen::VectorXd>& derivs) {
    const int dim = static_cast<int>(derivs[0].size());  // ambient dimension
    Eigen::MatrixXd F(dim, dim);
    // Gram-Schmidt on (gamma, gamma', ...) fills the first dim-1 columns.
    for (int c = 0; c + 1 < dim; ++c) {
        Eigen::VectorXd u = derivs[c];
        for (int p = 0; p < c; ++p) u -= u.dot(F.col(p)) * F.col(p);
        double nrm = u.norm();
        if (nrm < 1e-10)
            throw VerificationError("frame_from_derivatives: Gram-Schmidt degenerate (non-generic point)");
        F.col(c) = u / nrm;
    }
    if (dim == 3) {
        F.col(2) = Eigen::Vector3d(F.col(0)).cross(Eigen::Vector3d(F.col(1)));
    } else {
        F.col(3) = cross4(F.col(0), F.col(1), F.col(2)).normalized();
    }
    return F;
}

Eigen::MatrixXd frame_at(const SampledCurve& curve, double t) {
    if (!curve.eval)
        throw PreconditionError("frame_at: needs an analytic evaluator");
    std::vector<Eigen::VectorXd> d;
    for (int k = 0; k < curve.sphere_dim; ++k) d.push_back(curve.eval(t, k));
    return frame_from_derivatives(d);
}

FrameCurve frenet_frame(const SampledCurve& curve) {
    FrameCurve fc;
    fc.sphere_dim = curve.sphere_dim;
    fc.grid = curve.grid;
    fc.frames.reserve(curve.grid.size());
    for (int i = 0; i < curve.grid.size(); ++i) {
        std::vector<Eigen::VectorXd> d;
        for (int k = 0; k < curve.sphere_dim; ++k) d.push_back(curve_derivative(curve, i, k));
        try {
            fc.frames.push_back(frame_from_derivatives(d));
        } catch (const VerificationError&) {
            throw VerificationError("frenet_frame: Gram-Schmidt degenerate at t = " +
                                    std::to_string(curve.grid.t(i)));
        }
    }
    if (curve.sphere_dim == 2) {
        UnitQuaternion cur;  // 1, so lift(0) = 1 when the frame starts at I
        for (int i = 0; i < curve.grid.size(); ++i) {
            cur = so3_to_spin(fc.frames[i], cur);
            fc.lift3.push_back(cur);
        }
    } else {
        Spin4Element cur;
        for (int i = 0; i < curve.grid.size(); ++i) {
            cur = so4_to_spin(fc.frames[i], cur);
            fc.lift4.push_back(cur);
        }
    }
    return fc;
}

CurvatureProfile2 curvature_profile2(const SampledCurve& curve) {
    if (curve.sphere_dim != 2)
        throw PreconditionError("curvature_profile2: expects a curve on S^2");
    CurvatureProfile2 p;
    p.grid = curve.grid;
    for (int i = 0; i < curve.grid.size(); ++i) {
        Eigen::Vector3d g = curve.points[i];
        Eigen::Vector3d g1 = curve_derivative(curve, i, 1);
        Eigen::Vector3d g2 = curve_derivative(curve, i, 2);
        double v = g1.norm();
        if (v < 1e-12)
            throw VerificationError("curvature_profile2: vanishing speed at t = " +
                                    std::to_string(curve.grid.t(i)));
        p.v.push_back(v);
        p.kappa.push_back(det3(g, g1, g2) / (v * v * v));
    }
    return p;
}

CurvatureProfile3 curvature_profile3(const SampledCurve& curve) {
    if (curve.sphere_dim != 3)
        throw PreconditionError("curvature_profile3: expects a curve on S^3");
    CurvatureProfile3 p;
    p.grid = curve.grid;
    for (int i = 0; i < curve.grid.size(); ++i) {
        Eigen::Vector4d g = curve.points[i];
        Eigen::Vector4d g1 = curve_derivative(curve, i, 1);
        Eigen::Vector4d g2 = curve_derivative(curve, i, 2);
        Eigen::Vector4d g3 = curve_derivative(curve, i, 3);
        double v = g1.norm();
        if (v < 1e-12)
            throw VerificationError("curvature_profile3: vanishing speed at t = " +
                                    std::to_string(curve.grid.t(i)));
        Eigen::Vector4d tvec = g1 / v;
        Eigen::Vector4d w = g2 - g2.dot(g) * g - g2.dot(tvec) * tvec;
        double kappa = w.norm() / (v * v);
        if (kappa < 1e-12)
            throw VerificationError("curvature_profile3: vanishing curvature (non-generic) at t = " +
                                    std::to_string(curve.grid.t(i)));
        Eigen::Matrix4d m;
        m << g, g1, g2, g3;
        double tau = m.determinant() / (std::pow(v, 6) * kappa * kappa);
        p.v.push_back(v);
        p.kappa.push_back(kappa);
        p.tau.push_back(tau);
    }
    return p;
}

ConvexityWitness is_locally_convex(const SampledCurve& curve) {
    if (curve.sphere_dim == 2) {
        CurvatureProfile2 p = curvature_profile2(curve);
        for (int i = 0; i < p.grid.size(); ++i)
            if (!(p.kappa[i] > 0)) return {false, p.grid.t(i)};
        return {true, 0};
    }
    CurvatureProfile3 p = curvature_profile3(curve);
    for (int i = 0; i < p.grid.size(); ++i) {
        if (!(p.tau[i] > 0)) return {false, p.grid.t(i)};
        // Determinant criterion; equivalent to tau > 0 given kappa != 0.
        Eigen::Matrix4d m;
        m << curve.points[i], curve_derivative(curve, i, 1), curve_derivative(curve, i, 2),
            curve_derivative(curve, i, 3);
        if (!(m.determinant() > 0)) return {false, p.grid.t(i)};
    }
    return {true, 0};
}

bool is_convex_arc(const SampledCurve& curve, int trials, unsigned seed, int lo, int hi) {
    if (hi < 0) hi = curve.grid.n;
    std::mt19937 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    const int dim = curve.sphere_dim + 1;
    for (int trial = 0; trial < trials; ++trial) {
        int crossings = 0;
        bool tangent = true;
        for (int attempt = 0; attempt < 100 && tangent; ++attempt) {
            Eigen::VectorXd nrm(dim);
            for (int k = 0; k < dim; ++k) nrm(k) = gauss(rng);
            nrm.normalize();
            tangent = false;
            crossings = 0;
            double prev = curve.points[lo].dot(nrm);
            for (int i = lo + 1; i <= hi; ++i) {
                double cur = curve.points[i].dot(nrm);
                if (i < hi && std::abs(cur) < 1e-12) {
                    // Tangential contact is measure-zero; jitter the normal.
                    tangent = true;
                    break;
                }
                if (prev * cur < 0) ++crossings;
                prev = cur;
            }
        }
        if (crossings > curve.sphere_dim) return false;
    }
    return true;
}

namespace {

double frame_identity_error(const Eigen::MatrixXd& F) {
    return (F - Eigen::MatrixXd::Identity(F.rows(), F.cols())).cwiseAbs().maxCoeff();
}

// Golden-section minimization of ||F(t) - I|| on [a, b].
double refine_identity_hit(const SampledCurve& curve, double a, double b) {
    const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = b - gr * (b - a), d = a + gr * (b - a);
    double fc = frame_identity_error(frame_at(curve, c));
    double fd = frame_identity_error(frame_at(curve, d));
    for (int it = 0; it < 200 && b - a > 1e-12; ++it) {
        if (fc < fd) {
            b = d; d = c; fd = fc;
            c = b - gr * (b - a);
            fc = frame_identity_error(frame_at(curve, c));
        } else {
            a = c; c = d; fc = fd;
            d = a + gr * (b - a);
            fd = frame_identity_error(frame_at(curve, d));
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::optional<int> multiconvex_multiplicity(const SampledCurve& curve, std::vector<double>* times,
                                            int trials, unsigned seed) {
    if (curve.sphere_dim != 2)
        throw PreconditionError("multiconvex_multiplicity: expects a curve on S^2");
    if (!is_locally_convex(curve).value) return std::nullopt;
    FrameCurve fc = frenet_frame(curve);
    const int n = curve.grid.n;
    std::vector<double> err(n + 1);
    for (int i = 0; i <= n; ++i) err[i] = frame_identity_error(fc.frames[i]);
    if (err[0] > tol().frame_identity || err[n] > tol().frame_identity)
        return std::nullopt;  // frame must close up at the endpoints

    std::vector<double> hits{0.0};
    const double coarse = 0.1;
    for (int i = 1; i < n; ++i) {
        if (err[i] < coarse && err[i] <= err[i - 1] && err[i] <= err[i + 1]) {
            double t = curve.grid.t(i);
            if (curve.eval) {
                t = refine_identity_hit(curve, curve.grid.t(i - 1), curve.grid.t(i + 1));
                if (frame_identity_error(frame_at(curve, t)) > tol().frame_identity) continue;
            } else if (err[i] > tol().frame_identity) {
                continue;
            }
            if (t - hits.back() > 1.0 / n) hits.push_back(t);
        }
    }
    hits.push_back(1.0);

    for (size_t j = 1; j < hits.size(); ++j) {
        // Round the window inward: off-grid junctions must not leak a
        // sliver of the neighboring arc into the convexity test.
        int lo = static_cast<int>(std::ceil(hits[j - 1] * n - 1e-9));
        int hi = static_cast<int>(std::floor(hits[j] * n + 1e-9));
        if (!is_convex_arc(curve, trials, seed + static_cast<unsigned>(j), lo, hi))
            return std::nullopt;
    }
    if (times) *times = hits;
    return static_cast<int>(hits.size()) - 1;
}

}  // namespace spincurve
