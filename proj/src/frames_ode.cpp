#include "spincurve/frames_ode.hpp"

#include <algorithm>
#include <cmath>

#include "spincurve/bruhat.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/tolerances.hpp"

namespace spincurve {

bool is_quasi_jacobi(const Eigen::MatrixXd& m, double tolerance) {
    const int n = static_cast<int>(m.rows());
    if ((m + m.transpose()).cwiseAbs().maxCoeff() > tolerance) return false;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (std::abs(i - j) > 1 && std::abs(m(i, j)) > tolerance) return false;
    for (int i = 0; i + 2 < n; ++i)
        if (!(m(i + 1, i) > 0)) return false;
    return true;
}

bool is_jacobi(const Eigen::MatrixXd& m, double tolerance) {
    return is_quasi_jacobi(m, tolerance) && m(m.rows() - 1, m.cols() - 2) > 0;
}

Eigen::Matrix3d jacobi2(double c1, double c2) {
    Eigen::Matrix3d m;
    m << 0, -c1, 0,
         c1, 0, -c2,
         0, c2, 0;
    return m;
}

Eigen::Matrix4d jacobi3(double c1, double c2, double c3) {
    Eigen::Matrix4d m;
    m << 0, -c1, 0, 0,
         c1, 0, -c2, 0,
         0, c2, 0, -c3,
         0, 0, c3, 0;
    return m;
}

std::vector<Eigen::MatrixXd> log_derivative(const FrameCurve& F) {
    const int n = F.grid.n;
    const int dim = static_cast<int>(F.frames[0].rows());
    for (const auto& f : F.frames) {
        if ((f.transpose() * f - Eigen::MatrixXd::Identity(dim, dim)).cwiseAbs().maxCoeff() > 1e-6)
            throw PreconditionError("log_derivative: non-orthogonal input frame");
    }
    std::vector<Eigen::MatrixXd> out;
    out.reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
        int lo = std::clamp(i - 3, 0, n - 6);
        std::vector<double> nodes(7);
        for (int k = 0; k < 7; ++k) nodes[k] = F.grid.t(lo + k);
        std::vector<double> w = fd_weights(F.grid.t(i), nodes, 1);
        Eigen::MatrixXd fp = Eigen::MatrixXd::Zero(dim, dim);
        for (int k = 0; k < 7; ++k) fp += w[k] * F.frames[lo + k];
        out.push_back(F.frames[i].transpose() * fp);
    }
    return out;
}

std::vector<Eigen::MatrixXd> lambda_samples(const CurvatureProfile2& p) {
    if ((int)p.v.size() != p.grid.size() || (int)p.kappa.size() != p.grid.size())
        throw PreconditionError("lambda_samples: array length does not match grid");
    std::vector<Eigen::MatrixXd> out;
    out.reserve(p.grid.size());
    for (int i = 0; i < p.grid.size(); ++i) {
        if (!(p.v[i] > 0)) throw PreconditionError("lambda_samples: speed must be positive");
        out.push_back(jacobi2(p.v[i], p.v[i] * p.kappa[i]));
    }
    return out;
}

std::vector<Eigen::MatrixXd> lambda_samples(const CurvatureProfile3& p) {
    if ((int)p.v.size() != p.grid.size() || (int)p.kappa.size() != p.grid.size() ||
        (int)p.tau.size() != p.grid.size())
        throw PreconditionError("lambda_samples: array length does not match grid");
    std::vector<Eigen::MatrixXd> out;
    out.reserve(p.grid.size());
    for (int i = 0; i < p.grid.size(); ++i) {
        if (!(p.v[i] > 0)) throw PreconditionError("lambda_samples: speed must be positive");
        out.push_back(jacobi3(p.v[i], p.v[i] * p.kappa[i], p.v[i] * p.tau[i]));
    }
    return out;
}

ImaginaryQuaternion spin_tangent3(const Eigen::MatrixXd& lambda) {
    double c1 = lambda(1, 0), c2 = lambda(2, 1);
    return {c2 / 2, 0, c1 / 2};
}

ImTangentPair spin_tangent4(const Eigen::MatrixXd& lambda) {
    double c1 = lambda(1, 0), c2 = lambda(2, 1), c3 = lambda(3, 2);
    return {{(c1 + c3) / 2, 0, c2 / 2}, {(c3 - c1) / 2, 0, c2 / 2}};
}

namespace {

Quaternion quat_scale_add(const Quaternion& q, const Quaternion& dq, double s) {
    return q + dq * s;
}

// One RK4 step of q' = q h(t) with endpoint/midpoint tangent samples.
Quaternion rk4_quat_step(const Quaternion& q, const ImaginaryQuaternion& h0,
                         const ImaginaryQuaternion& hm, const ImaginaryQuaternion& h1, double dt) {
    auto rhs = [](const Quaternion& p, const ImaginaryQuaternion& h) {
        return quat_mul(p, h.full());
    };
    Quaternion k1 = rhs(q, h0);
    Quaternion k2 = rhs(quat_scale_add(q, k1, dt / 2), hm);
    Quaternion k3 = rhs(quat_scale_add(q, k2, dt / 2), hm);
    Quaternion k4 = rhs(quat_scale_add(q, k3, dt), h1);
    Quaternion next = q + (k1 + k2 * 2 + k3 * 2 + k4) * (dt / 6);
    double n = next.norm();
    return next * (1.0 / n);
}

// Interpolation weights at position x (in sample-index units) from four
// surrounding samples; cubic order keeps the RK4 order for non-constant
// data, short runs fall back to linear.
struct MidWeights {
    int lo = 0;
    int count = 2;
    double w[4] = {0.5, 0.5, 0, 0};
};

MidWeights mid_weights(double x, int m) {
    MidWeights out;
    if (m < 3) {
        out.lo = std::clamp(static_cast<int>(x), 0, m - 1);
        out.w[1] = x - out.lo;
        out.w[0] = 1 - out.w[1];
        return out;
    }
    out.lo = std::clamp(static_cast<int>(x) - 1, 0, m - 3);
    out.count = 4;
    std::vector<double> nodes(4);
    for (int j = 0; j < 4; ++j) nodes[j] = out.lo + j;
    std::vector<double> w = fd_weights(x, nodes, 0);
    for (int j = 0; j < 4; ++j) out.w[j] = w[j];
    return out;
}

Eigen::MatrixXd lambda_at(const std::vector<Eigen::MatrixXd>& lambda, const MidWeights& mw) {
    Eigen::MatrixXd out = mw.w[0] * lambda[mw.lo];
    for (int j = 1; j < mw.count; ++j) out += mw.w[j] * lambda[mw.lo + j];
    return out;
}

ImaginaryQuaternion im_weighted(const std::vector<ImaginaryQuaternion>& h, const MidWeights& mw) {
    ImaginaryQuaternion out;
    for (int j = 0; j < mw.count; ++j) {
        out.b += mw.w[j] * h[mw.lo + j].b;
        out.c += mw.w[j] * h[mw.lo + j].c;
        out.d += mw.w[j] * h[mw.lo + j].d;
    }
    return out;
}

}  // namespace

void advance_frames(FrameState& state, const std::vector<Eigen::MatrixXd>& lambda, double dt,
                    FrameCurve& record) {
    if (lambda.size() < 2) throw PreconditionError("advance_frames: need at least two samples");
    const int dim = static_cast<int>(lambda[0].rows());
    if (dim != 3 && dim != 4)
        throw PreconditionError("advance_frames: expects 3x3 or 4x4 samples");

    const int steps = static_cast<int>(lambda.size()) - 1;
    for (int i = 0; i < steps; ++i) {
        // Substeps keep dt * ||Lambda|| small on fast blocks (inserted
        // loops traverse their whole length inside one sample interval).
        double scale = std::max(lambda[i].norm(), lambda[i + 1].norm()) * dt;
        int r = std::max(1, static_cast<int>(std::ceil(scale / 0.03)));
        double hs = dt / r;
        for (int s = 0; s < r; ++s) {
            double x0 = i + static_cast<double>(s) / r;
            Eigen::MatrixXd L0 = lambda_at(lambda, mid_weights(x0, steps));
            Eigen::MatrixXd Lm = lambda_at(lambda, mid_weights(x0 + 0.5 / r, steps));
            Eigen::MatrixXd L1 = lambda_at(lambda, mid_weights(x0 + 1.0 / r, steps));
            Eigen::MatrixXd k1 = state.G * L0;
            Eigen::MatrixXd k2 = (state.G + hs / 2 * k1) * Lm;
            Eigen::MatrixXd k3 = (state.G + hs / 2 * k2) * Lm;
            Eigen::MatrixXd k4 = (state.G + hs * k3) * L1;
            state.G = state.G + hs / 6 * (k1 + 2 * k2 + 2 * k3 + k4);

            if (dim == 3) {
                state.ql = rk4_quat_step(state.ql, spin_tangent3(L0), spin_tangent3(Lm),
                                         spin_tangent3(L1), hs);
            } else {
                ImTangentPair h0 = spin_tangent4(L0), hm = spin_tangent4(Lm),
                              h1 = spin_tangent4(L1);
                state.ql = rk4_quat_step(state.ql, h0.h_l, hm.h_l, h1.h_l, hs);
                state.qr = rk4_quat_step(state.qr, h0.h_r, hm.h_r, h1.h_r, hs);
            }
        }
        state.G = qr_positive(state.G);
        record.frames.push_back(state.G);
        if (dim == 3) {
            record.lift3.push_back(UnitQuaternion::normalized(state.ql));
        } else {
            record.lift4.push_back(
                {UnitQuaternion::normalized(state.ql), UnitQuaternion::normalized(state.qr)});
        }
    }
}

FrameCurve integrate_frame(const std::vector<Eigen::MatrixXd>& lambda, const Grid& grid) {
    if (static_cast<int>(lambda.size()) != grid.size())
        throw PreconditionError("integrate_frame: sample count does not match grid");
    const int dim = static_cast<int>(lambda[0].rows());
    if (dim != 3 && dim != 4)
        throw PreconditionError("integrate_frame: expects 3x3 or 4x4 samples");

    FrameCurve fc;
    fc.sphere_dim = dim - 1;
    fc.grid = grid;
    FrameState st;
    st.G = Eigen::MatrixXd::Identity(dim, dim);
    fc.frames.push_back(st.G);
    if (dim == 3) {
        fc.lift3.push_back(UnitQuaternion());
    } else {
        fc.lift4.push_back(Spin4Element());
    }
    advance_frames(st, lambda, 1.0 / grid.n, fc);
    return fc;
}

std::vector<UnitQuaternion> integrate_spin3(const std::vector<ImaginaryQuaternion>& h,
                                            const Grid& grid) {
    if (static_cast<int>(h.size()) != grid.size())
        throw PreconditionError("integrate_spin3: sample count does not match grid");
    const double dt = 1.0 / grid.n;
    std::vector<UnitQuaternion> out{UnitQuaternion()};
    Quaternion q{1, 0, 0, 0};
    for (int i = 0; i < grid.n; ++i) {
        q = rk4_quat_step(q, h[i], im_weighted(h, mid_weights(i + 0.5, grid.n)), h[i + 1], dt);
        out.push_back(UnitQuaternion::normalized(q));
    }
    return out;
}

std::vector<Spin4Element> integrate_spin4(const std::vector<ImTangentPair>& h, const Grid& grid) {
    if (static_cast<int>(h.size()) != grid.size())
        throw PreconditionError("integrate_spin4: sample count does not match grid");
    const double dt = 1.0 / grid.n;
    std::vector<Spin4Element> out{Spin4Element()};
    Quaternion ql{1, 0, 0, 0}, qr{1, 0, 0, 0};
    std::vector<ImaginaryQuaternion> hl, hr;
    for (const auto& pair : h) {
        hl.push_back(pair.h_l);
        hr.push_back(pair.h_r);
    }
    for (int i = 0; i < grid.n; ++i) {
        MidWeights mw = mid_weights(i + 0.5, grid.n);
        ql = rk4_quat_step(ql, h[i].h_l, im_weighted(hl, mw), h[i + 1].h_l, dt);
        qr = rk4_quat_step(qr, h[i].h_r, im_weighted(hr, mw), h[i + 1].h_r, dt);
        out.push_back({UnitQuaternion::normalized(ql), UnitQuaternion::normalized(qr)});
    }
    return out;
}

namespace {

template <typename Profile>
std::pair<SampledCurve, FrameCurve> curve_from_profile_impl(const Profile& p, int sphere_dim) {
    FrameCurve fc = integrate_frame(lambda_samples(p), p.grid);
    SampledCurve c;
    c.sphere_dim = sphere_dim;
    c.grid = p.grid;
    for (const auto& f : fc.frames) c.points.push_back(f.col(0));
    return {std::move(c), std::move(fc)};
}

}  // namespace

std::pair<SampledCurve, FrameCurve> curve_from_profile(const CurvatureProfile2& p) {
    return curve_from_profile_impl(p, 2);
}

std::pair<SampledCurve, FrameCurve> curve_from_profile(const CurvatureProfile3& p) {
    return curve_from_profile_impl(p, 3);
}

}  // namespace spincurve
