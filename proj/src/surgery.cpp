#include "spincurve/surgery.hpp"

#include <algorithm>
#include <cmath>

#include "spincurve/decompose.hpp"
#include "spincurve/errors.hpp"
#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"

namespace spincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Linear interpolation of grid samples at fraction s in [0, 1].
double interp(const std::vector<double>& a, const Grid& g, double s) {
    double x = std::clamp(s, 0.0, 1.0) * g.n;
    int i = std::min(static_cast<int>(x), g.n - 1);
    double f = x - i;
    return (1 - f) * a[i] + f * a[i + 1];
}

// Cumulative trapezoid arc length of the speed samples; out[i] is the
// length of [t(0), t(i)].
std::vector<double> cumulative_length(const std::vector<double>& v, const Grid& g) {
    std::vector<double> out(g.size(), 0.0);
    for (int i = 1; i < g.size(); ++i) out[i] = out[i - 1] + (v[i - 1] + v[i]) / (2.0 * g.n);
    return out;
}

enum class SpliceCase { Interior, Start, End };

struct SpliceLayout {
    int i0 = 0, k = 0;
    SpliceCase kind = SpliceCase::Interior;
};

SpliceLayout splice_layout(const Grid& grid, const SurgerySpec& spec) {
    if (spec.t0 < 0 || spec.t0 > 1) throw PreconditionError("add_loops: t0 must lie in [0, 1]");
    if (!(spec.epsilon > 0)) throw PreconditionError("add_loops: epsilon must be positive");
    SpliceLayout lay;
    lay.i0 = static_cast<int>(std::lround(spec.t0 * grid.n));
    lay.k = static_cast<int>(std::lround(spec.epsilon * grid.n));
    if (lay.k < 1) throw PreconditionError("add_loops: epsilon below grid resolution");
    if (lay.i0 == 0) {
        lay.kind = SpliceCase::Start;
        if (2 * lay.k > grid.n) throw PreconditionError("add_loops: epsilon too large");
    } else if (lay.i0 == grid.n) {
        lay.kind = SpliceCase::End;
        if (2 * lay.k > grid.n) throw PreconditionError("add_loops: epsilon too large");
    } else {
        if (lay.i0 - 2 * lay.k < 0 || lay.i0 + 2 * lay.k > grid.n)
            throw PreconditionError("add_loops: insertion window leaves [0, 1]");
    }
    return lay;
}

// Channel-wise splice; channel 0 is the speed and picks up the
// reparametrization factors.
struct RawSegment {
    int i0 = 0, i1 = 0;
    std::vector<std::vector<double>> ch;
};

using Channels = std::vector<const std::vector<double>*>;

RawSegment copy_segment(int a, int b, const Channels& g) {
    RawSegment s{a, b, {}};
    for (const auto* c : g) s.ch.emplace_back(c->begin() + a, c->begin() + b + 1);
    return s;
}

// Input traversed at doubled speed: sample index i maps to 2 i - off.
RawSegment doubled_segment(int a, int b, int off, const Channels& g) {
    RawSegment s{a, b, std::vector<std::vector<double>>(g.size())};
    for (int i = a; i <= b; ++i) {
        int j = 2 * i - off;
        for (size_t c = 0; c < g.size(); ++c)
            s.ch[c].push_back(c == 0 ? 2 * (*g[c])[j] : (*g[c])[j]);
    }
    return s;
}

// The inserted loop, traversed once over a parameter window of width
// (b - a)/n.
RawSegment loop_segment(int a, int b, const Channels& o, const Grid& og, const Grid& grid) {
    RawSegment s{a, b, std::vector<std::vector<double>>(o.size())};
    double w = static_cast<double>(b - a) / grid.n;
    for (int i = a; i <= b; ++i) {
        double frac = static_cast<double>(i - a) / (b - a);
        for (size_t c = 0; c < o.size(); ++c) {
            double x = interp(*o[c], og, frac);
            s.ch[c].push_back(c == 0 ? x / w : x);
        }
    }
    return s;
}

std::vector<RawSegment> splice_core(const SpliceLayout& lay, const Grid& grid, const Channels& g,
                                    const Channels& o, const Grid& og) {
    std::vector<RawSegment> segs;
    auto push = [&](RawSegment s) {
        if (s.i1 > s.i0) segs.push_back(std::move(s));
    };
    const int i0 = lay.i0, k = lay.k, n = grid.n;
    switch (lay.kind) {
        case SpliceCase::Interior:
            push(copy_segment(0, i0 - 2 * k, g));
            push(doubled_segment(i0 - 2 * k, i0 - k, i0 - 2 * k, g));
            push(loop_segment(i0 - k, i0 + k, o, og, grid));
            push(doubled_segment(i0 + k, i0 + 2 * k, i0 + 2 * k, g));
            push(copy_segment(i0 + 2 * k, n, g));
            break;
        case SpliceCase::Start:
            push(loop_segment(0, k, o, og, grid));
            push(doubled_segment(k, 2 * k, 2 * k, g));
            push(copy_segment(2 * k, n, g));
            break;
        case SpliceCase::End:
            push(copy_segment(0, n - 2 * k, g));
            push(doubled_segment(n - 2 * k, n - k, n - 2 * k, g));
            push(loop_segment(n - k, n, o, og, grid));
            break;
    }
    return segs;
}

// Flattened samples: segments written in order, then the outside-window
// region restored bitwise from the input.
void flatten(const std::vector<RawSegment>& segs, const SpliceLayout& lay, const Grid& grid,
             const Channels& g, std::vector<std::vector<double>*> out) {
    for (auto* c : out) c->assign(grid.size(), 0.0);
    for (const auto& s : segs)
        for (int i = s.i0; i <= s.i1; ++i)
            for (size_t c = 0; c < out.size(); ++c) (*out[c])[i] = s.ch[c][i - s.i0];
    for (int i = 0; i <= grid.n; ++i) {
        bool outside = false;
        switch (lay.kind) {
            case SpliceCase::Interior:
                outside = i <= lay.i0 - 2 * lay.k || i >= lay.i0 + 2 * lay.k;
                break;
            case SpliceCase::Start: outside = i >= 2 * lay.k; break;
            case SpliceCase::End: outside = i <= grid.n - 2 * lay.k; break;
        }
        if (outside)
            for (size_t c = 0; c < out.size(); ++c) (*out[c])[i] = (*g[c])[i];
    }
}

void check_loop_closes(const FrameCurve& fc) {
    const int d = static_cast<int>(fc.frames.back().rows());
    if ((fc.frames.back() - Eigen::MatrixXd::Identity(d, d)).cwiseAbs().maxCoeff() > 1e-6)
        throw PreconditionError("add_loops: inserted loop must close with identity frame");
    bool lift_ok = d == 3 ? fc.lift3.back().dist(UnitQuaternion()) <= 1e-6
                          : fc.lift4.back().dist(Spin4Element()) <= 1e-6;
    if (!lift_ok)
        throw PreconditionError("add_loops: inserted loop must close with trivial spin lift");
}

}  // namespace

FrameCurve integrate_segments(const std::vector<ProfileSegment2>& segments, const Grid& grid) {
    if (segments.empty() || segments.front().i0 != 0 || segments.back().i1 != grid.n)
        throw PreconditionError("integrate_segments: segments must cover the grid");
    FrameCurve fc;
    fc.sphere_dim = 2;
    fc.grid = grid;
    FrameState st;
    st.G = Eigen::MatrixXd::Identity(3, 3);
    fc.frames.push_back(st.G);
    fc.lift3.push_back(UnitQuaternion());
    int at = 0;
    for (const auto& s : segments) {
        if (s.i0 != at || s.i1 <= s.i0)
            throw PreconditionError("integrate_segments: segments must be contiguous");
        std::vector<Eigen::MatrixXd> lambda;
        for (int i = 0; i <= s.i1 - s.i0; ++i) {
            if (!(s.v[i] > 0))
                throw PreconditionError("integrate_segments: speed must be positive");
            lambda.push_back(jacobi2(s.v[i], s.v[i] * s.kappa[i]));
        }
        advance_frames(st, lambda, 1.0 / grid.n, fc);
        at = s.i1;
    }
    return fc;
}

FrameCurve integrate_segments(const std::vector<ProfileSegment3>& segments, const Grid& grid) {
    if (segments.empty() || segments.front().i0 != 0 || segments.back().i1 != grid.n)
        throw PreconditionError("integrate_segments: segments must cover the grid");
    FrameCurve fc;
    fc.sphere_dim = 3;
    fc.grid = grid;
    FrameState st;
    st.G = Eigen::MatrixXd::Identity(4, 4);
    fc.frames.push_back(st.G);
    fc.lift4.push_back(Spin4Element());
    int at = 0;
    for (const auto& s : segments) {
        if (s.i0 != at || s.i1 <= s.i0)
            throw PreconditionError("integrate_segments: segments must be contiguous");
        std::vector<Eigen::MatrixXd> lambda;
        for (int i = 0; i <= s.i1 - s.i0; ++i) {
            if (!(s.v[i] > 0))
                throw PreconditionError("integrate_segments: speed must be positive");
            lambda.push_back(jacobi3(s.v[i], s.v[i] * s.kappa[i], s.v[i] * s.tau[i]));
        }
        advance_frames(st, lambda, 1.0 / grid.n, fc);
        at = s.i1;
    }
    return fc;
}

CurvatureProfile2 default_loop2(const Grid& grid) { return sigma_profile(kPi, 2, grid); }

CurvatureProfile3 default_loop3(const Grid& grid) { return omega3_profile(grid); }

SpliceResult2 add_loops(const CurvatureProfile2& gamma, const SurgerySpec& spec,
                        const CurvatureProfile2& omega) {
    check_loop_closes(integrate_frame(lambda_samples(omega), omega.grid));
    SpliceLayout lay = splice_layout(gamma.grid, spec);
    Channels g{&gamma.v, &gamma.kappa}, o{&omega.v, &omega.kappa};
    std::vector<RawSegment> raw = splice_core(lay, gamma.grid, g, o, omega.grid);

    SpliceResult2 out;
    out.profile.grid = gamma.grid;
    flatten(raw, lay, gamma.grid, g, {&out.profile.v, &out.profile.kappa});
    for (auto& s : raw)
        out.segments.push_back({s.i0, s.i1, std::move(s.ch[0]), std::move(s.ch[1])});
    return out;
}

SpliceResult3 add_loops(const CurvatureProfile3& gamma, const SurgerySpec& spec,
                        const CurvatureProfile3& omega) {
    check_loop_closes(integrate_frame(lambda_samples(omega), omega.grid));
    SpliceLayout lay = splice_layout(gamma.grid, spec);
    Channels g{&gamma.v, &gamma.kappa, &gamma.tau}, o{&omega.v, &omega.kappa, &omega.tau};
    std::vector<RawSegment> raw = splice_core(lay, gamma.grid, g, o, omega.grid);

    SpliceResult3 out;
    out.profile.grid = gamma.grid;
    flatten(raw, lay, gamma.grid, g, {&out.profile.v, &out.profile.kappa, &out.profile.tau});
    for (auto& s : raw)
        out.segments.push_back(
            {s.i0, s.i1, std::move(s.ch[0]), std::move(s.ch[1]), std::move(s.ch[2])});
    return out;
}

SpliceResult2 add_loops(const CurvatureProfile2& gamma, const SurgerySpec& spec) {
    return add_loops(gamma, spec, default_loop2());
}

SpliceResult3 add_loops(const CurvatureProfile3& gamma, const SurgerySpec& spec) {
    return add_loops(gamma, spec, default_loop3());
}

double CircleArc::length() const { return sweep * std::sin(rho); }

Eigen::Vector3d CircleArc::point(double phi) const {
    return std::cos(rho) * center + std::sin(rho) * (std::cos(phi) * e1 + std::sin(phi) * e2);
}

Eigen::Vector3d CircleArc::tangent(double phi) const {
    return -std::sin(phi) * e1 + std::cos(phi) * e2;
}

double NuArc::length() const {
    return pieces[0].length() + pieces[1].length() + pieces[2].length();
}

Eigen::Vector3d NuArc::point(double t) const {
    double s = std::clamp(speed * (t - t_begin), 0.0, length());
    for (const auto& arc : pieces) {
        if (s <= arc.length() || &arc == &pieces[2]) {
            double phi = std::min(s / std::sin(arc.rho), arc.sweep);
            return arc.point(phi);
        }
        s -= arc.length();
    }
    return pieces[2].point(pieces[2].sweep);
}

double NuArc::curvature(double t) const {
    return t > t_mm && t < t_pp ? K1 : K0;
}

namespace {

// Wraps into (0, 2 pi]; angles indistinguishable from 0 count as a full
// turn, matching the forward traversal of the construction.
double wrap_positive(double phi) {
    while (phi <= 1e-9) phi += 2 * kPi;
    while (phi > 2 * kPi + 1e-9) phi -= 2 * kPi;
    return phi;
}

Eigen::Vector3d project_unit(const Eigen::Vector3d& x, const Eigen::Vector3d& axis) {
    Eigen::Vector3d w = x - x.dot(axis) * axis;
    double nw = w.norm();
    if (nw < 1e-12) throw VerificationError("tangent-circles construction degenerate");
    return w / nw;
}

}  // namespace

NuArc tangent_circles_arc(const FrameCurve& frames, const CurvatureProfile2& profile, int i_begin,
               int i_center, int i_end, double K0, double K1) {
    if (frames.sphere_dim != 2) throw PreconditionError("tangent_circles_arc: expects S^2 frames");
    if (!(0 <= i_begin && i_begin < i_center && i_center < i_end && i_end <= frames.grid.n))
        throw PreconditionError("tangent_circles_arc: bad window indices");
    if (!(K0 > 0) || !(K1 > K0)) throw PreconditionError("tangent_circles_arc: need K1 > K0 > 0");
    for (int i = i_begin; i <= i_end; ++i)
        if (!(K1 > profile.kappa[i]) || !(profile.kappa[i] > K0))
            throw PreconditionError("tangent_circles_arc: curvature sandwich fails on the window");

    NuArc nu;
    nu.t_begin = frames.grid.t(i_begin);
    nu.t_end = frames.grid.t(i_end);
    nu.K0 = K0;
    nu.K1 = K1;
    const double rho0 = std::atan2(1.0, K0);
    const double rho1 = std::atan2(1.0, K1);

    Eigen::Vector3d ga = frames.frames[i_begin].col(0), Ta = frames.frames[i_begin].col(1),
                    na = frames.frames[i_begin].col(2);
    Eigen::Vector3d gb = frames.frames[i_end].col(0), Tb = frames.frames[i_end].col(1),
                    nb = frames.frames[i_end].col(2);
    Eigen::Vector3d cm = std::cos(rho0) * ga + std::sin(rho0) * na;
    Eigen::Vector3d cp = std::cos(rho0) * gb + std::sin(rho0) * nb;
    if ((cm - cp).norm() < 1e-10)
        throw VerificationError("tangent_circles_arc: flanking circles coincide (window too narrow)");
    if ((cm + cp).norm() < 1e-10)
        throw VerificationError("tangent_circles_arc: flanking circles antipodal");

    // The inner circle's center is equidistant (rho0 - rho1) from both
    // flanking centers; closed-form solve on the bisector great circle.
    Eigen::Vector3d mid = (cm + cp).normalized();
    Eigen::Vector3d axis = cm.cross(cp).normalized();
    double cos_half = mid.dot(cm);
    double cos_theta = std::cos(rho0 - rho1) / cos_half;
    if (std::abs(cos_theta) > 1)
        throw VerificationError(
            "tangent_circles_arc: tangency infeasible, window too wide for curvature bounds (residual " +
            std::to_string(std::abs(cos_theta) - 1) + ")");
    double sin_theta = std::sqrt(1 - cos_theta * cos_theta);
    Eigen::Vector3d gc = frames.frames[i_center].col(0), nc = frames.frames[i_center].col(2);
    Eigen::Vector3d u0 = std::cos(rho1) * gc + std::sin(rho1) * nc;
    Eigen::Vector3d c1a = cos_theta * mid + sin_theta * axis;
    Eigen::Vector3d c1b = cos_theta * mid - sin_theta * axis;
    Eigen::Vector3d c1 = c1a.dot(u0) >= c1b.dot(u0) ? c1a : c1b;

    Eigen::Vector3d pm = std::cos(rho0) * cm + std::sin(rho0) * project_unit(c1, cm);
    Eigen::Vector3d pp = std::cos(rho0) * cp + std::sin(rho0) * project_unit(c1, cp);

    // First flank: starts at the window's left end, forward to tangency.
    CircleArc& a0 = nu.pieces[0];
    a0.center = cm;
    a0.rho = rho0;
    a0.e1 = project_unit(ga, cm);
    a0.e2 = Ta;
    a0.sweep = wrap_positive(std::atan2(pm.dot(a0.e2), pm.dot(a0.e1)));

    // Inner circle: basis aligned so the arc starts at the tangency
    // point with the incoming tangent.
    CircleArc& a1 = nu.pieces[1];
    a1.center = c1;
    a1.rho = rho1;
    a1.e1 = project_unit(pm, c1);
    Eigen::Vector3d tm = a0.tangent(a0.sweep);
    a1.e2 = project_unit(tm - tm.dot(a1.e1) * a1.e1, c1);
    if (std::abs(tm.dot(c1)) > 1e-6 || std::abs(tm.dot(a1.e1)) > 1e-6)
        throw VerificationError("tangent_circles_arc: tangency mismatch at inner circle entry (residual " +
                                std::to_string(std::max(std::abs(tm.dot(c1)),
                                                        std::abs(tm.dot(a1.e1)))) +
                                ")");
    a1.sweep = wrap_positive(std::atan2(pp.dot(a1.e2), pp.dot(a1.e1)));

    // Second flank: ends at the window's right end with its tangent.
    CircleArc& a2 = nu.pieces[2];
    a2.center = cp;
    a2.rho = rho0;
    Eigen::Vector3d f1 = project_unit(gb, cp);
    double phi_end = std::atan2(pp.dot(Tb), pp.dot(f1));
    if (phi_end >= -1e-9) phi_end -= 2 * kPi;
    a2.e1 = std::cos(phi_end) * f1 + std::sin(phi_end) * Tb;
    a2.e2 = -std::sin(phi_end) * f1 + std::cos(phi_end) * Tb;
    a2.sweep = -phi_end;
    Eigen::Vector3d exit = a1.tangent(a1.sweep);
    if ((exit - a2.tangent(0)).norm() > 1e-6)
        throw VerificationError("tangent_circles_arc: tangency mismatch at inner circle exit (residual " +
                                std::to_string((exit - a2.tangent(0)).norm()) + ")");

    const double s0 = a0.length(), s1 = a1.length();
    nu.speed = nu.length() / (nu.t_end - nu.t_begin);
    nu.t_mm = nu.t_begin + s0 / nu.speed;
    nu.t_pp = nu.t_begin + (s0 + s1) / nu.speed;

    std::vector<double> L = cumulative_length(profile.v, profile.grid);
    nu.len_gamma = L[i_end] - L[i_begin];
    double len_left = L[i_center] - L[i_begin];
    double len_right = L[i_end] - L[i_center];
    nu.t_m = nu.t_begin + len_left / nu.speed;
    nu.t_p = nu.t_end - len_right / nu.speed;
    nu.residual_m = std::abs(nu.speed * (nu.t_m - nu.t_begin) - len_left);
    nu.residual_p = std::abs(nu.speed * (nu.t_end - nu.t_p) - len_right);
    double margin = std::min({nu.t_m - nu.t_mm, nu.t_p - nu.t_m, nu.t_pp - nu.t_p});
    if (!(margin > 0))
        throw VerificationError(
            "tangent_circles_arc: length-matching times leave the inner circle (residual " +
            std::to_string(margin) + ")");
    return nu;
}

SharpResult sharp(const CurvePair& pair, int i_center, int k, double K0, double K1) {
    ConditionResult l = check_condition(pair, PairCondition::L);
    if (!l.holds)
        throw PreconditionError("sharp: condition (L) fails at t = " +
                                std::to_string(l.witness_t));
    const Grid& grid = pair.grid;
    const int a = i_center - 2 * k, b = i_center + 2 * k;
    if (k < 1 || a < 0 || b > grid.n)
        throw PreconditionError("sharp: surgery window leaves [0, 1]");

    double min_kl = pair.kappa_l[a], max_kl = pair.kappa_l[a], max_kr = 0;
    for (int i = a; i <= b; ++i) {
        min_kl = std::min(min_kl, pair.kappa_l[i]);
        max_kl = std::max(max_kl, pair.kappa_l[i]);
        max_kr = std::max(max_kr, std::abs(pair.kappa_r[i]));
    }
    if (K0 == 0) {
        if (!(min_kl > max_kr))
            throw VerificationError("sharp: no sandwich constant K0 below the window curvature");
        K0 = (min_kl + max_kr) / 2;
    }
    if (K1 == 0) K1 = 2 * max_kl - K0;
    if (!(K1 > max_kl) || !(min_kl > K0) || !(K0 > max_kr))
        throw VerificationError("sharp: sandwich constants not found for the window");

    CurvatureProfile2 left{grid, pair.v, pair.kappa_l};
    FrameCurve frames = integrate_frame(lambda_samples(left), grid);

    SharpResult out;
    out.K0 = K0;
    out.K1 = K1;
    out.nu = tangent_circles_arc(frames, left, a, i_center, b, K0, K1);

    out.c1 = 2 * kPi * std::sin(out.nu.pieces[1].rho);
    double gap = out.nu.speed * (out.nu.t_p - out.nu.t_m);
    out.c2 = out.c1 + gap / 2;
    if (!(out.c2 < 2 * kPi))
        throw VerificationError("sharp: doubled-circle length reaches 2 pi");
    out.K2 = sigma_curvature(out.c2);
    out.turns = 2 + gap / out.c1;

    std::vector<double> L = cumulative_length(pair.v, grid);
    const double s0 = out.nu.pieces[0].length();
    const double s2 = out.nu.pieces[2].length();
    const double eps = static_cast<double>(k) / grid.n;

    auto push = [](std::vector<ProfileSegment2>& segs, ProfileSegment2 s) {
        if (s.i1 > s.i0) segs.push_back(std::move(s));
    };
    auto original = [&](int lo, int hi, const std::vector<double>& kap) {
        ProfileSegment2 s{lo, hi, {}, {}};
        s.v.assign(pair.v.begin() + lo, pair.v.begin() + hi + 1);
        s.kappa.assign(kap.begin() + lo, kap.begin() + hi + 1);
        return s;
    };

    // Flanks: both curves double their speed; the right keeps its own
    // curvature while the left follows nu, switching from the outer to
    // the inner circle at the tangency arc length.
    auto flank = [&](int lo, int hi, int off, bool from_end) {
        ProfileSegment2 sl{lo, hi, {}, {}}, sr{lo, hi, {}, {}};
        for (int i = lo; i <= hi; ++i) {
            int j = 2 * i - off;
            sl.v.push_back(2 * pair.v[j]);
            sr.v.push_back(2 * pair.v[j]);
            sr.kappa.push_back(pair.kappa_r[j]);
            double pos = from_end ? L[b] - L[j] : L[j] - L[a];
            double flank_len = from_end ? s2 : s0;
            sl.kappa.push_back(pos <= flank_len ? K0 : K1);
        }
        return std::make_pair(sl, sr);
    };

    push(out.segments_l, original(0, a, pair.kappa_l));
    push(out.segments_r, original(0, a, pair.kappa_r));
    auto [fl, fr] = flank(a, i_center - k, a, false);
    push(out.segments_l, fl);
    push(out.segments_r, fr);

    // Middle block: the left stays on the inner circle for slightly more
    // than two turns, the right inserts the reflected doubled circle.
    ProfileSegment2 ml{i_center - k, i_center + k, {}, {}};
    ProfileSegment2 mr = ml;
    double vm = out.c2 / eps;
    ml.v.assign(2 * k + 1, vm);
    ml.kappa.assign(2 * k + 1, K1);
    mr.v.assign(2 * k + 1, vm);
    mr.kappa.assign(2 * k + 1, -out.K2);
    push(out.segments_l, ml);
    push(out.segments_r, mr);

    auto [gl, gr] = flank(i_center + k, b, b, true);
    push(out.segments_l, gl);
    push(out.segments_r, gr);
    push(out.segments_l, original(b, grid.n, pair.kappa_l));
    push(out.segments_r, original(b, grid.n, pair.kappa_r));

    out.pair.grid = grid;
    out.pair.v.assign(grid.size(), 0.0);
    out.pair.kappa_l.assign(grid.size(), 0.0);
    out.pair.kappa_r.assign(grid.size(), 0.0);
    for (const auto& s : out.segments_l)
        for (int i = s.i0; i <= s.i1; ++i) {
            out.pair.v[i] = s.v[i - s.i0];
            out.pair.kappa_l[i] = s.kappa[i - s.i0];
        }
    for (const auto& s : out.segments_r)
        for (int i = s.i0; i <= s.i1; ++i) out.pair.kappa_r[i] = s.kappa[i - s.i0];
    for (int i = 0; i <= grid.n; ++i)
        if (i <= a || i >= b) {
            out.pair.v[i] = pair.v[i];
            out.pair.kappa_l[i] = pair.kappa_l[i];
            out.pair.kappa_r[i] = pair.kappa_r[i];
        }
    out.pair.z_l = integrate_segments(out.segments_l, grid).lift3.back();
    out.pair.z_r = integrate_segments(out.segments_r, grid).lift3.back();
    return out;
}

CurvatureProfile2 relax_reflect(const CurvatureProfile2& gamma, const RRParams& params) {
    if (!(params.epsilon > 0) || params.epsilon > 0.3 || !(params.delta > 0) ||
        params.delta > 0.3)
        throw PreconditionError("relax_reflect: epsilon and delta must lie in (0, 0.3]");
    for (int i = 0; i < gamma.grid.size(); ++i)
        if (!(gamma.kappa[i] > 0))
            throw PreconditionError("relax_reflect: input must be locally convex");
    FrameCurve fc = integrate_frame(lambda_samples(gamma), gamma.grid);
    if (fc.lift3.back().dist(UnitQuaternion()) > 1e-6 &&
        fc.lift3.back().dist(-UnitQuaternion()) > 1e-6)
        throw PreconditionError("relax_reflect: input frame must close to +-1");

    CurvatureProfile2 out;
    out.grid = gamma.grid;
    out.v = gamma.v;
    double relax = params.delta * params.delta * params.epsilon * params.epsilon;
    for (int i = 0; i < gamma.grid.size(); ++i) {
        double t = gamma.grid.t(i);
        bool near_end = t < params.epsilon || t > 1 - params.epsilon;
        out.kappa.push_back(-gamma.kappa[i] + (near_end ? params.delta : relax));
    }
    return out;
}

HatPair hat_pair(const CurvatureProfile2& gamma, const RRParams& params) {
    CurvatureProfile2 rr = relax_reflect(gamma, params);
    HatPair out;
    out.pair.grid = gamma.grid;
    out.pair.v = gamma.v;
    out.pair.kappa_l = gamma.kappa;
    out.pair.kappa_r = rr.kappa;
    out.pair.z_l = integrate_frame(lambda_samples(gamma), gamma.grid).lift3.back();
    out.pair.z_r = integrate_frame(lambda_samples(rr), rr.grid).lift3.back();

    CurvatureProfile3 composed = compose3(out.pair);
    FrameCurve fc = integrate_frame(lambda_samples(composed), composed.grid);
    out.cell = classify_spin4(fc.lift4.back());
    return out;
}

}  // namespace spincurve
