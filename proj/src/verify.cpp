#include "spincurve/verify.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>

#include <unsupported/Eigen/MatrixFunctions>

#include "spincurve/bruhat.hpp"
#include "spincurve/decompose.hpp"
#include "spincurve/errors.hpp"
#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/spin_cover.hpp"
#include "spincurve/surgery.hpp"

namespace spincurve {

namespace {

constexpr double kPi = 3.14159265358979323846;

double elapsed_s(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

UnitQuaternion uq(double a, double b, double c, double d) {
    return UnitQuaternion::normalized({a, b, c, d});
}

UnitQuaternion random_unit(std::mt19937& rng) {
    std::normal_distribution<double> g;
    return UnitQuaternion::normalized({g(rng), g(rng), g(rng), g(rng)});
}

// Smooth positive 1-periodic sample array: a constant plus a few Fourier
// modes with bounded total amplitude.
std::vector<double> random_smooth(std::mt19937& rng, const Grid& grid, double lo, double hi) {
    std::uniform_real_distribution<double> ub(lo, hi), ua(-1, 1);
    double base = ub(rng);
    double budget = 0.35 * std::min(base, base - lo + 0.1 * base);
    std::vector<double> amp, phase;
    for (int m = 0; m < 3; ++m) {
        amp.push_back(ua(rng) * budget / 3);
        phase.push_back(ua(rng) * kPi);
    }
    std::vector<double> out;
    for (int i = 0; i < grid.size(); ++i) {
        double t = grid.t(i), x = base;
        for (int m = 0; m < 3; ++m) x += amp[m] * std::cos(2 * kPi * (m + 1) * t + phase[m]);
        out.push_back(x);
    }
    return out;
}

CurvatureProfile2 random_profile2(std::mt19937& rng, const Grid& grid) {
    return {grid, random_smooth(rng, grid, 2.0, 5.0), random_smooth(rng, grid, 0.8, 2.5)};
}

CurvatureProfile3 random_profile3(std::mt19937& rng, const Grid& grid) {
    return {grid, random_smooth(rng, grid, 2.0, 5.0), random_smooth(rng, grid, 0.8, 2.5),
            random_smooth(rng, grid, 0.5, 1.5)};
}

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double max_const_dev(const std::vector<double>& a, double c) {
    double m = 0;
    for (double x : a) m = std::max(m, std::abs(x - c));
    return m;
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

// --- suites ---------------------------------------------------------------

CheckResult check_covering_maps(unsigned seed) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(seed);
    double err_cover = 0, err_hom = 0, err_ker = 0;

    for (int trial = 0; trial < 10000; ++trial) {
        UnitQuaternion z = random_unit(rng), zl = random_unit(rng), zr = random_unit(rng);
        Eigen::Matrix3d R = pi3(z);
        const Quaternion basis3[3] = {kQuatI, kQuatJ, kQuatK};
        for (int c = 0; c < 3; ++c) {
            Quaternion im = quat_mul(quat_mul(z.full(), basis3[c]), z.full().conj());
            err_cover = std::max({err_cover, std::abs(R(0, c) - im.b), std::abs(R(1, c) - im.c),
                                  std::abs(R(2, c) - im.d)});
        }
        Eigen::Matrix4d S = pi4({zl, zr});
        const Quaternion basis4[4] = {kQuatOne, kQuatI, kQuatJ, kQuatK};
        for (int c = 0; c < 4; ++c) {
            Quaternion q = quat_mul(quat_mul(zl.full(), basis4[c]), zr.full().conj());
            err_cover = std::max({err_cover, std::abs(S(0, c) - q.a), std::abs(S(1, c) - q.b),
                                  std::abs(S(2, c) - q.c), std::abs(S(3, c) - q.d)});
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        UnitQuaternion z1 = random_unit(rng), z2 = random_unit(rng);
        UnitQuaternion w1 = random_unit(rng), w2 = random_unit(rng);
        err_hom = std::max(err_hom,
                           (pi3(unit_mul(z1, z2)) - pi3(z1) * pi3(z2)).cwiseAbs().maxCoeff());
        err_hom = std::max(
            err_hom, (pi4({unit_mul(z1, z2), unit_mul(w1, w2)}) - pi4({z1, w1}) * pi4({z2, w2}))
                         .cwiseAbs()
                         .maxCoeff());
        err_ker = std::max(err_ker, (pi3(-z1) - pi3(z1)).cwiseAbs().maxCoeff());
        err_ker = std::max(err_ker, (pi4(-Spin4Element{z1, w1}) - pi4({z1, w1}))
                                        .cwiseAbs()
                                        .maxCoeff());
    }
    double secs = elapsed_s(t0);
    bool ok = err_cover <= 1e-12 && err_hom <= 1e-10 && err_ker <= 1e-10 && secs < 1.0;
    return {"covering_maps", ok,
            "cover " + fmt(err_cover) + ", hom " + fmt(err_hom) + ", ker " + fmt(err_ker) +
                ", " + fmt(secs) + " s"};
}

CheckResult check_example_endpoints(unsigned) {
    auto t0 = std::chrono::steady_clock::now();
    struct Case {
        CurvatureProfile3 profile;
        Spin4Element target;
    };
    const Case cases[] = {
        {gamma_1_1_profile(), {uq(-1, 0, 0, 0), uq(0, 0, 0, 1)}},
        {gamma_1_2_profile(), {uq(1, 0, 0, 0), uq(-1, 0, 0, 0)}},
        {omega3_profile(), {uq(1, 0, 0, 0), uq(1, 0, 0, 0)}},
    };
    double worst = 0;
    for (const auto& c : cases) {
        FrameCurve fc = integrate_frame(lambda_samples(c.profile), c.profile.grid);
        worst = std::max(worst, fc.lift4.back().dist(c.target));
    }
    double secs = elapsed_s(t0);
    bool ok = worst <= 1e-6 && secs < 3.0;
    return {"example_endpoints", ok, "max endpoint distance " + fmt(worst) + ", " + fmt(secs) + " s"};
}

CheckResult check_example_coordinates(unsigned) {
    Grid grid;
    SampledCurve closed_form = omega3(grid);
    auto [integrated, fc] = curve_from_profile(omega3_profile(grid));
    double worst = 0;
    for (int i = 0; i < grid.size(); ++i)
        worst = std::max(worst,
                         (closed_form.points[i] - integrated.points[i]).cwiseAbs().maxCoeff());
    return {"example_coordinates", worst <= 1e-6, "max pointwise error " + fmt(worst)};
}

CheckResult check_decomposition_examples(unsigned) {
    const double s3 = std::sqrt(3.0);
    struct Case {
        CurvatureProfile3 profile;
        double v;
    };
    const Case cases[] = {
        {gamma_1_1_profile(), kPi},
        {gamma_1_2_profile(), 2 * kPi},
        {omega3_profile(), 4 * kPi},
    };
    double worst = 0;
    for (const auto& c : cases) {
        CurvePair pair = decompose3(c.profile);
        worst = std::max({worst, max_const_dev(pair.v, c.v), max_const_dev(pair.kappa_l, s3),
                          max_const_dev(pair.kappa_r, 0.0)});
    }
    CurvePair g11 = decompose3(gamma_1_1_profile());
    double lift_err =
        std::max(g11.z_l.dist(uq(-1, 0, 0, 0)), g11.z_r.dist(uq(0, 0, 0, 1)));
    bool ok = worst <= 1e-8 && lift_err <= 1e-6;
    return {"decomposition_examples", ok,
            "profile dev " + fmt(worst) + ", lift dist " + fmt(lift_err)};
}

CheckResult check_round_trips(unsigned seed) {
    std::mt19937 rng(seed + 1);
    Grid grid;
    double err_fwd = 0, err_rev = 0, err_log = 0;
    for (int trial = 0; trial < 100; ++trial) {
        CurvatureProfile3 p = random_profile3(rng, grid);
        CurvatureProfile3 back = compose3(decompose3(p));
        err_fwd = std::max({err_fwd, max_diff(p.v, back.v), max_diff(p.kappa, back.kappa),
                            max_diff(p.tau, back.tau)});

        CurvePair pair;
        pair.grid = grid;
        pair.v = random_smooth(rng, grid, 2.0, 5.0);
        pair.kappa_l = random_smooth(rng, grid, 1.0, 2.0);
        std::vector<double> gap = random_smooth(rng, grid, 0.5, 1.5);
        for (int i = 0; i < grid.size(); ++i) pair.kappa_r.push_back(pair.kappa_l[i] - gap[i]);
        CurvePair pair_back = decompose3(compose3(pair));
        err_rev = std::max({err_rev, max_diff(pair.v, pair_back.v),
                            max_diff(pair.kappa_l, pair_back.kappa_l),
                            max_diff(pair.kappa_r, pair_back.kappa_r)});
    }
    for (int trial = 0; trial < 5; ++trial) {
        CurvatureProfile3 p3 = random_profile3(rng, grid);
        std::vector<Eigen::MatrixXd> lam = lambda_samples(p3);
        std::vector<Eigen::MatrixXd> ld = log_derivative(integrate_frame(lam, grid));
        for (int i = 0; i < grid.size(); ++i)
            err_log = std::max(err_log, (lam[i] - ld[i]).cwiseAbs().maxCoeff());
        CurvatureProfile2 p2 = random_profile2(rng, grid);
        lam = lambda_samples(p2);
        ld = log_derivative(integrate_frame(lam, grid));
        for (int i = 0; i < grid.size(); ++i)
            err_log = std::max(err_log, (lam[i] - ld[i]).cwiseAbs().maxCoeff());
    }
    bool ok = err_fwd <= 1e-10 && err_rev <= 1e-10 && err_log <= 1e-5;
    return {"round_trips", ok,
            "compose/decompose " + fmt(err_fwd) + ", reverse " + fmt(err_rev) +
                ", log-derivative " + fmt(err_log)};
}

CheckResult check_bruhat_suite(unsigned seed) {
    auto t0 = std::chrono::steady_clock::now();
    std::mt19937 rng(seed + 2);
    std::vector<SignedPermutation> b3 = enumerate_b_plus(2);
    std::vector<SignedPermutation> b4 = enumerate_b_plus(3);
    if (b3.size() != 24 || b4.size() != 192)
        return {"bruhat_suite", false,
                "|B3+| = " + std::to_string(b3.size()) + ", |B4+| = " + std::to_string(b4.size())};

    std::uniform_real_distribution<double> diag(0.5, 2.0), off(-1.0, 1.0);
    std::normal_distribution<double> g;
    auto random_up = [&](int n) {
        Eigen::MatrixXd u = Eigen::MatrixXd::Zero(n, n);
        for (int i = 0; i < n; ++i) {
            u(i, i) = diag(rng);
            for (int j = i + 1; j < n; ++j) u(i, j) = off(rng);
        }
        return u;
    };
    int fail_fact = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& pool = trial % 2 == 0 ? b3 : b4;
        const SignedPermutation& p = pool[rng() % pool.size()];
        int n = static_cast<int>(p.perm.size());
        Eigen::MatrixXd m = random_up(n) * p.matrix() * random_up(n);
        if (!(classify_so(qr_positive(m)).rep == p)) ++fail_fact;
    }
    int fail_inv = 0;
    for (int trial = 0; trial < 100; ++trial) {
        int n = trial % 2 == 0 ? 3 : 4;
        Eigen::MatrixXd gm(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) gm(i, j) = g(rng);
        Eigen::MatrixXd q = qr_positive(gm);
        if (q.determinant() < 0) q.col(0).swap(q.col(1));
        SignedPermutation base = classify_so(q).rep;
        SignedPermutation moved = classify_so(qr_positive(random_up(n) * q * random_up(n))).rep;
        if (!(base == moved)) ++fail_inv;
    }
    int fail_top = 0;
    const std::vector<int> reversed{3, 2, 1, 0};
    for (const auto& p : b4) {
        bool top = inv_count(p) == 6;
        if (top != (p.perm == reversed)) ++fail_top;
        if (inv_count(p) > 6) ++fail_top;
    }
    double secs = elapsed_s(t0);
    bool ok = fail_fact == 0 && fail_inv == 0 && fail_top == 0 && secs < 5.0;
    return {"bruhat_suite", ok,
            "factorization misses " + std::to_string(fail_fact) + ", invariance misses " +
                std::to_string(fail_inv) + ", top-cell misses " + std::to_string(fail_top) +
                ", " + fmt(secs) + " s"};
}

CheckResult check_relaxed_pair_cell(unsigned) {
    auto columns = [](double eps, double delta) {
        double ce = std::cos(eps), se = std::sin(eps) / std::sqrt(2.0);
        double cd = std::cos(delta), sd = std::sin(delta);
        Eigen::Matrix4d m;
        m.col(0) << ce, (-cd + sd) * se, 0, (cd + sd) * se;
        m.col(1) << (cd - sd) * se, ce, (-cd - sd) * se, 0;
        m.col(2) << 0, (cd + sd) * se, ce, (cd - sd) * se;
        m.col(3) << (-cd - sd) * se, 0, (-cd + sd) * se, ce;
        return m;
    };
    auto frame = [](double eps, double delta) {
        double th = kPi / 4 + delta;
        ImaginaryQuaternion hr{-std::cos(th), 0, std::sin(th)};
        return pi4({UnitQuaternion(), exp_im(hr, -eps)});
    };
    double err = (frame(0.1, 0.1) - columns(0.1, 0.1)).cwiseAbs().maxCoeff();

    const SignedPermutation want({3, 2, 1, 0}, {1, -1, 1, -1});
    bool cells_ok = true;
    for (double eps : {0.05, 0.1, 0.2, 0.3})
        for (double delta : {0.05, 0.1, 0.2, 0.3})
            if (!(classify_so(frame(eps, delta)).rep == want)) cells_ok = false;
    bool ok = err <= 1e-10 && cells_ok;
    return {"relaxed_pair_cell", ok,
            "column error " + fmt(err) + (cells_ok ? ", cell stable over sweep" : ", CELL DRIFT")};
}

CheckResult check_surgery_suite(unsigned seed) {
    std::mt19937 rng(seed + 3);
    Grid grid;
    std::ostringstream why;
    bool ok = true;
    auto expect = [&](bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            why << (why.str().empty() ? "" : "; ") << what;
        }
    };

    // Loop insertion: final lift and local convexity preserved.
    double worst_lift = 0;
    std::uniform_int_distribution<int> pick(2 * grid.n / 32, grid.n - 2 * grid.n / 32);
    try {
        for (int trial = 0; trial < 12; ++trial) {
            CurvatureProfile2 g = random_profile2(rng, grid);
            SurgerySpec spec;
            spec.t0 = trial == 0 ? 0.0 : trial == 1 ? 1.0 : grid.t(pick(rng));
            SpliceResult2 res = add_loops(g, spec);
            FrameCurve in_fc = integrate_frame(lambda_samples(g), grid);
            FrameCurve out_fc = integrate_segments(res.segments, grid);
            worst_lift = std::max(worst_lift, out_fc.lift3.back().dist(in_fc.lift3.back()));
            for (double k : res.profile.kappa) expect(k > 0, "loop insertion broke convexity");
        }
        for (int trial = 0; trial < 8; ++trial) {
            CurvatureProfile3 g = random_profile3(rng, grid);
            SurgerySpec spec;
            spec.t0 = trial == 0 ? 0.0 : trial == 1 ? 1.0 : grid.t(pick(rng));
            SpliceResult3 res = add_loops(g, spec);
            FrameCurve in_fc = integrate_frame(lambda_samples(g), grid);
            FrameCurve out_fc = integrate_segments(res.segments, grid);
            worst_lift = std::max(worst_lift, out_fc.lift4.back().dist(in_fc.lift4.back()));
            for (double k : res.profile.kappa) expect(k > 0, "loop insertion broke convexity");
            for (double t : res.profile.tau) expect(t > 0, "loop insertion broke torsion sign");
        }
        expect(worst_lift <= 1e-6, "loop insertion moved the final lift by " + fmt(worst_lift));
    } catch (const std::exception& e) {
        expect(false, std::string("loop insertion: ") + e.what());
    }

    // Relaxation-reflection: exact piecewise definition and condition (L).
    try {
        CurvatureProfile2 g = sigma_profile(kPi, 1, grid);
        RRParams params;
        CurvatureProfile2 rr = relax_reflect(g, params);
        const double s3 = std::sqrt(3.0);
        for (int i = 0; i < grid.size(); ++i) {
            expect(rr.v[i] == g.v[i], "relaxed speed not bitwise equal");
            double t = grid.t(i);
            double want = t < 0.1 || t > 0.9 ? -s3 + 0.1 : -s3 + 1e-4;
            expect(std::abs(rr.kappa[i] - want) <= 1e-12, "relaxed curvature off definition");
            double sum = rr.kappa[i] + g.kappa[i];
            expect(std::abs(sum - 0.1) <= 1e-12 || std::abs(sum - 1e-4) <= 1e-12,
                   "curvature sum outside {delta, delta^2 eps^2}");
        }
        CurvePair hat{grid, g.v, g.kappa, rr.kappa, {}, {}};
        expect(check_condition(hat, PairCondition::L).holds, "(gamma, RR gamma) fails (L)");
    } catch (const std::exception& e) {
        expect(false, std::string("relaxation-reflection: ") + e.what());
    }

    // Tangent circles on a constant-curvature arc.
    try {
        CurvatureProfile2 g = sigma_profile(kPi, 1, grid);
        FrameCurve fc = integrate_frame(lambda_samples(g), grid);
        const double k0 = std::sqrt(3.0);
        NuArc nu = tangent_circles_arc(fc, g, grid.n / 2 - 64, grid.n / 2, grid.n / 2 + 64, k0 / 2, 2 * k0);
        Eigen::Vector3d start = fc.frames[grid.n / 2 - 64].col(0);
        Eigen::Vector3d end = fc.frames[grid.n / 2 + 64].col(0);
        expect((nu.point(nu.t_begin) - start).norm() <= 1e-8, "nu start point mismatch");
        expect((nu.point(nu.t_end) - end).norm() <= 1e-8, "nu end point mismatch");
        expect((nu.pieces[0].tangent(0) - Eigen::Vector3d(fc.frames[grid.n / 2 - 64].col(1)))
                       .norm() <= 1e-8,
               "nu start tangent mismatch");
        expect(nu.curvature((nu.t_begin + nu.t_mm) / 2) == nu.K0, "outer curvature wrong");
        expect(nu.curvature((nu.t_mm + nu.t_pp) / 2) == nu.K1, "inner curvature wrong");
        expect(nu.length() > nu.len_gamma + 1e-12 * nu.length(), "outside curve not longer");
        expect(nu.residual_m <= 1e-8 && nu.residual_p <= 1e-8,
               "length-matching residual " + fmt(std::max(nu.residual_m, nu.residual_p)));
        expect(nu.t_mm < nu.t_m && nu.t_m < nu.t_p && nu.t_p < nu.t_pp,
               "matched times leave the inner circle");
    } catch (const std::exception& e) {
        expect(false, std::string("tangent circles: ") + e.what());
    }

    // The #-operation on the canonical quadruple-loop pair.
    try {
        CurvePair pair = decompose3(omega3_profile(grid));
        SharpResult res = sharp(pair, grid.n / 2, grid.n / 32);
        expect(check_condition(res.pair, PairCondition::L).holds, "sharp output fails (L)");
        for (int i = 0; i <= grid.n; ++i)
            if (i <= grid.n / 2 - 2 * (grid.n / 32) || i >= grid.n / 2 + 2 * (grid.n / 32)) {
                expect(res.pair.v[i] == pair.v[i] && res.pair.kappa_l[i] == pair.kappa_l[i] &&
                           res.pair.kappa_r[i] == pair.kappa_r[i],
                       "sharp output differs outside the window");
            }
        expect(res.pair.kappa_l[grid.n / 2] == res.K1 &&
                   res.pair.kappa_r[grid.n / 2] == -res.K2 && res.K1 > res.K2,
               "sharp middle-block curvatures wrong");
        expect(res.turns > 2 && res.turns < 3, "sharp turn count " + fmt(res.turns));
        std::vector<double> vl(grid.size(), 0), vr(grid.size(), 0);
        for (const auto& s : res.segments_l)
            for (int i = s.i0; i <= s.i1; ++i) vl[i] = s.v[i - s.i0];
        for (const auto& s : res.segments_r)
            for (int i = s.i0; i <= s.i1; ++i) vr[i] = s.v[i - s.i0];
        expect(max_diff(vl, vr) <= 1e-6, "sharp speed mismatch " + fmt(max_diff(vl, vr)));
    } catch (const std::exception& e) {
        expect(false, std::string("sharp: ") + e.what());
    }

    return {"surgery_suite", ok,
            ok ? "lift deviation " + fmt(worst_lift) + ", all piecewise identities hold"
               : why.str()};
}

CheckResult check_convexity_oracle(unsigned seed) {
    Grid grid;
    bool ok = true;
    std::ostringstream why;
    for (double c : {kPi / 2, kPi, 3 * kPi / 2}) {
        if (!is_convex_arc(sigma(c, 1, grid), 10000, seed)) {
            ok = false;
            why << "rejected convex circle c=" << c << "; ";
        }
        if (is_convex_arc(sigma(c, 2, grid), 10000, seed)) {
            ok = false;
            why << "accepted doubled circle c=" << c << "; ";
        }
    }
    std::vector<double> times;
    std::optional<int> mult = multiconvex_multiplicity(sigma(kPi, 2, grid), &times);
    bool mult_ok = mult.has_value() && *mult == 2;
    bool time_ok = false;
    for (double t : times) time_ok = time_ok || std::abs(t - 0.5) <= 1e-4;
    if (!mult_ok || !time_ok) {
        ok = false;
        why << "multiplicity " << (mult ? std::to_string(*mult) : "none") << ", junction "
            << (times.empty() ? -1.0 : times[0]);
    }
    return {"convexity_oracle", ok, ok ? "circles classified, junction at 0.5" : why.str()};
}

CheckResult check_integrator_convergence(unsigned) {
    Eigen::Matrix4d lambda = gamma_1_lambda(1);
    Eigen::Matrix4d exact = lambda.exp();
    auto error_at = [&](int n) {
        Grid grid(n);
        std::vector<Eigen::MatrixXd> lam(grid.size(), lambda);
        FrameCurve fc = integrate_frame(lam, grid);
        return (fc.frames.back() - exact).cwiseAbs().maxCoeff();
    };
    double e_coarse = error_at(256), e_fine = error_at(2048);
    double order = std::log(e_coarse / e_fine) / std::log(8.0);
    bool ok = order >= 3.8;
    return {"integrator_convergence", ok,
            "error " + fmt(e_coarse) + " -> " + fmt(e_fine) + ", order " + fmt(order)};
}

using CheckFn = CheckResult (*)(unsigned);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> r = {
        {"covering_maps", check_covering_maps},
        {"example_endpoints", check_example_endpoints},
        {"example_coordinates", check_example_coordinates},
        {"decomposition_examples", check_decomposition_examples},
        {"round_trips", check_round_trips},
        {"bruhat_suite", check_bruhat_suite},
        {"relaxed_pair_cell", check_relaxed_pair_cell},
        {"surgery_suite", check_surgery_suite},
        {"convexity_oracle", check_convexity_oracle},
        {"integrator_convergence", check_integrator_convergence},
    };
    return r;
}

}  // namespace

std::vector<std::string> check_names() {
    std::vector<std::string> names;
    for (const auto& [name, fn] : registry()) names.push_back(name);
    return names;
}

CheckResult run_check(const std::string& name, unsigned seed) {
    for (const auto& [n, fn] : registry())
        if (n == name) return fn(seed);
    throw PreconditionError("unknown check: " + name);
}

std::vector<CheckResult> run_all_checks(unsigned seed) {
    std::vector<CheckResult> out;
    for (const auto& [name, fn] : registry()) out.push_back(fn(seed));
    return out;
}

}  // namespace spincurve
