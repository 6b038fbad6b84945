#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spincurve/decompose.hpp"
#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/surgery.hpp"

using namespace spincurve;

namespace {

constexpr double kPi = 3.14159265358979323846;

Spin4Element final_lift(const CurvatureProfile3& p) {
    return integrate_frame(lambda_samples(p), p.grid).lift4.back();
}

UnitQuaternion final_lift(const CurvatureProfile2& p) {
    return integrate_frame(lambda_samples(p), p.grid).lift3.back();
}

}  // namespace

TEST_CASE("default loops close with identity frame and trivial lift") {
    CurvatureProfile2 l2 = default_loop2(Grid(512));
    FrameCurve f2 = integrate_frame(lambda_samples(l2), l2.grid);
    CHECK((f2.frames.back() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(f2.lift3.back().dist(UnitQuaternion()) < 1e-6);
    CurvatureProfile3 l3 = default_loop3(Grid(512));
    FrameCurve f3 = integrate_frame(lambda_samples(l3), l3.grid);
    CHECK((f3.frames.back() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(f3.lift4.back().dist(Spin4Element()) < 1e-6);
}

TEST_CASE("interior loop insertion changes nothing outside the window") {
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    SurgerySpec spec;  // t0 = 1/2, eps = 1/32
    SpliceResult2 res = add_loops(gamma, spec);
    REQUIRE((int)res.profile.v.size() == gamma.grid.size());
    int i0 = (int)std::lround((spec.t0 - 2 * spec.epsilon) * 512);
    int i1 = (int)std::lround((spec.t0 + 2 * spec.epsilon) * 512);
    for (int i = 0; i < i0; ++i) {
        CHECK(res.profile.v[i] == gamma.v[i]);
        CHECK(res.profile.kappa[i] == gamma.kappa[i]);
    }
    for (int i = i1 + 1; i <= 512; ++i) {
        CHECK(res.profile.v[i] == gamma.v[i]);
        CHECK(res.profile.kappa[i] == gamma.kappa[i]);
    }
    // the flanks traverse the original at doubled speed
    CHECK(res.profile.v[i0 + 1] == doctest::Approx(2 * gamma.v[i0 + 1]).epsilon(1e-9));
    // segments tile the grid in order
    int cursor = 0;
    for (const auto& seg : res.segments) {
        CHECK(seg.i0 == cursor);
        CHECK(seg.i1 > seg.i0);
        CHECK((int)seg.v.size() == seg.i1 - seg.i0 + 1);
        cursor = seg.i1;
    }
    CHECK(cursor == 512);
}

TEST_CASE("loop insertion preserves the final frame and lift") {
    // interior window on S^2
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    UnitQuaternion want = final_lift(gamma);
    for (double t0 : {0.0, 0.5, 1.0}) {
        SurgerySpec spec{t0, 1.0 / 32};
        SpliceResult2 res = add_loops(gamma, spec);
        FrameCurve fc = integrate_segments(res.segments, gamma.grid);
        CHECK(fc.lift3.back().dist(want) < 1e-6);
    }
    // and on S^3
    CurvatureProfile3 gamma3 = gamma_1_1_profile(Grid(512));
    Spin4Element want3 = final_lift(gamma3);
    for (double t0 : {0.0, 0.5, 1.0}) {
        SurgerySpec spec{t0, 1.0 / 32};
        SpliceResult3 res = add_loops(gamma3, spec);
        FrameCurve fc = integrate_segments(res.segments, gamma3.grid);
        CHECK(fc.lift4.back().dist(want3) < 1e-5);
    }
}

TEST_CASE("loop insertion stays locally convex") {
    CurvatureProfile3 gamma = gamma_1_2_profile(Grid(512));
    SpliceResult3 res = add_loops(gamma, SurgerySpec{0.5, 1.0 / 32});
    for (int i = 0; i <= 512; ++i) {
        CHECK(res.profile.v[i] > 0);
        CHECK(res.profile.kappa[i] > 0);
        CHECK(res.profile.tau[i] > 0);
    }
}

TEST_CASE("loop insertion rejects bad parameters") {
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{0.5, 0.5}), PreconditionError);
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{0.5, 1e-5}), PreconditionError);
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{-0.1, 1.0 / 32}), PreconditionError);
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{0.02, 1.0 / 32}), PreconditionError);
    // a loop that does not close with identity frame is refused
    CurvatureProfile2 open_loop = sigma_profile(kPi, 1.5, Grid(1024));
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{0.5, 1.0 / 32}, open_loop), PreconditionError);
    // closing frame but spin lift -1 is also refused: a single circle
    CurvatureProfile2 odd_loop = sigma_profile(kPi, 1.0, Grid(1024));
    CHECK_THROWS_AS(add_loops(gamma, SurgerySpec{0.5, 1.0 / 32}, odd_loop), PreconditionError);
    // the doubled circle has trivial lift and is accepted
    CurvatureProfile2 even_loop = sigma_profile(kPi, 2.0, Grid(1024));
    CHECK_NOTHROW(add_loops(gamma, SurgerySpec{0.5, 1.0 / 32}, even_loop));
}

TEST_CASE("tangent-circles arc matches position, tangent and curvature") {
    Grid grid(1024);
    CurvatureProfile2 profile = sigma_profile(kPi, 1.0, grid);
    auto [curve, frames] = curve_from_profile(profile);
    int ic = 512, w = 64;
    double K0 = std::sqrt(3.0) / 2, K1 = 2 * std::sqrt(3.0);
    NuArc nu = tangent_circles_arc(frames, profile, ic - w, ic, ic + w, K0, K1);

    // window endpoints and tangents are inherited from the curve
    CHECK((nu.point(nu.t_begin) - curve.points[ic - w]).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((nu.point(nu.t_end) - curve.points[ic + w]).cwiseAbs().maxCoeff() < 1e-8);
    CHECK(nu.t_begin == doctest::Approx(grid.t(ic - w)));
    CHECK(nu.t_end == doctest::Approx(grid.t(ic + w)));

    // switch times are interior and ordered around the matching times
    CHECK(nu.t_begin < nu.t_mm);
    CHECK(nu.t_mm < nu.t_m);
    CHECK(nu.t_m < nu.t_p);
    CHECK(nu.t_p < nu.t_pp);
    CHECK(nu.t_pp < nu.t_end);

    // curvature is K0 on the flanks and K1 in the middle
    CHECK(nu.curvature(0.5 * (nu.t_begin + nu.t_mm)) == doctest::Approx(K0));
    CHECK(nu.curvature(0.5 * (nu.t_mm + nu.t_pp)) == doctest::Approx(K1));
    CHECK(nu.curvature(0.5 * (nu.t_pp + nu.t_end)) == doctest::Approx(K0));

    // the track is continuous at the switch times
    for (double t : {nu.t_mm, nu.t_pp}) {
        Eigen::Vector3d before = nu.point(t - 1e-9);
        Eigen::Vector3d after = nu.point(t + 1e-9);
        CHECK((before - after).cwiseAbs().maxCoeff() < 1e-6);
    }

    // constant speed consistent with the total length
    CHECK(nu.length() == doctest::Approx(nu.speed * (nu.t_end - nu.t_begin)).epsilon(1e-9));
    // the arc lengths are comparable to the replaced piece
    CHECK(nu.len_gamma == doctest::Approx(kPi * 128.0 / 1024).epsilon(1e-6));
    CHECK(nu.length() == doctest::Approx(nu.len_gamma).epsilon(0.05));
    // points stay on the sphere
    for (int s = 0; s <= 20; ++s) {
        double t = nu.t_begin + (nu.t_end - nu.t_begin) * s / 20.0;
        CHECK(std::abs(nu.point(t).norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("tangent-circles arc rejects a failing sandwich") {
    Grid grid(1024);
    CurvatureProfile2 profile = sigma_profile(kPi, 1.0, grid);
    auto [curve, frames] = curve_from_profile(profile);
    // kappa = sqrt3 everywhere: K0 above it violates K0 < kappa
    CHECK_THROWS_AS(tangent_circles_arc(frames, profile, 448, 512, 576, 2.0, 4.0), PreconditionError);
    // K1 below kappa violates kappa < K1
    CHECK_THROWS_AS(tangent_circles_arc(frames, profile, 448, 512, 576, 0.5, 1.0), PreconditionError);
    CHECK_THROWS_AS(tangent_circles_arc(frames, profile, 512, 512, 512, 0.5, 4.0), PreconditionError);
}

TEST_CASE("sharp surgery produces an admissible pair with the announced blocks") {
    CurvePair pair = decompose3(omega3_profile(Grid(1024)));
    int ic = 512, k = 32;
    SharpResult res = sharp(pair, ic, k);

    // sandwich constants frame the window curvature
    for (int i = ic - 2 * k; i <= ic + 2 * k; ++i) {
        CHECK(res.K0 < pair.kappa_l[i]);
        CHECK(res.K1 > pair.kappa_l[i]);
    }
    CHECK(res.c1 == doctest::Approx(2 * kPi * std::sin(std::atan2(1.0, res.K1))));
    CHECK(res.c2 > res.c1);
    CHECK(res.c2 < 2 * kPi);
    CHECK(res.K2 == doctest::Approx(sigma_curvature(res.c2)));
    CHECK(res.turns > 2.0);

    // outside the window the pair is returned untouched
    for (int i = 0; i < ic - 2 * k; ++i) {
        CHECK(res.pair.v[i] == pair.v[i]);
        CHECK(res.pair.kappa_l[i] == pair.kappa_l[i]);
        CHECK(res.pair.kappa_r[i] == pair.kappa_r[i]);
    }
    for (int i = ic + 2 * k + 1; i <= 1024; ++i) {
        CHECK(res.pair.v[i] == pair.v[i]);
        CHECK(res.pair.kappa_l[i] == pair.kappa_l[i]);
        CHECK(res.pair.kappa_r[i] == pair.kappa_r[i]);
    }

    // both segment lists tile the grid and share speed samples
    auto check_tiling = [](const std::vector<ProfileSegment2>& segs) {
        int cursor = 0;
        for (const auto& s : segs) {
            CHECK(s.i0 == cursor);
            cursor = s.i1;
        }
        CHECK(cursor == 1024);
    };
    check_tiling(res.segments_l);
    check_tiling(res.segments_r);

    // the stored lifts match integrating the segment lists
    CHECK(res.pair.z_l.dist(integrate_segments(res.segments_l, pair.grid).lift3.back()) < 1e-12);
    CHECK(res.pair.z_r.dist(integrate_segments(res.segments_r, pair.grid).lift3.back()) < 1e-12);

    // the result still satisfies condition (L)
    CurvePair flat = res.pair;
    CHECK(check_condition(flat, PairCondition::L).holds);
}

TEST_CASE("sharp surgery rejects bad input") {
    CurvePair pair = decompose3(omega3_profile(Grid(1024)));
    CHECK_THROWS_AS(sharp(pair, 16, 32), PreconditionError);  // window leaves [0, 1]
    CurvePair bad = pair;
    bad.kappa_r.assign(bad.kappa_r.size(), 10.0);  // breaks (L)
    CHECK_THROWS_AS(sharp(bad, 512, 32), PreconditionError);
}

TEST_CASE("relaxation-reflection follows its defining formula") {
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    RRParams params{0.1, 0.2};
    CurvatureProfile2 rr = relax_reflect(gamma, params);
    REQUIRE(rr.v.size() == gamma.v.size());
    for (int i = 0; i <= 512; ++i) {
        double t = gamma.grid.t(i);
        CHECK(rr.v[i] == gamma.v[i]);
        double want = (t < params.epsilon || t > 1 - params.epsilon)
                          ? -gamma.kappa[i] + params.delta
                          : -gamma.kappa[i] +
                                params.delta * params.delta * params.epsilon * params.epsilon;
        CHECK(rr.kappa[i] == doctest::Approx(want));
    }
}

TEST_CASE("relaxation-reflection validates its input") {
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    CHECK_THROWS_AS(relax_reflect(gamma, RRParams{0.5, 0.1}), PreconditionError);
    CHECK_THROWS_AS(relax_reflect(gamma, RRParams{0.1, 0.0}), PreconditionError);
    // non-convex input
    CurvatureProfile2 flat = gamma;
    flat.kappa.assign(flat.kappa.size(), -1.0);
    CHECK_THROWS_AS(relax_reflect(flat, RRParams{0.1, 0.1}), PreconditionError);
    // open frame
    CurvatureProfile2 open_arc = sigma_profile(kPi, 0.25, Grid(512));
    CHECK_THROWS_AS(relax_reflect(open_arc, RRParams{0.1, 0.1}), PreconditionError);
}

TEST_CASE("paired relaxation-reflection classifies a stable cell") {
    CurvatureProfile2 gamma = sigma_profile(kPi, 1.0, Grid(512));
    HatPair base = hat_pair(gamma, RRParams{0.1, 0.1});
    CHECK(base.pair.v == gamma.v);
    CHECK(base.pair.kappa_l == gamma.kappa);
    // the cell does not depend on the small parameters
    for (double eps : {0.05, 0.2}) {
        for (double delta : {0.05, 0.3}) {
            HatPair other = hat_pair(gamma, RRParams{eps, delta});
            CHECK(other.cell.rep_so == base.cell.rep_so);
            CHECK(same_cell(other.cell, base.cell));
        }
    }
    // and agrees with classifying the composed curve by hand
    CurvatureProfile3 composed = compose3(base.pair);
    Spin4Element z = final_lift(composed);
    BruhatCellSpin4 direct = classify_spin4(z);
    CHECK(same_cell(direct, base.cell));
}
