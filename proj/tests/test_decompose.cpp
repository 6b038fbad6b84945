#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spincurve/decompose.hpp"
#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"
#include "spincurve/frenet.hpp"

using namespace spincurve;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Smooth profile with positive curvature and varying torsion.
CurvatureProfile3 wavy_profile(const Grid& grid) {
    CurvatureProfile3 p;
    p.grid = grid;
    for (int i = 0; i < grid.size(); ++i) {
        double t = grid.t(i);
        p.v.push_back(3.0 + 0.4 * std::sin(2 * kPi * t));
        p.kappa.push_back(1.5 + 0.3 * std::cos(2 * kPi * t));
        p.tau.push_back(0.8 + 0.5 * std::sin(4 * kPi * t));
    }
    return p;
}

}  // namespace

TEST_CASE("tangent triple satisfies the defining relations") {
    CurvatureProfile3 p = wavy_profile(Grid(128));
    BBDTriple t = bbd_from_profile(p);
    for (int i = 0; i <= 128; ++i) {
        CHECK(t.b_l[i] - t.b_r[i] == doctest::Approx(p.v[i]));
        CHECK(t.b_l[i] + t.b_r[i] == doctest::Approx(p.v[i] * p.tau[i]));
        CHECK(2 * t.d[i] == doctest::Approx(p.v[i] * p.kappa[i]));
    }
}

TEST_CASE("non-positive curvature or speed is rejected") {
    CurvatureProfile3 p = wavy_profile(Grid(64));
    p.kappa[30] = 0.0;
    CHECK_THROWS_AS(bbd_from_profile(p), PreconditionError);
    CHECK_THROWS_AS(decompose3(p), PreconditionError);
    CurvatureProfile3 q = wavy_profile(Grid(64));
    q.v[5] = -1.0;
    CHECK_THROWS_AS(decompose3(q), PreconditionError);
}

TEST_CASE("decomposition of the constant examples") {
    // q = 1: pair speed pi, curvatures (sqrt3, 0)
    CurvePair p1 = decompose3(gamma_1_1_profile(Grid(256)));
    for (int i = 0; i <= 256; ++i) {
        CHECK(p1.v[i] == doctest::Approx(kPi));
        CHECK(p1.kappa_l[i] == doctest::Approx(std::sqrt(3.0)));
        CHECK(p1.kappa_r[i] == doctest::Approx(0.0));
    }
    CHECK(p1.z_l.dist(-UnitQuaternion()) < 1e-6);
    CHECK(p1.z_r.dist(UnitQuaternion(kQuatK)) < 1e-6);

    // q = 2: pair speed 2 pi, left endpoint 1, right endpoint -1
    CurvePair p2 = decompose3(gamma_1_2_profile(Grid(256)));
    CHECK(p2.v[0] == doctest::Approx(2 * kPi));
    CHECK(p2.z_l.dist(UnitQuaternion()) < 1e-6);
    CHECK(p2.z_r.dist(-UnitQuaternion()) < 1e-6);

    // q = 4: pair speed 4 pi, both endpoints back at 1
    CurvePair p4 = decompose3(omega3_profile(Grid(256)));
    CHECK(p4.v[0] == doctest::Approx(4 * kPi));
    CHECK(p4.z_l.dist(UnitQuaternion()) < 1e-6);
    CHECK(p4.z_r.dist(UnitQuaternion()) < 1e-6);
}

TEST_CASE("left and right factors integrate circles of the right length") {
    // the left factor of the q = 1 example is the circle of length pi
    CurvePair pair = decompose3(gamma_1_1_profile(Grid(256)));
    CurvatureProfile2 left{pair.grid, pair.v, pair.kappa_l};
    auto [curve, fc] = curve_from_profile(left);
    SampledCurve direct = sigma(kPi, 1.0, Grid(256));
    for (int i = 0; i <= 256; i += 8)
        CHECK((curve.points[i] - direct.points[i]).cwiseAbs().maxCoeff() < 1e-7);
    // the right factor is a great circle (kappa 0) of length pi: a half turn
    CurvatureProfile2 right{pair.grid, pair.v, pair.kappa_r};
    auto [rcurve, rfc] = curve_from_profile(right);
    CHECK((rcurve.points.back() + rcurve.points.front()).cwiseAbs().maxCoeff() < 1e-7);
}

TEST_CASE("composition inverts decomposition") {
    CurvatureProfile3 p = wavy_profile(Grid(256));
    CurvatureProfile3 back = compose3(decompose3(p));
    for (int i = 0; i <= 256; ++i) {
        CHECK(back.v[i] == doctest::Approx(p.v[i]).epsilon(1e-12));
        CHECK(back.kappa[i] == doctest::Approx(p.kappa[i]).epsilon(1e-12));
        CHECK(back.tau[i] == doctest::Approx(p.tau[i]).epsilon(1e-12));
    }
}

TEST_CASE("decomposition inverts composition") {
    // start from an admissible pair and go the other way around
    CurvePair pair = decompose3(wavy_profile(Grid(256)));
    CurvePair back = decompose3(compose3(pair));
    for (int i = 0; i <= 256; ++i) {
        CHECK(back.v[i] == doctest::Approx(pair.v[i]).epsilon(1e-12));
        CHECK(back.kappa_l[i] == doctest::Approx(pair.kappa_l[i]).epsilon(1e-12));
        CHECK(back.kappa_r[i] == doctest::Approx(pair.kappa_r[i]).epsilon(1e-12));
    }
    CHECK(back.z_l.dist(pair.z_l) < 1e-12);
    CHECK(back.z_r.dist(pair.z_r) < 1e-12);
}

TEST_CASE("pair conditions and their witnesses") {
    Grid grid(64);
    CurvePair pair;
    pair.grid = grid;
    pair.v.assign(grid.size(), kPi);
    pair.kappa_l.assign(grid.size(), 1.0);
    pair.kappa_r.assign(grid.size(), -2.0);
    // kappa_l > kappa_r everywhere, but |kappa_r| exceeds kappa_l
    CHECK(check_condition(pair, PairCondition::G).holds);
    ConditionResult l = check_condition(pair, PairCondition::L);
    CHECK(!l.holds);
    CHECK(l.witness_t == doctest::Approx(0.0));

    // flip one sample to break (G) mid-curve and read the witness
    pair.kappa_r[32] = 1.5;
    ConditionResult g = check_condition(pair, PairCondition::G);
    CHECK(!g.holds);
    CHECK(g.witness_t == doctest::Approx(0.5));
    CHECK_THROWS_AS(compose3(pair), PreconditionError);

    // (L) implies (G)
    CurvePair good = decompose3(gamma_1_1_profile(Grid(64)));
    CHECK(check_condition(good, PairCondition::L).holds);
    CHECK(check_condition(good, PairCondition::G).holds);
}

TEST_CASE("pair lifts agree with the full spin lift of the curve") {
    // the two spin factors of the frame lift are the pair integrations
    CurvatureProfile3 p = wavy_profile(Grid(512));
    FrameCurve fc = integrate_frame(lambda_samples(p), p.grid);
    CurvePair pair = decompose3(p);
    CHECK(pair.z_l.dist(fc.lift4.back().zl) < 1e-6);
    CHECK(pair.z_r.dist(fc.lift4.back().zr) < 1e-6);
}
