#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spincurve/examples.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/spin_cover.hpp"

using namespace spincurve;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("grid rejects coarse sampling") {
    CHECK_THROWS_AS(Grid(8), PreconditionError);
    Grid g(64);
    CHECK(g.size() == 65);
    CHECK(g.t(32) == doctest::Approx(0.5));
}

TEST_CASE("finite-difference weights reproduce classic stencils") {
    // central first derivative on three nodes
    auto w = fd_weights(0.0, {-1.0, 0.0, 1.0}, 1);
    CHECK(w[0] == doctest::Approx(-0.5));
    CHECK(w[1] == doctest::Approx(0.0));
    CHECK(w[2] == doctest::Approx(0.5));
    // second derivative
    auto w2 = fd_weights(0.0, {-1.0, 0.0, 1.0}, 2);
    CHECK(w2[0] == doctest::Approx(1.0));
    CHECK(w2[1] == doctest::Approx(-2.0));
    CHECK(w2[2] == doctest::Approx(1.0));
    // order-zero weights are Lagrange interpolation coefficients
    auto w0 = fd_weights(0.5, {0.0, 1.0, 2.0, 3.0}, 0);
    double sum = w0[0] + w0[1] + w0[2] + w0[3];
    CHECK(sum == doctest::Approx(1.0));
    // exact for cubics: interpolate t^3 at 0.5
    double val = 0;
    for (int i = 0; i < 4; ++i) val += w0[i] * i * i * i;
    CHECK(val == doctest::Approx(0.125));
}

TEST_CASE("sampled circle has unit points and matching derivatives") {
    SampledCurve s = sigma(kPi, 1.0, Grid(256));
    CHECK(s.sphere_dim == 2);
    for (const auto& p : s.points) CHECK(std::abs(p.norm() - 1.0) < 1e-12);
    // finite differences of the points agree with the exact evaluator
    SampledCurve numeric = s;
    numeric.eval = nullptr;
    for (int i = 0; i <= s.grid.n; i += 17) {
        Eigen::VectorXd exact = curve_derivative(s, i, 1);
        Eigen::VectorXd fd = curve_derivative(numeric, i, 1);
        CHECK((exact - fd).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("circle length and closure") {
    double c = kPi;
    SampledCurve s = sigma(c, 1.0, Grid(512));
    // speed is the constant length
    CurvatureProfile2 prof = curvature_profile2(s);
    for (double v : prof.v) CHECK(v == doctest::Approx(c).epsilon(1e-9));
    double want_kappa = sigma_curvature(c);
    for (double k : prof.kappa) CHECK(k == doctest::Approx(want_kappa).epsilon(1e-9));
    CHECK(want_kappa == doctest::Approx(std::sqrt(3.0)));  // cot(pi/6)
    // one full turn closes the curve
    CHECK((s.points.front() - s.points.back()).cwiseAbs().maxCoeff() < 1e-10);
    // half a turn does not
    SampledCurve half = sigma(c, 0.5, Grid(512));
    CHECK((half.points.front() - half.points.back()).cwiseAbs().maxCoeff() > 0.1);
}

TEST_CASE("coordinate-pair spiral lies on the sphere with positive torsion") {
    SampledCurve xi = xi_curve(3, {0.8, 0.6}, {2.0, 3.0}, Grid(256));
    for (const auto& p : xi.points) CHECK(std::abs(p.norm() - 1.0) < 1e-12);
    CurvatureProfile3 prof = curvature_profile3(xi);
    for (int i = 0; i <= prof.grid.n; ++i) {
        CHECK(prof.v[i] > 0);
        CHECK(prof.kappa[i] > 0);
        CHECK(prof.tau[i] > 0);
    }
    CHECK(is_locally_convex(xi).value);
    // coefficient validation
    CHECK_THROWS_AS(xi_curve(3, {1.0, 1.0}, {2.0, 3.0}), PreconditionError);
    CHECK_THROWS_AS(xi_curve(3, {0.8, 0.6}, {2.0, 2.0}), PreconditionError);
}

TEST_CASE("frames are special orthogonal with first column the curve") {
    SampledCurve xi = xi_curve(3, {0.8, 0.6}, {2.0, 3.0}, Grid(128));
    FrameCurve fc = frenet_frame(xi);
    REQUIRE((int)fc.frames.size() == xi.grid.size());
    for (int i = 0; i <= xi.grid.n; i += 7) {
        const Eigen::MatrixXd& F = fc.frames[i];
        CHECK(is_special_orthogonal(F));
        CHECK((F.col(0) - xi.points[i]).cwiseAbs().maxCoeff() < 1e-10);
        // the lift projects onto the frame
        CHECK((pi4(fc.lift4[i]) - F).cwiseAbs().maxCoeff() < 1e-8);
    }
    // lift continuity: no antipodal jumps between neighbors
    for (int i = 0; i < xi.grid.n; ++i)
        CHECK(fc.lift4[i].dist(fc.lift4[i + 1]) < 0.5);
}

TEST_CASE("frame at an off-grid parameter matches the grid frames") {
    SampledCurve s = sigma(kPi, 1.0, Grid(128));
    FrameCurve fc = frenet_frame(s);
    Eigen::MatrixXd F = frame_at(s, s.grid.t(64));
    CHECK((F - fc.frames[64]).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("local convexity witnesses the first violation") {
    // a circle traversed backwards has negative geodesic curvature
    SampledCurve fwd = sigma(kPi, 1.0, Grid(128));
    SampledCurve back = sample_curve(2, Grid(128), [&](double t, int order) -> Eigen::VectorXd {
        double sgn = (order % 2 == 1) ? -1.0 : 1.0;
        return sgn * fwd.eval(1.0 - t, order);
    });
    ConvexityWitness w = is_locally_convex(back);
    CHECK(!w.value);
    CHECK(w.witness_t == doctest::Approx(0.0));
    CHECK(is_locally_convex(sigma(kPi, 1.0, Grid(128))).value);
}

TEST_CASE("hyperplane test separates single and double circles") {
    for (double c : {kPi / 2, kPi, 3 * kPi / 2}) {
        CHECK(is_convex_arc(sigma(c, 1.0, Grid(256)), 2000));
        CHECK(!is_convex_arc(sigma(c, 2.0, Grid(256)), 2000));
    }
}

TEST_CASE("multiplicity of iterated circles") {
    std::vector<double> times;
    auto m2 = multiconvex_multiplicity(sigma(kPi, 2.0, Grid(512)), &times);
    REQUIRE(m2.has_value());
    CHECK(*m2 == 2);
    // reported junction times include both endpoints
    REQUIRE(times.size() == 3);
    CHECK(times.front() == 0.0);
    CHECK(times.back() == 1.0);
    CHECK(times[1] == doctest::Approx(0.5).epsilon(1e-4));
    auto m3 = multiconvex_multiplicity(sigma(kPi, 3.0, Grid(512)));
    REQUIRE(m3.has_value());
    CHECK(*m3 == 3);
    auto m1 = multiconvex_multiplicity(sigma(kPi, 1.0, Grid(512)));
    REQUIRE(m1.has_value());
    CHECK(*m1 == 1);
}

TEST_CASE("four-dimensional cross product") {
    Eigen::Vector4d e1(1, 0, 0, 0), e2(0, 1, 0, 0), e3(0, 0, 1, 0), e4(0, 0, 0, 1);
    CHECK((cross4(e1, e2, e3) - e4).cwiseAbs().maxCoeff() < 1e-15);
    // orthogonal to all three factors
    std::mt19937 rng(5);
    std::normal_distribution<double> g;
    for (int t = 0; t < 50; ++t) {
        Eigen::Vector4d a = Eigen::Vector4d::NullaryExpr([&](int) { return g(rng); });
        Eigen::Vector4d b = Eigen::Vector4d::NullaryExpr([&](int) { return g(rng); });
        Eigen::Vector4d c = Eigen::Vector4d::NullaryExpr([&](int) { return g(rng); });
        Eigen::Vector4d x = cross4(a, b, c);
        CHECK(std::abs(x.dot(a)) < 1e-12);
        CHECK(std::abs(x.dot(b)) < 1e-12);
        CHECK(std::abs(x.dot(c)) < 1e-12);
        Eigen::Matrix4d M;
        M.col(0) = a; M.col(1) = b; M.col(2) = c; M.col(3) = x;
        CHECK(M.determinant() == doctest::Approx(x.squaredNorm()));
    }
}

TEST_CASE("example profiles match the curves they describe") {
    struct Case { SampledCurve curve; CurvatureProfile3 profile; };
    Case cases[] = {
        {gamma_1_1(Grid(256)), gamma_1_1_profile(Grid(256))},
        {gamma_1_2(Grid(256)), gamma_1_2_profile(Grid(256))},
        {omega3(Grid(256)), omega3_profile(Grid(256))},
    };
    for (const auto& [curve, profile] : cases) {
        CurvatureProfile3 measured = curvature_profile3(curve);
        for (int i = 0; i <= 256; i += 16) {
            CHECK(measured.v[i] == doctest::Approx(profile.v[i]).epsilon(1e-8));
            CHECK(measured.kappa[i] == doctest::Approx(profile.kappa[i]).epsilon(1e-8));
            CHECK(measured.tau[i] == doctest::Approx(profile.tau[i]).epsilon(1e-8));
        }
    }
    // speeds are pi sqrt3, 2 pi sqrt3, 4 pi sqrt3... in the ratio 1:2:4
    CHECK(cases[1].profile.v[0] == doctest::Approx(2 * cases[0].profile.v[0]));
    CHECK(cases[2].profile.v[0] == doctest::Approx(4 * cases[0].profile.v[0]));
}
