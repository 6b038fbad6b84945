#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

#include "spincurve/examples.hpp"
#include "spincurve/frames_ode.hpp"
#include "spincurve/frenet.hpp"
#include "spincurve/spin_cover.hpp"

using namespace spincurve;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("tridiagonal skew predicates") {
    CHECK(is_jacobi(jacobi2(2.0, 3.0)));
    CHECK(is_jacobi(jacobi3(1.0, 2.0, 3.0)));
    CHECK(!is_jacobi(jacobi3(1.0, 2.0, -3.0)));
    CHECK(is_quasi_jacobi(jacobi3(1.0, 2.0, -3.0)));
    CHECK(!is_quasi_jacobi(jacobi3(1.0, -2.0, 3.0)));
    // a dense skew matrix is not tridiagonal
    Eigen::Matrix3d m = jacobi2(1.0, 1.0);
    m(0, 2) = 0.5;
    m(2, 0) = -0.5;
    CHECK(!is_jacobi(m));
    // entries sit on the subdiagonal in order
    Eigen::Matrix4d j = jacobi3(1.0, 2.0, 3.0);
    CHECK(j(1, 0) == 1.0);
    CHECK(j(2, 1) == 2.0);
    CHECK(j(3, 2) == 3.0);
    CHECK((j + j.transpose()).cwiseAbs().maxCoeff() == 0);
}

TEST_CASE("constant log-derivative integrates to the matrix exponential") {
    Eigen::Matrix4d L = gamma_1_lambda(1.0);
    Grid grid(256);
    std::vector<Eigen::MatrixXd> lambda(grid.size(), L);
    FrameCurve fc = integrate_frame(lambda, grid);
    for (int i = 0; i <= grid.n; i += 16) {
        Eigen::Matrix4d want = (grid.t(i) * L).exp();
        CHECK((fc.frames[i] - want).cwiseAbs().maxCoeff() < 1e-8);
        CHECK(is_special_orthogonal(fc.frames[i]));
    }
}

TEST_CASE("integration error decays at fourth order") {
    // fine enough that the stiffness guard never subdivides the steps
    Eigen::Matrix4d L = gamma_1_lambda(1.0);
    Eigen::Matrix4d want = L.exp();
    double prev = 0;
    for (int n : {256, 512, 1024}) {
        Grid grid(n);
        std::vector<Eigen::MatrixXd> lambda(grid.size(), L);
        FrameCurve fc = integrate_frame(lambda, grid);
        double err = (fc.frames.back() - want).cwiseAbs().maxCoeff();
        if (prev > 0) {
            double order = std::log(prev / err) / std::log(2.0);
            CHECK(order > 3.5);
        }
        prev = err;
    }
}

TEST_CASE("spin lift projects onto the integrated frame") {
    CurvatureProfile3 p = omega3_profile(Grid(512));
    FrameCurve fc = integrate_frame(lambda_samples(p), p.grid);
    REQUIRE((int)fc.lift4.size() == p.grid.size());
    for (int i = 0; i <= p.grid.n; i += 32) {
        CHECK((pi4(fc.lift4[i]) - fc.frames[i]).cwiseAbs().maxCoeff() < 1e-7);
    }
    CHECK(fc.lift4.front().dist(Spin4Element()) < 1e-12);
    for (int i = 0; i < p.grid.n; ++i)
        CHECK(fc.lift4[i].dist(fc.lift4[i + 1]) < 0.5);
    // omega3 closes with trivial monodromy: frame I, lift (1, 1)
    CHECK((fc.frames.back() - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() < 1e-7);
    CHECK(fc.lift4.back().dist(Spin4Element()) < 1e-6);
}

TEST_CASE("profile lambda samples carry the intrinsic entries") {
    CurvatureProfile2 p2 = sigma_profile(kPi, 1.0, Grid(64));
    auto l2 = lambda_samples(p2);
    REQUIRE((int)l2.size() == p2.grid.size());
    for (int i = 0; i <= 64; ++i) {
        CHECK(is_jacobi(l2[i]));
        CHECK(l2[i](1, 0) == doctest::Approx(p2.v[i]));
        CHECK(l2[i](2, 1) == doctest::Approx(p2.v[i] * p2.kappa[i]));
    }
    CurvatureProfile3 p3 = gamma_1_1_profile(Grid(64));
    auto l3 = lambda_samples(p3);
    for (int i = 0; i <= 64; ++i) {
        CHECK(is_jacobi(l3[i]));
        CHECK(l3[i](1, 0) == doctest::Approx(p3.v[i]));
        CHECK(l3[i](2, 1) == doctest::Approx(p3.v[i] * p3.kappa[i]));
        CHECK(l3[i](3, 2) == doctest::Approx(p3.v[i] * p3.tau[i]));
    }
}

TEST_CASE("spin tangents push forward to the tridiagonal matrix") {
    Eigen::Matrix3d l2 = jacobi2(3.0, 1.5);
    CHECK((dpi3(spin_tangent3(l2)) - l2).cwiseAbs().maxCoeff() < 1e-14);
    Eigen::Matrix4d l3 = jacobi3(3.0, 1.5, 0.7);
    ImTangentPair h = spin_tangent4(l3);
    CHECK((dpi4(h.h_l, h.h_r) - l3).cwiseAbs().maxCoeff() < 1e-14);
    // the pair shares its k-component and has no j-component
    CHECK(h.h_l.d == doctest::Approx(h.h_r.d));
    CHECK(h.h_l.c == 0.0);
    CHECK(h.h_r.c == 0.0);
}

TEST_CASE("direct spin integration agrees with lifting the frames") {
    CurvatureProfile2 p = sigma_profile(kPi, 1.0, Grid(256));
    auto lambda = lambda_samples(p);
    std::vector<ImaginaryQuaternion> h;
    for (const auto& l : lambda) h.push_back(spin_tangent3(l));
    auto spins = integrate_spin3(h, p.grid);
    FrameCurve fc = integrate_frame(lambda, p.grid);
    REQUIRE(spins.size() == fc.lift3.size());
    for (int i = 0; i <= p.grid.n; i += 16) CHECK(spins[i].dist(fc.lift3[i]) < 1e-6);

    CurvatureProfile3 p3 = gamma_1_2_profile(Grid(256));
    auto lambda3 = lambda_samples(p3);
    std::vector<ImTangentPair> h4;
    for (const auto& l : lambda3) h4.push_back(spin_tangent4(l));
    auto spins4 = integrate_spin4(h4, p3.grid);
    FrameCurve fc3 = integrate_frame(lambda3, p3.grid);
    for (int i = 0; i <= p3.grid.n; i += 16) CHECK(spins4[i].dist(fc3.lift4[i]) < 1e-6);
}

TEST_CASE("log derivative inverts frame integration") {
    CurvatureProfile3 p = omega3_profile(Grid(512));
    auto lambda = lambda_samples(p);
    FrameCurve fc = integrate_frame(lambda, p.grid);
    auto back = log_derivative(fc);
    REQUIRE(back.size() == lambda.size());
    double worst = 0;
    for (size_t i = 0; i < lambda.size(); ++i)
        worst = std::max(worst, (back[i] - lambda[i]).cwiseAbs().maxCoeff());
    CHECK(worst < 1e-5);
}

TEST_CASE("curve recovered from a circle profile is the circle") {
    double c = kPi;
    auto [curve, fc] = curve_from_profile(sigma_profile(c, 1.0, Grid(256)));
    SampledCurve direct = sigma(c, 1.0, Grid(256));
    for (int i = 0; i <= 256; i += 8)
        CHECK((curve.points[i] - direct.points[i]).cwiseAbs().maxCoeff() < 1e-8);
    // the recovered curve is the first frame column
    for (int i = 0; i <= 256; i += 8)
        CHECK((curve.points[i] - fc.frames[i].col(0)).cwiseAbs().maxCoeff() < 1e-12);
    // and its measured profile returns the constants
    CurvatureProfile2 prof = curvature_profile2(curve);
    for (int i = 0; i <= 256; i += 8) {
        CHECK(prof.v[i] == doctest::Approx(c).epsilon(1e-6));
        CHECK(prof.kappa[i] == doctest::Approx(sigma_curvature(c)).epsilon(1e-6));
    }
}

TEST_CASE("advance frames accepts stiff blocks by substepping") {
    // one coarse step across a fast rotation still lands on the exponential
    Eigen::Matrix3d L = jacobi2(40.0, 60.0);
    std::vector<Eigen::MatrixXd> lambda(3, L);
    FrameState state;
    state.G = Eigen::Matrix3d::Identity();
    FrameCurve rec;
    rec.sphere_dim = 2;
    advance_frames(state, lambda, 0.5, rec);
    Eigen::Matrix3d want = (1.0 * L).exp();
    CHECK((state.G - want).cwiseAbs().maxCoeff() < 1e-6);
    REQUIRE(rec.frames.size() == 2);
    REQUIRE(rec.lift3.size() == 2);
    CHECK((pi3(rec.lift3.back()) - want).cwiseAbs().maxCoeff() < 1e-6);
}

TEST_CASE("profile integration validates sizes and speed sign") {
    CurvatureProfile2 bad = sigma_profile(kPi, 1.0, Grid(64));
    bad.v[10] = -1.0;
    CHECK_THROWS_AS(curve_from_profile(bad), PreconditionError);
    CurvatureProfile2 short_v = sigma_profile(kPi, 1.0, Grid(64));
    short_v.v.pop_back();
    CHECK_THROWS_AS(curve_from_profile(short_v), PreconditionError);
}
