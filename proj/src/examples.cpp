#include "spincurve/examples.hpp"

#include <cmath>

#include <unsupported/Eigen/MatrixFunctions>

namespace spincurve {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sigma_curvature(double c) {
    double rho = std::asin(c / (2 * kPi));
    return std::cos(rho) / std::sin(rho);
}

SampledCurve sigma(double c, double m, const Grid& grid) {
    if (!(c > 0) || c > 2 * kPi) throw PreconditionError("sigma: need 0 < c <= 2 pi");
    if (!(m > 0)) throw PreconditionError("sigma: need m > 0");
    const double rho = std::asin(c / (2 * kPi));
    const double cr = std::cos(rho), sr = std::sin(rho);
    CurveEvaluator eval = [=](double t, int order) {
        double phase = 2 * kPi * m * t + order * kPi / 2;
        double ck = std::cos(phase), sk = std::sin(phase);
        double f = std::pow(2 * kPi * m, order);
        Eigen::Vector3d p(sr * ck, sk, -cr * ck);
        Eigen::Vector3d out = sr * f * p;
        if (order == 0) out += cr * Eigen::Vector3d(cr, 0, sr);
        return Eigen::VectorXd(out);
    };
    return sample_curve(2, grid, eval);
}

CurvatureProfile2 sigma_profile(double c, double m, const Grid& grid) {
    if (!(c > 0) || c > 2 * kPi) throw PreconditionError("sigma_profile: need 0 < c <= 2 pi");
    CurvatureProfile2 p;
    p.grid = grid;
    double rho = std::asin(c / (2 * kPi));
    double kappa = std::cos(rho) / std::sin(rho);
    p.v.assign(grid.size(), c * m);
    p.kappa.assign(grid.size(), kappa);
    return p;
}

SampledCurve xi_curve(int sphere_dim, const std::vector<double>& c, const std::vector<double>& a,
                      const Grid& grid) {
    double sum = 0;
    for (double ci : c) sum += ci * ci;
    if (std::abs(sum - 1.0) > 1e-10)
        throw PreconditionError("xi_curve: coefficients must satisfy sum c_i^2 = 1");
    for (size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] > 0)) throw PreconditionError("xi_curve: frequencies must be positive");
        for (size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) throw PreconditionError("xi_curve: frequencies must be distinct");
    }
    CurveEvaluator eval;
    if (sphere_dim == 2) {
        if (c.size() != 2 || a.size() != 1)
            throw PreconditionError("xi_curve: S^2 needs c = (c0, c1), a = (a1)");
        eval = [=](double t, int order) {
            Eigen::Vector3d p;
            double f = std::pow(a[0], order);
            p(0) = order == 0 ? c[0] : 0.0;
            p(1) = c[1] * f * std::cos(a[0] * t + order * kPi / 2);
            p(2) = c[1] * f * std::sin(a[0] * t + order * kPi / 2);
            return Eigen::VectorXd(p);
        };
    } else {
        if (c.size() != 2 || a.size() != 2)
            throw PreconditionError("xi_curve: S^3 needs c = (c1, c2), a = (a1, a2)");
        eval = [=](double t, int order) {
            Eigen::Vector4d p;
            for (int k = 0; k < 2; ++k) {
                double f = std::pow(a[k], order);
                p(2 * k) = c[k] * f * std::cos(a[k] * t + order * kPi / 2);
                p(2 * k + 1) = c[k] * f * std::sin(a[k] * t + order * kPi / 2);
            }
            return Eigen::VectorXd(p);
        };
    }
    return sample_curve(sphere_dim, grid, eval);
}

Eigen::Matrix4d gamma_1_lambda(double q) {
    const double s3 = std::sqrt(3.0);
    Eigen::Matrix4d m;
    m << 0, -s3 * q, 0, 0,
         s3 * q, 0, -2 * q, 0,
         0, 2 * q, 0, -s3 * q,
         0, 0, s3 * q, 0;
    return kPi / 2 * m;
}

namespace {

SampledCurve exp_lambda_curve(double q, const Grid& grid) {
    Eigen::Matrix4d lambda = gamma_1_lambda(q);
    // Powers of the constant logarithmic derivative give exact derivatives.
    std::vector<Eigen::Matrix4d> pows{Eigen::Matrix4d::Identity()};
    for (int k = 1; k <= 4; ++k) pows.push_back(pows.back() * lambda);
    CurveEvaluator eval = [lambda, pows](double t, int order) {
        Eigen::Matrix4d e = (t * lambda).exp();
        return Eigen::VectorXd(e * pows[order].col(0));
    };
    return sample_curve(3, grid, eval);
}

CurvatureProfile3 constant_profile3(double v, double kappa, double tau, const Grid& grid) {
    CurvatureProfile3 p;
    p.grid = grid;
    p.v.assign(grid.size(), v);
    p.kappa.assign(grid.size(), kappa);
    p.tau.assign(grid.size(), tau);
    return p;
}

}  // namespace

SampledCurve gamma_1_1(const Grid& grid) { return exp_lambda_curve(1, grid); }
SampledCurve gamma_1_2(const Grid& grid) { return exp_lambda_curve(2, grid); }

SampledCurve omega3(const Grid& grid) {
    CurveEvaluator eval = [](double t, int order) {
        const double s3 = std::sqrt(3.0);
        double p2 = 2 * kPi * t + order * kPi / 2;
        double p6 = 6 * kPi * t + order * kPi / 2;
        double f2 = std::pow(2 * kPi, order), f6 = std::pow(6 * kPi, order);
        double c2 = f2 * std::cos(p2), s2 = f2 * std::sin(p2);
        double c6 = f6 * std::cos(p6), s6 = f6 * std::sin(p6);
        Eigen::Vector4d p;
        p << 0.25 * c6 + 0.75 * c2,
             s3 / 4 * s6 + s3 / 4 * s2,
             s3 / 4 * c2 - s3 / 4 * c6,
             0.75 * s2 - 0.25 * s6;
        return Eigen::VectorXd(p);
    };
    return sample_curve(3, grid, eval);
}

CurvatureProfile3 gamma_1_1_profile(const Grid& grid) {
    return constant_profile3(std::sqrt(3.0) * kPi / 2, 2 / std::sqrt(3.0), 1.0, grid);
}

CurvatureProfile3 gamma_1_2_profile(const Grid& grid) {
    return constant_profile3(std::sqrt(3.0) * kPi, 2 / std::sqrt(3.0), 1.0, grid);
}

CurvatureProfile3 omega3_profile(const Grid& grid) {
    return constant_profile3(2 * std::sqrt(3.0) * kPi, 2 / std::sqrt(3.0), 1.0, grid);
}

}  // namespace spincurve
