#include "spincurve/spin_cover.hpp"

#include <cmath>

namespace spincurve {

Eigen::Matrix3d pi3_matrix(const Quaternion& z) {
    const double a = z.a, b = z.b, c = z.c, d = z.d;
    Eigen::Matrix3d m;
    m << a * a + b * b - c * c - d * d, -2 * a * d + 2 * b * c, 2 * a * c + 2 * b * d,
         2 * a * d + 2 * b * c, a * a - b * b + c * c - d * d, -2 * a * b + 2 * c * d,
         -2 * a * c + 2 * b * d, 2 * a * b + 2 * c * d, a * a - b * b - c * c + d * d;
    return m;
}

Eigen::Matrix4d pi4_matrix(const Quaternion& zl, const Quaternion& zr) {
    const double al = zl.a, bl = zl.b, cl = zl.c, dl = zl.d;
    const double ar = zr.a, br = zr.b, cr = zr.c, dr = zr.d;
    Eigen::Matrix4d m;
    m.col(0) << al * ar + bl * br + cl * cr + dl * dr,
                -al * br + bl * ar - cl * dr + dl * cr,
                -al * cr + bl * dr + cl * ar - dl * br,
                -al * dr - bl * cr + cl * br + dl * ar;
    m.col(1) << al * br - bl * ar - cl * dr + dl * cr,
                al * ar + bl * br - cl * cr - dl * dr,
                al * dr + bl * cr + cl * br + dl * ar,
                -al * cr + bl * dr - cl * ar + dl * br;
    m.col(2) << al * cr + bl * dr - cl * ar - dl * br,
                -al * dr + bl * cr + cl * br - dl * ar,
                al * ar - bl * br + cl * cr - dl * dr,
                al * br + bl * ar + cl * dr + dl * cr;
    m.col(3) << al * dr - bl * cr + cl * br - dl * ar,
                al * cr + bl * dr + cl * ar + dl * br,
                -al * br - bl * ar + cl * dr + dl * cr,
                al * ar - bl * br - cl * cr + dl * dr;
    return m;
}

Eigen::Matrix3d pi3(const UnitQuaternion& z) {
    Quaternion q = z.full();
    if (std::abs(q.norm() - 1.0) > tol().unit_input)
        throw PreconditionError("pi3: input quaternion is not unit norm");
    return pi3_matrix(q);
}

Eigen::Matrix4d pi4(const Spin4Element& z) {
    Quaternion l = z.zl.full(), r = z.zr.full();
    if (std::abs(l.norm() - 1.0) > tol().unit_input || std::abs(r.norm() - 1.0) > tol().unit_input)
        throw PreconditionError("pi4: input component is not unit norm");
    return pi4_matrix(l, r);
}

Eigen::Matrix3d dpi3(const ImaginaryQuaternion& h) {
    Eigen::Matrix3d m;
    m << 0, -2 * h.d, 2 * h.c,
         2 * h.d, 0, -2 * h.b,
         -2 * h.c, 2 * h.b, 0;
    return m;
}

Eigen::Matrix4d dpi4(const ImaginaryQuaternion& hl, const ImaginaryQuaternion& hr) {
    const double bl = hl.b, cl = hl.c, dl = hl.d;
    const double br = hr.b, cr = hr.c, dr = hr.d;
    Eigen::Matrix4d m;
    m << 0, -(bl - br), -(cl - cr), -(dl - dr),
         bl - br, 0, -(dl + dr), cl + cr,
         cl - cr, dl + dr, 0, -(bl + br),
         dl - dr, -cl - cr, bl + br, 0;
    return m;
}

bool is_special_orthogonal(const Eigen::MatrixXd& R, double tolerance) {
    if (R.rows() != R.cols()) return false;
    Eigen::MatrixXd err = R.transpose() * R - Eigen::MatrixXd::Identity(R.rows(), R.cols());
    if (err.cwiseAbs().maxCoeff() > tolerance) return false;
    return std::abs(R.determinant() - 1.0) <= tolerance * 10;
}

UnitQuaternion so3_to_spin(const Eigen::Matrix3d& R, const UnitQuaternion& hint) {
    if (!is_special_orthogonal(R))
        throw PreconditionError("so3_to_spin: input is not special orthogonal");
    const double t = R.trace();
    Quaternion q;
    // Shepperd extraction: branch on the largest diagonal-based pivot.
    double w2 = 1 + t, x2 = 1 + 2 * R(0, 0) - t, y2 = 1 + 2 * R(1, 1) - t, z2 = 1 + 2 * R(2, 2) - t;
    if (w2 >= x2 && w2 >= y2 && w2 >= z2) {
        double a = 0.5 * std::sqrt(w2);
        q = {a, (R(2, 1) - R(1, 2)) / (4 * a), (R(0, 2) - R(2, 0)) / (4 * a),
             (R(1, 0) - R(0, 1)) / (4 * a)};
    } else if (x2 >= y2 && x2 >= z2) {
        double b = 0.5 * std::sqrt(x2);
        q = {(R(2, 1) - R(1, 2)) / (4 * b), b, (R(0, 1) + R(1, 0)) / (4 * b),
             (R(0, 2) + R(2, 0)) / (4 * b)};
    } else if (y2 >= z2) {
        double c = 0.5 * std::sqrt(y2);
        q = {(R(0, 2) - R(2, 0)) / (4 * c), (R(0, 1) + R(1, 0)) / (4 * c), c,
             (R(1, 2) + R(2, 1)) / (4 * c)};
    } else {
        double d = 0.5 * std::sqrt(z2);
        q = {(R(1, 0) - R(0, 1)) / (4 * d), (R(0, 2) + R(2, 0)) / (4 * d),
             (R(1, 2) + R(2, 1)) / (4 * d), d};
    }
    UnitQuaternion z = UnitQuaternion::normalized(q);
    if (z.dist(hint) > (-z).dist(hint)) z = -z;
    if ((pi3_matrix(z.full()) - R).cwiseAbs().maxCoeff() > tol().round_trip)
        throw VerificationError("so3_to_spin: round trip exceeded tolerance");
    return z;
}

namespace {

// Constant linear map T with vec(pi4_matrix(zl, zr)) = T vec(zl zr^T),
// assembled once from the explicit column formulas and LU-factored.
const Eigen::FullPivLU<Eigen::Matrix<double, 16, 16>>& pi4_outer_lu() {
    static const auto lu = [] {
        Eigen::Matrix<double, 16, 16> T;
        for (int j = 0; j < 4; ++j) {
            for (int i = 0; i < 4; ++i) {
                Quaternion el{i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0,
                              i == 2 ? 1.0 : 0.0, i == 3 ? 1.0 : 0.0};
                Quaternion er{j == 0 ? 1.0 : 0.0, j == 1 ? 1.0 : 0.0,
                              j == 2 ? 1.0 : 0.0, j == 3 ? 1.0 : 0.0};
                Eigen::Matrix4d m = pi4_matrix(el, er);
                T.col(4 * j + i) = Eigen::Map<Eigen::Matrix<double, 16, 1>>(m.data());
            }
        }
        return Eigen::FullPivLU<Eigen::Matrix<double, 16, 16>>(T);
    }();
    return lu;
}

}  // namespace

Spin4Element so4_to_spin(const Eigen::Matrix4d& R, const Spin4Element& hint) {
    if (!is_special_orthogonal(R))
        throw PreconditionError("so4_to_spin: input is not special orthogonal");
    Eigen::Matrix4d Rc = R;
    Eigen::Matrix<double, 16, 1> vecR = Eigen::Map<Eigen::Matrix<double, 16, 1>>(Rc.data());
    Eigen::Matrix<double, 16, 1> m = pi4_outer_lu().solve(vecR);
    Eigen::Matrix4d M = Eigen::Map<Eigen::Matrix4d>(m.data());  // M = zl zr^T

    // Dominant right factor: each row of M = zl zr^T is a multiple of
    // zr^T, so start from the largest row and polish with power steps.
    int best = 0;
    for (int i = 1; i < 4; ++i)
        if (M.row(i).norm() > M.row(best).norm()) best = i;
    Eigen::Vector4d v = M.row(best).transpose();
    if (v.norm() < 1e-8)
        throw VerificationError("so4_to_spin: rank-one extraction degenerated");
    v.normalize();
    Eigen::Matrix4d MtM = M.transpose() * M;
    for (int it = 0; it < 50; ++it) {
        Eigen::Vector4d w = MtM * v;
        double n = w.norm();
        if (n < 1e-14)
            throw VerificationError("so4_to_spin: rank-one extraction degenerated");
        w /= n;
        // Fix the sign freedom inside the iteration to detect convergence.
        if (w.dot(v) < 0) w = -w;
        double change = (w - v).norm();
        v = w;
        if (change < 1e-12) break;
    }
    Eigen::Vector4d u = M * v;
    double un = u.norm();
    if (un < 1e-8)
        throw VerificationError("so4_to_spin: rank-one extraction degenerated");
    u /= un;
    Spin4Element z{UnitQuaternion::normalized({u(0), u(1), u(2), u(3)}),
                   UnitQuaternion::normalized({v(0), v(1), v(2), v(3)})};
    if (z.dist(hint) > (-z).dist(hint)) z = -z;
    if ((pi4_matrix(z.zl.full(), z.zr.full()) - R).cwiseAbs().maxCoeff() > tol().round_trip)
        throw VerificationError("so4_to_spin: round trip exceeded tolerance");
    return z;
}

}  // namespace spincurve
