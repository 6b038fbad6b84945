#include "spincurve/bruhat.hpp"

#include <cmath>

#include "spincurve/errors.hpp"
#include "spincurve/spin_cover.hpp"
#include "spincurve/tolerances.hpp"

namespace spincurve {

Eigen::MatrixXd qr_positive(const Eigen::MatrixXd& M) {
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(M);
    Eigen::MatrixXd Q = qr.householderQ();
    Eigen::MatrixXd R = qr.matrixQR().triangularView<Eigen::Upper>();
    for (int i = 0; i < M.cols(); ++i)
        if (R(i, i) < 0) Q.col(i) = -Q.col(i);
    return Q;
}

Elimination eliminate(const Eigen::MatrixXd& Q) {
    if (!is_special_orthogonal(Q))
        throw PreconditionError("classify_so: input is not special orthogonal");
    const int n = static_cast<int>(Q.rows());
    Eigen::MatrixXd A = Q;
    Eigen::MatrixXd U1 = Eigen::MatrixXd::Identity(n, n);
    Eigen::MatrixXd U2 = Eigen::MatrixXd::Identity(n, n);
    std::vector<bool> pivoted(n, false);
    std::vector<int> perm(n, -1);
    std::vector<int> signs(n, 1);

    for (int c = 0; c < n; ++c) {
        double colnorm = A.col(c).norm();
        int r = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (!pivoted[i] && std::abs(A(i, c)) > tol().pivot * colnorm) {
                r = i;
                break;
            }
        }
        if (r < 0)
            throw VerificationError("classify_so: all candidate pivots below threshold");
        signs[c] = A(r, c) > 0 ? 1 : -1;

        // Clear the pivot row to the right: col_j += alpha col_c is right
        // multiplication by an Up+ elementary matrix.
        for (int j = c + 1; j < n; ++j) {
            double f = A(r, j) / A(r, c);
            A.col(j) -= f * A.col(c);
            U2.col(j) -= f * U2.col(c);
        }
        // Clear the pivot column above: row_i += alpha row_r with i < r is
        // left multiplication by an Up+ elementary matrix.
        for (int i = 0; i < r; ++i) {
            if (pivoted[i]) continue;
            double f = A(i, c) / A(r, c);
            A.row(i) -= f * A.row(r);
            U1.row(i) -= f * U1.row(r);
        }
        // Positive row scaling makes the pivot exactly +-1.
        double s = 1.0 / std::abs(A(r, c));
        A.row(r) *= s;
        U1.row(r) *= s;

        pivoted[r] = true;
        perm[c] = r;
    }

    // Residues from below-threshold entries must be negligible.
    Eigen::MatrixXd P = Eigen::MatrixXd::Zero(n, n);
    for (int c = 0; c < n; ++c) P(perm[c], c) = signs[c];
    if ((A - P).cwiseAbs().maxCoeff() > 1e-6)
        throw VerificationError("classify_so: elimination left significant residue");

    Elimination e;
    e.rep = SignedPermutation(perm, signs);
    if (e.rep.det() != 1)
        throw VerificationError("classify_so: representative has determinant -1");
    e.U1 = U1;
    e.U2 = U2;
    return e;
}

BruhatCellSO classify_so(const Eigen::MatrixXd& Q) {
    return {eliminate(Q).rep};
}

std::vector<Eigen::MatrixXd> reduction_path(const Eigen::MatrixXd& Q, int samples) {
    Elimination e = eliminate(Q);
    const int n = static_cast<int>(Q.rows());
    Eigen::MatrixXd P = e.rep.matrix();
    Eigen::MatrixXd I = Eigen::MatrixXd::Identity(n, n);
    std::vector<Eigen::MatrixXd> path;
    path.reserve(samples + 1);
    for (int k = 0; k <= samples; ++k) {
        double s = static_cast<double>(k) / samples;
        if (k == samples) {
            path.push_back(P);
            continue;
        }
        // Up+ is convex, so the interpolants stay in the group and the
        // orthonormalized product stays in the cell of Q.
        Eigen::MatrixXd U1s = I + s * (e.U1 - I);
        Eigen::MatrixXd U2s = I + s * (e.U2 - I);
        path.push_back(qr_positive(U1s * Q * U2s));
    }
    return path;
}

namespace {
constexpr int kMaxPathSamples = 8192;
}

BruhatCellSpin3 classify_spin3(const UnitQuaternion& z) {
    Eigen::Matrix3d Q = pi3(z);
    for (int samples = 256; samples <= kMaxPathSamples; samples *= 2) {
        auto path = reduction_path(Q, samples);
        UnitQuaternion cur = z;
        bool ok = true;
        for (size_t k = 1; k < path.size(); ++k) {
            UnitQuaternion next = so3_to_spin(path[k], cur);
            if (next.dist(cur) > tol().lift_jump) {
                ok = false;
                break;
            }
            cur = next;
        }
        if (ok) return {classify_so(Q).rep, cur};
    }
    throw VerificationError("classify_spin3: lift jump persists at maximum path sampling");
}

BruhatCellSpin4 classify_spin4(const Spin4Element& z) {
    Eigen::Matrix4d Q = pi4(z);
    for (int samples = 256; samples <= kMaxPathSamples; samples *= 2) {
        auto path = reduction_path(Q, samples);
        Spin4Element cur = z;
        bool ok = true;
        for (size_t k = 1; k < path.size(); ++k) {
            Spin4Element next = so4_to_spin(path[k], cur);
            if (next.dist(cur) > tol().lift_jump) {
                ok = false;
                break;
            }
            cur = next;
        }
        if (ok) return {classify_so(Q).rep, cur};
    }
    throw VerificationError("classify_spin4: lift jump persists at maximum path sampling");
}

bool same_cell(const BruhatCellSpin3& a, const BruhatCellSpin3& b, double tolerance) {
    return a.rep_so == b.rep_so && a.lift.dist(b.lift) < tolerance;
}

bool same_cell(const BruhatCellSpin4& a, const BruhatCellSpin4& b, double tolerance) {
    return a.rep_so == b.rep_so && a.lift.dist(b.lift) < tolerance;
}

}  // namespace spincurve
