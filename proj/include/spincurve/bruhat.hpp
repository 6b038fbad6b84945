#pragma once

#include <vector>

#include <Eigen/Dense>

#include "spincurve/quaternion.hpp"
#include "spincurve/signed_permutation.hpp"

namespace spincurve {

struct BruhatCellSO {
    SignedPermutation rep;
};

struct BruhatCellSpin3 {
    SignedPermutation rep_so;
    UnitQuaternion lift;  // canonical lift reached by path lifting
};

struct BruhatCellSpin4 {
    SignedPermutation rep_so;
    Spin4Element lift;
};

// Elimination certificate: P = U1 * Q * U2 with U1, U2 upper triangular
// with positive diagonal.
struct Elimination {
    SignedPermutation rep;
    Eigen::MatrixXd U1, U2;
};

// Orthonormalization Q = M R^-1 by QR with positive-diagonal R; stays in
// the Bruhat cell of M (right multiplication by an Up+ factor).
Eigen::MatrixXd qr_positive(const Eigen::MatrixXd& M);

// Unique signed permutation representative of the cell containing Q,
// by left-to-right positive-pivot elimination.
BruhatCellSO classify_so(const Eigen::MatrixXd& Q);
Elimination eliminate(const Eigen::MatrixXd& Q);

// Sampled path s in [0,1] |-> Q(s) inside the cell of Q, from Q to the
// signed permutation matrix itself.
std::vector<Eigen::MatrixXd> reduction_path(const Eigen::MatrixXd& Q, int samples = 256);

// Lifted-cell classification: lift the reduction path of the projection,
// starting at z, with adaptive refinement on lift jumps.
BruhatCellSpin3 classify_spin3(const UnitQuaternion& z);
BruhatCellSpin4 classify_spin4(const Spin4Element& z);

bool same_cell(const BruhatCellSpin3& a, const BruhatCellSpin3& b, double tolerance = 1e-6);
bool same_cell(const BruhatCellSpin4& a, const BruhatCellSpin4& b, double tolerance = 1e-6);

}  // namespace spincurve
