#pragma once

#include <Eigen/Dense>

#include "spincurve/quaternion.hpp"

namespace spincurve {

// Double cover Spin3 = S^3 -> SO3, z |-> (h |-> z h z̄) on Im H = R^3.
Eigen::Matrix3d pi3(const UnitQuaternion& z);

// Double cover Spin4 = S^3 x S^3 -> SO4, (zl, zr) |-> (q |-> zl q z̄r).
Eigen::Matrix4d pi4(const Spin4Element& z);

// Bilinear extensions of the covering-map formulas to arbitrary
// coefficient quadruples; used to build the linear inversion table and
// by the tests.
Eigen::Matrix3d pi3_matrix(const Quaternion& z);
Eigen::Matrix4d pi4_matrix(const Quaternion& zl, const Quaternion& zr);

// Differentials of the covers at the identity.
Eigen::Matrix3d dpi3(const ImaginaryQuaternion& h);
Eigen::Matrix4d dpi4(const ImaginaryQuaternion& hl, const ImaginaryQuaternion& hr);

// Local inversion of pi3: the preimage of R closer to hint.
UnitQuaternion so3_to_spin(const Eigen::Matrix3d& R, const UnitQuaternion& hint);

// Local inversion of pi4 via the precomputed 16x16 linear map and a
// rank-one extraction; the sign is resolved by hint.
Spin4Element so4_to_spin(const Eigen::Matrix4d& R, const Spin4Element& hint);

// || R^T R - I ||_max and determinant checks.
bool is_special_orthogonal(const Eigen::MatrixXd& R, double tolerance = tol().rotation_input);

}  // namespace spincurve
