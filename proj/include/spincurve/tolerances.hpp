#pragma once

namespace spincurve {

// Central numerical tolerances. Defaults are used throughout; callers that
// need different slack pass an explicit value.
struct Tolerances {
    double construction = 1e-12;   // unit-norm check at construction
    double unit_input = 1e-8;      // norm deviation accepted by pi3/pi4
    double orthogonality = 1e-10;  // Q^T Q - I for rotation matrices
    double rotation_input = 1e-8;  // SO check on classify/lift inputs
    double round_trip = 1e-8;      // pi4(so4_to_spin(R)) vs R
    double pivot = 1e-9;           // relative pivot threshold, Bruhat elimination
    double frame_identity = 1e-6;  // ||F(t) - I|| for multiconvex junctions
    double lift_jump = 0.5;        // max ambient step between consecutive lifts
};

inline const Tolerances& tol() {
    static const Tolerances t{};
    return t;
}

}  // namespace spincurve
