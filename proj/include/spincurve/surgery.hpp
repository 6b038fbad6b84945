#pragma once

#include <array>
#include <vector>

#include "spincurve/bruhat.hpp"
#include "spincurve/curve.hpp"

namespace spincurve {

// Loop-insertion window [t0 - 2 eps, t0 + 2 eps]; both parameters are
// rounded to the nearest grid node before cutting.
struct SurgerySpec {
    double t0 = 0.5;
    double epsilon = 1.0 / 32;
};

struct RRParams {
    double epsilon = 0.1;
    double delta = 0.1;
};

// One smooth piece of a spliced profile, sampled on grid indices
// i0..i1 inclusive; adjacent segments share a node but may disagree
// there (the profile jumps at the seams).
struct ProfileSegment2 {
    int i0 = 0, i1 = 0;
    std::vector<double> v, kappa;
};

struct ProfileSegment3 {
    int i0 = 0, i1 = 0;
    std::vector<double> v, kappa, tau;
};

struct SpliceResult2 {
    CurvatureProfile2 profile;  // flattened samples; seam-adjacent outer values win
    std::vector<ProfileSegment2> segments;
};

struct SpliceResult3 {
    CurvatureProfile3 profile;
    std::vector<ProfileSegment3> segments;
};

// Frame/lift integration that respects the seams: each segment is
// advanced with its own samples, so the jumps cost no accuracy.
FrameCurve integrate_segments(const std::vector<ProfileSegment2>& segments, const Grid& grid);
FrameCurve integrate_segments(const std::vector<ProfileSegment3>& segments, const Grid& grid);

// Default inserted loops: the doubled circle of length pi on S^2 and the
// quadrupled constant-profile closed curve on S^3; both close with
// identity frame and trivial lift.
CurvatureProfile2 default_loop2(const Grid& grid = Grid());
CurvatureProfile3 default_loop3(const Grid& grid = Grid());

// Insertion of a frame-periodic closed curve omega at t0: the result
// agrees with the input outside the window, traverses the input at
// doubled speed on the flanks and omega (frame-conjugated in place) in
// the middle; the three-case definition covers interior, t0 = 0 and
// t0 = 1 windows.
SpliceResult2 add_loops(const CurvatureProfile2& gamma, const SurgerySpec& spec,
                        const CurvatureProfile2& omega);
SpliceResult3 add_loops(const CurvatureProfile3& gamma, const SurgerySpec& spec,
                        const CurvatureProfile3& omega);
SpliceResult2 add_loops(const CurvatureProfile2& gamma, const SurgerySpec& spec);
SpliceResult3 add_loops(const CurvatureProfile3& gamma, const SurgerySpec& spec);

// Circle arc on S^2: q(phi) = cos(rho) center + sin(rho)(cos(phi) e1 +
// sin(phi) e2), phi in [0, sweep]; geodesic curvature cot(rho) when
// traversed forward.
struct CircleArc {
    Eigen::Vector3d center;
    double rho = 0;
    Eigen::Vector3d e1, e2;
    double sweep = 0;

    double length() const;
    Eigen::Vector3d point(double phi) const;
    Eigen::Vector3d tangent(double phi) const;
};

// Piecewise-circular replacement arc: two flanking arcs of curvature K0
// tangent to the original curve at the window ends, joined by an inner
// tangent arc of curvature K1, parametrized at constant speed over the
// window.
struct NuArc {
    double t_begin = 0, t_end = 0;
    double K0 = 0, K1 = 0;
    std::array<CircleArc, 3> pieces;
    double speed = 0;       // constant ||nu'|| over [t_begin, t_end]
    double len_gamma = 0;   // arc length of the replaced piece
    double t_mm = 0, t_pp = 0;  // circle-switch times
    double t_m = 0, t_p = 0;    // length-matching times
    double residual_m = 0, residual_p = 0;

    double length() const;
    Eigen::Vector3d point(double t) const;
    double curvature(double t) const;
};

// Tangent-circles construction on the window [t(i_begin), t(i_end)] of a
// convex arc with K1 > kappa > K0 there; frames supply the points,
// tangents and normals at the window ends and center.
NuArc tangent_circles_arc(const FrameCurve& frames, const CurvatureProfile2& profile, int i_begin,
               int i_center, int i_end, double K0, double K1);

// The #-operation on a shared-speed pair satisfying condition (L): the
// right curve inserts a reflected doubled circle, the left follows the
// tangent-circles arc with arc-length-matched reparametrizations and an
// inner-circle block of slightly more than two turns.
struct SharpResult {
    CurvePair pair;
    std::vector<ProfileSegment2> segments_l, segments_r;
    NuArc nu;
    double K0 = 0, K1 = 0, K2 = 0;
    double c1 = 0, c2 = 0;  // inner-circle and doubled-circle lengths
    double turns = 0;
};

// Window is [i_center - 2k, i_center + 2k] grid indices; K0 = K1 = 0
// selects the sandwich constants automatically.
SharpResult sharp(const CurvePair& pair, int i_center, int k, double K0 = 0, double K1 = 0);

// Relaxation-reflection: identical speed, curvature -kappa + delta near
// the endpoints and -kappa + delta^2 eps^2 in the middle.
CurvatureProfile2 relax_reflect(const CurvatureProfile2& gamma, const RRParams& params);

struct HatPair {
    CurvePair pair;  // (gamma, RR gamma)
    BruhatCellSpin4 cell;
};

// Pairs a closed-frame locally convex profile with its relaxation-
// reflection and classifies the final spin frame of the composed S^3
// curve.
HatPair hat_pair(const CurvatureProfile2& gamma, const RRParams& params);

}  // namespace spincurve
