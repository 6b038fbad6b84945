#pragma once

#include "spincurve/curve.hpp"

namespace spincurve {

// (b_l, b_r, d) with b_l - b_r = v, 2d = v kappa, b_l + b_r = v tau.
BBDTriple bbd_from_profile(const CurvatureProfile3& p);

// S^3 curve -> shared-speed pair of S^2 curves:
// v_pair = v kappa, kappa_l = (tau + 1)/kappa, kappa_r = (tau - 1)/kappa;
// final lifts are the endpoints of the two spin integrations.
CurvePair decompose3(const CurvatureProfile3& p);

// Inverse map: kappa = 2/(kappa_l - kappa_r),
// tau = (kappa_l + kappa_r)/(kappa_l - kappa_r),
// v = v_pair (kappa_l - kappa_r)/2. Requires condition (G).
CurvatureProfile3 compose3(const CurvePair& pair);

enum class PairCondition { G, L };

struct ConditionResult {
    bool holds = false;
    double witness_t = 0;  // first violating sample when holds is false
};

// (G): kappa_l > kappa_r pointwise; (L): kappa_l > |kappa_r| pointwise.
ConditionResult check_condition(const CurvePair& pair, PairCondition which);

}  // namespace spincurve
