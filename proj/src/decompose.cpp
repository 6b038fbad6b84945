#include "spincurve/decompose.hpp"

#include <cmath>

#include "spincurve/errors.hpp"
#include "spincurve/frames_ode.hpp"

namespace spincurve {

BBDTriple bbd_from_profile(const CurvatureProfile3& p) {
    BBDTriple t;
    t.grid = p.grid;
    for (int i = 0; i < p.grid.size(); ++i) {
        if (!(p.v[i] > 0)) throw PreconditionError("bbd_from_profile: speed must be positive");
        if (!(p.kappa[i] > 0))
            throw PreconditionError("bbd_from_profile: curvature must be positive at t = " +
                                    std::to_string(p.grid.t(i)));
        t.d.push_back(p.v[i] * p.kappa[i] / 2);
        t.b_l.push_back(p.v[i] * (p.tau[i] + 1) / 2);
        t.b_r.push_back(p.v[i] * (p.tau[i] - 1) / 2);
    }
    return t;
}

CurvePair decompose3(const CurvatureProfile3& p) {
    BBDTriple t = bbd_from_profile(p);
    CurvePair pair;
    pair.grid = p.grid;
    std::vector<ImaginaryQuaternion> hl, hr;
    for (int i = 0; i < p.grid.size(); ++i) {
        pair.v.push_back(p.v[i] * p.kappa[i]);
        pair.kappa_l.push_back((p.tau[i] + 1) / p.kappa[i]);
        pair.kappa_r.push_back((p.tau[i] - 1) / p.kappa[i]);
        hl.push_back({t.b_l[i], 0, t.d[i]});
        hr.push_back({t.b_r[i], 0, t.d[i]});
    }
    pair.z_l = integrate_spin3(hl, p.grid).back();
    pair.z_r = integrate_spin3(hr, p.grid).back();
    return pair;
}

CurvatureProfile3 compose3(const CurvePair& pair) {
    ConditionResult g = check_condition(pair, PairCondition::G);
    if (!g.holds)
        throw PreconditionError("compose3: condition (G) fails at t = " +
                                std::to_string(g.witness_t));
    CurvatureProfile3 p;
    p.grid = pair.grid;
    for (int i = 0; i < pair.grid.size(); ++i) {
        double diff = pair.kappa_l[i] - pair.kappa_r[i];
        p.kappa.push_back(2 / diff);
        p.tau.push_back((pair.kappa_l[i] + pair.kappa_r[i]) / diff);
        p.v.push_back(pair.v[i] * diff / 2);
    }
    return p;
}

ConditionResult check_condition(const CurvePair& pair, PairCondition which) {
    for (int i = 0; i < pair.grid.size(); ++i) {
        if (!(pair.v[i] > 0)) return {false, pair.grid.t(i)};
        double bound = which == PairCondition::G ? pair.kappa_r[i] : std::abs(pair.kappa_r[i]);
        if (!(pair.kappa_l[i] > bound)) return {false, pair.grid.t(i)};
    }
    return {true, 0};
}

}  // namespace spincurve
