#pragma once

#include "numindex/dual_operator.hpp"

#include <utility>
#include <vector>

namespace numindex {

/**
 * A normalized attaining pair: functional(point) = 1 and
 * functional(T·point) = sign · radius with sign in {+1,-1}.
 */
struct AttainmentEntry {
    RatVec point;
    RatVec functional;
    int sign;
};

struct AttainmentSet {
    std::vector<AttainmentEntry> entries;
    Rat radius;
};

/**
 * All normalized admissible pairs where |x*(Tx)| reaches the numerical
 * radius, deduplicated, canonical order.  Throws ZeroRadius when the
 * radius vanishes (the sign is undefined there).
 */
AttainmentSet attainment_set(const Operator& t);

struct BjReport {
    bool orthogonal = false;
    /**
     * When orthogonal: indices into the attainment entries and positive
     * weights summing to one whose weighted value vectors cancel.  At
     * most k+1 weights are nonzero for k perturbation operators.
     */
    std::vector<std::pair<Eigen::Index, Rat>> coefficients;
    /**
     * When not orthogonal: coefficients over the perturbation list and an
     * exact step with radius(T + step·direction) < radius(T).
     */
    RatVec direction;
    Rat step;
    Rat radius_before, radius_after;
};

/**
 * Birkhoff-James orthogonality of T to span{w_ops} in the numerical
 * radius: radius(T + A) >= radius(T) for every A in the span.  Decided
 * exactly: orthogonality holds iff the origin lies in the hull of the
 * attainment value vectors (one exact membership LP); otherwise a
 * separating direction is turned into an explicit descent certificate by
 * exact halving.
 */
BjReport bj_orthogonal_w(const Operator& t, const std::vector<RatMat>& w_ops);

/**
 * The rank-one operator y ↦ x*(y)·x for a unit point and unit functional
 * with x*(x) = mu in {+1,-1}.  Its numerical radius and operator norm
 * are both one.
 */
Operator rank_one_spear(const Space& s, const RatVec& point,
                        const RatVec& functional, int mu);

/** Float variant for Lp spaces; unit checks use the global tolerance. */
Operator rank_one_spear(const Space& s, const Eigen::VectorXd& point,
                        const Eigen::VectorXd& functional, int mu,
                        double eps = 1e-9);

/**
 * True when exactly one tensor functional attains the radius from above:
 * the supporting face of T in the radius dual ball is a singleton.
 */
bool nu_smooth(const Operator& t);

/**
 * True when some operator H strictly separates the given admissible
 * tensor from every other one, i.e. the tensor is an exposed point of
 * the radius dual ball.  Decided by one exact LP with a positive-margin
 * objective.
 */
bool exposed_point_check(const Space& s, const TensorFunctional& tf);

}   // namespace numindex
