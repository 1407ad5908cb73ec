#pragma once

#include "numindex/operators.hpp"
#include "numindex/polytope.hpp"

#include <optional>
#include <vector>

namespace numindex {

/**
 * The rank-one functional T ↦ x*(Tx) on operator space, represented by
 * the matrix outer(i,j) = x*[i]·x[j] so that the action is the trace
 * pairing sum_ij outer(i,j)·T(i,j).  (x, x*) is one representative
 * factorization; distinct pairs can share the same outer matrix.
 */
struct TensorFunctional {
    RatVec point;
    RatVec functional;
    RatMat outer;

    static TensorFunctional from_pair(RatVec point, RatVec functional);

    Rat apply(const RatMat& t) const;

    /** Row-major flattening of `outer`; the canonical dedup key. */
    RatVec flat() const;
};

/**
 * Tensor functionals of all admissible pairs (both signs), deduplicated
 * by outer matrix.  This set is closed under negation and its hull is
 * the dual unit ball of the numerical-radius norm.
 */
std::vector<TensorFunctional> build_M(const Space& s);

/**
 * Tensor functionals of all (vertex, dual vertex) pairs regardless of
 * pairing value, deduplicated.  Their hull is the dual unit ball of the
 * operator norm.
 */
std::vector<TensorFunctional> build_A(const Space& s);

/** Deduplicate by exact outer-matrix equality, canonical order. */
std::vector<TensorFunctional>
dedup_by_G(const std::vector<TensorFunctional>& tensors);

/**
 * A unit ball in operator space (ambient dimension n²) described by the
 * trace pairings |⟨T, G⟩| <= 1 over a generating tensor list.  Vertex
 * enumeration is exact and runs on demand.
 */
class OperatorBallPolytope {
public:
    OperatorBallPolytope(Eigen::Index dim, RatMat normal_rows);

    Eigen::Index dim() const { return dim_; }
    Eigen::Index ambient() const { return dim_ * dim_; }
    const RatMat& normals() const { return normals_; }
    HRep hrep() const { return unit_hrep(normals_); }

    /** Lazily enumerated vertex rows (flattened matrices). */
    const RatMat& vertex_rows();
    bool enumerated() const { return vertices_.has_value(); }

private:
    Eigen::Index dim_;
    RatMat normals_;
    std::optional<RatMat> vertices_;
};

/**
 * Unit ball of the numerical radius in operator space.  Throws
 * DegenerateSeminorm when the radius vanishes on a nonzero operator
 * (then it is only a seminorm and has no ball with interior).
 */
OperatorBallPolytope w_ball(const Space& s);

/** Unit ball of the operator norm in operator space. */
OperatorBallPolytope op_ball(const Space& s);

struct ExtremeDualReport {
    /** The certified extreme functionals of the radius dual ball. */
    std::vector<TensorFunctional> extremes;
    /** Every listed functional is LP-certified extreme in the hull. */
    bool lp_certified = false;
    /** Full cross-check against enumerated polar vertices also ran. */
    bool enumeration_certified = false;
};

/**
 * Extreme points of the dual ball of the numerical-radius norm.  Always
 * certifies that every candidate is an extreme point of the hull (exact
 * LP per candidate).  When `full_enumeration` is set, additionally
 * enumerates the polar of the radius ball by double description and
 * demands exact set equality, throwing CertificationFailure with the
 * symmetric difference otherwise.
 */
ExtremeDualReport extreme_dual_w(const Space& s, bool full_enumeration);

struct CountReport {
    /** Number of admissible (x, x*, sigma) triples. */
    long pair_count = 0;
    /** The same count through the per-vertex support-set formula. */
    long formula_value = 0;
    /** Distinct tensor functionals after outer-matrix dedup. */
    long distinct_count = 0;
};

CountReport count_extremes(const Space& s);

struct HullEquality {
    /**
     * The polar of the radius ball equals the hull of the admissible
     * tensors; certified by one exact LP per tensor (its pairing value
     * over the radius ball must reach exactly one).
     */
    bool w_dual_eq = false;
    /**
     * The polar of the operator-norm ball equals the hull of the
     * admissible tensors; fails exactly when some non-admissible
     * (vertex, dual vertex) tensor lies outside that hull.
     */
    bool op_dual_eq = false;
};

HullEquality verify_hull_equality(const Space& s);

}   // namespace numindex
