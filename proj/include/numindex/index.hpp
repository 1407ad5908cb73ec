#pragma once

#include "numindex/dual_operator.hpp"

#include <cstdint>
#include <optional>

namespace numindex {

/**
 * True when the numerical radius is a norm on operator space, i.e. no
 * nonzero operator pairs to zero with every admissible tensor.
 */
bool is_w_norm(const Space& s);

struct McGregorWitness {
    RatVec point;
    RatVec functional;
    /** The pairing x*(x) with |value| != 1. */
    Rat value;
};

struct McGregorReport {
    bool index_one = false;
    /** First extreme pair violating |x*(x)| = 1, in canonical order. */
    std::optional<McGregorWitness> witness;
};

/**
 * Extreme-pair criterion for numerical index one on a polytope space:
 * the index is one exactly when every (vertex, dual vertex) pairing has
 * absolute value one.
 */
McGregorReport mcgregor(const Space& s);

struct ExactIndexReport {
    /** The numerical index; zero in the degenerate case. */
    Rat value;
    /** True when the radius is only a seminorm. */
    bool degenerate = false;
    /** A nonzero operator with zero radius, present when degenerate. */
    std::optional<RatMat> kernel_witness;
    /** An operator-norm maximizer over the radius unit ball. */
    std::optional<RatMat> extremal_operator;
    /** Its operator norm; the index is its reciprocal. */
    Rat max_op_norm;
};

/**
 * Exact numerical index of a polytope space as the reciprocal of the
 * largest operator norm over the radius unit ball.  The operator norm is
 * the maximum of the trace pairings against the finitely many
 * (vertex, dual vertex) tensors, so the computation is one exact LP over
 * the radius ball per tensor and the maximizer is a ball vertex.  Spaces
 * of dimension above three are refused unless `allow_big` is set.
 */
ExactIndexReport numerical_index_exact(const Space& s, bool allow_big = false);

struct SearchBudget {
    int restarts = 64;
    std::uint64_t seed = 0;
};

struct SearchIndexReport {
    /** Best ratio radius/norm found; an upper bound for the index. */
    double upper_bound = 0.0;
    Eigen::MatrixXd witness;
    /**
     * Exact rational ratio at the witness, present on polytope spaces:
     * the float bound is replaced by this certified value.
     */
    std::optional<Rat> certified_upper;
    int restarts = 0;
    std::uint64_t seed = 0;
    long evaluations = 0;
};

/**
 * Seeded random-restart pattern search minimizing radius/norm in float
 * arithmetic.  On polytope spaces the returned bound is re-evaluated in
 * exact arithmetic at the float witness, so `upper_bound` is a true
 * upper bound for the index, not an estimate.
 */
SearchIndexReport numerical_index_search(const Space& s,
                                         const SearchBudget& budget = {});

struct SpearReport {
    bool holds = false;
    long trials_run = 0;
    /** A counterexample operator when the identity fails. */
    std::optional<RatMat> witness;
    Rat lhs, rhs;
};

/**
 * Tests max(‖Id+A‖, ‖Id−A‖) = 1 + ‖A‖ over seeded random rational
 * operators A, exactly.  The identity holds for every A exactly on
 * index-one spaces, so a single failure is a certificate.
 */
SpearReport spear_check_identity(const Space& s, long trials = 200,
                                 std::uint64_t seed = 0);

}   // namespace numindex
