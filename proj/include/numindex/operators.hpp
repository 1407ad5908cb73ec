#pragma once

#include "numindex/geometry.hpp"

#include <vector>

namespace numindex {

/**
 * A linear operator on a space, stored as a matrix acting on column
 * vectors.  Entries are either exact rationals or floats; exact entries
 * on a polytope space enable the exact algorithms, anything else is
 * served by the sampling routines.  The space is held by reference and
 * must outlive the operator.
 */
class Operator {
public:
    Operator(const Space& space, RatMat entries);
    Operator(const Space& space, Eigen::MatrixXd entries);

    static Operator identity(const Space& space);
    static Operator zero(const Space& space);

    const Space& space() const { return *space_; }
    Eigen::Index dim() const { return space_->dim(); }

    /** Exact entries on a polytope space, so exact algorithms apply. */
    bool exact() const { return entries_exact_ && space_->is_polytope(); }
    bool entries_exact() const { return entries_exact_; }

    const RatMat& rational() const;
    const Eigen::MatrixXd& floating() const { return float_; }

    RatVec apply(const RatVec& x) const;

private:
    const Space* space_;
    bool entries_exact_;
    RatMat rational_;
    Eigen::MatrixXd float_;
};

/**
 * A pair (x, x*, sigma): x a unit-ball vertex, x* a dual-ball vertex,
 * sigma = x*(x) in {+1, -1}.  These are exactly the extreme-point pairs
 * whose values x*(Tx) determine the numerical radius on a polytope space.
 */
struct AdmissiblePair {
    RatVec point;
    RatVec functional;
    int sign;
};

/** All admissible pairs in canonical (point, functional) order. */
std::vector<AdmissiblePair> admissible_pairs(const Space& s);

/** Exact operator norm: max over ball vertices of the image gauge. */
Rat op_norm(const Operator& t);

/** Exact numerical radius: max over admissible pairs of |x*(Tx)|. */
Rat numerical_radius(const Operator& t);

struct FacetInterval {
    /** The dual vertex x* whose face is scanned. */
    RatVec functional;
    /** Endpoints of {x*(Tx) : x a vertex of the face x* exposes}. */
    Rat lo, hi;
};

struct RangeReport {
    std::vector<FacetInterval> facets;
    /** Hull of all facet intervals. */
    Rat lo, hi;
    Rat radius;
};

/**
 * Exact numerical range data on a polytope space.  Each dual vertex
 * contributes the interval of its face values; the hull of those
 * intervals has max(|lo|, |hi|) equal to the numerical radius.  The
 * pointwise union of the intervals may be a strict subset of the hull.
 */
RangeReport numerical_range(const Operator& t);

}   // namespace numindex
