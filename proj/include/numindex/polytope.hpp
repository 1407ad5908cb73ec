#pragma once

#include "numindex/lp.hpp"
#include "numindex/rational.hpp"

namespace numindex {

/** Halfspace intersection {x : normals·x <= offsets}, row per halfspace. */
struct HRep {
    RatMat normals;
    RatVec offsets;

    Eigen::Index dim() const { return normals.cols(); }
    Eigen::Index size() const { return normals.rows(); }
};

/** HRep with every offset equal to one, as produced by gauge unit balls. */
HRep unit_hrep(const RatMat& normals);

/**
 * Exact vertex enumeration for a bounded, full-dimensional halfspace
 * intersection.  Incremental double description: start from a bounding
 * box obtained by 2·dim exact LPs, cut one halfspace at a time, generate
 * crossing points on edges certified by the combinatorial adjacency test,
 * and recompute tight sets exactly for every new point.  Output rows are
 * deduplicated and sorted lexicographically, so equal polytopes yield
 * byte-identical vertex lists.
 *
 * Throws UnboundedInput when some direction is unbounded and
 * PreconditionError when the region is not full-dimensional.
 */
RatMat enumerate_vertices(const HRep& h);

/** Exact membership against a halfspace description. */
bool lp_member(const RatVec& point, const HRep& h);

/** Exact membership against the convex hull of the given rows. */
bool lp_member(const RatVec& point, const RatMat& vrep_rows);

/**
 * Canonical V-representation: drop duplicates, drop every point inside
 * the hull of the others (one exact membership LP per candidate), sort
 * lexicographically.
 */
RatMat canonical_hull(const RatMat& candidate_rows);

/** True when {x : h} contains a ball around some point. */
bool full_dimensional(const HRep& h);

}   // namespace numindex
