#pragma once

#include "numindex/polytope.hpp"
#include "numindex/rational.hpp"

#include <string>

namespace numindex {

enum class SpaceKind { Polytope, Lp };

/**
 * A finite-dimensional real normed space, described by its closed unit
 * ball.  Two kinds are supported:
 *
 *  - Polytope: the ball is the convex hull of a symmetric, spanning,
 *    exact-rational vertex list.  Construction canonicalizes the list
 *    (deduplicate, drop non-extreme points by exact LP, sort) and derives
 *    the facet description by exact vertex enumeration of the polar, so
 *    every instance carries matched V- and H-representations.
 *
 *  - Lp: the p-norm ball for a float exponent p >= 1.  Exact routines
 *    reject these spaces; sampling routines accept them.
 *
 * Instances are immutable after construction.
 */
class Space {
public:
    /** Canonicalizing constructor; see the class comment for the steps. */
    static Space polytope(std::string name, const RatMat& vertex_rows);

    static Space lp_space(std::string name, Eigen::Index dim, double p);

    /** Unit ball of the max norm: vertices are all sign vectors. */
    static Space cube(Eigen::Index dim);

    /** Unit ball of the sum norm: vertices are the signed basis vectors. */
    static Space cross_polytope(Eigen::Index dim);

    /** Octagon with vertices (±1,0), (0,±1), (±2/3,±2/3). */
    static Space octagon();

    const std::string& name() const { return name_; }
    SpaceKind kind() const { return kind_; }
    Eigen::Index dim() const { return dim_; }
    bool is_polytope() const { return kind_ == SpaceKind::Polytope; }

    /** Exponent of an Lp space; throws for polytopes. */
    double p_exponent() const;

    /** Canonical vertex rows of the unit ball; throws for Lp spaces. */
    const RatMat& vertices() const;

    /**
     * Facet normals of the unit ball, one row per facet, every offset
     * equal to one.  These are exactly the vertices of the dual ball.
     */
    const RatMat& facet_normals() const;

    HRep ball_hrep() const { return unit_hrep(facet_normals()); }

private:
    Space() = default;

    std::string name_;
    SpaceKind kind_ = SpaceKind::Polytope;
    Eigen::Index dim_ = 0;
    double p_ = 0.0;
    RatMat vertices_;
    RatMat facet_normals_;
};

/** Exact gauge of the unit ball; polytope spaces only. */
Rat norm(const Space& s, const RatVec& x);

/** Float norm; works for both kinds. */
double norm(const Space& s, const Eigen::VectorXd& x);

/**
 * The dual space: for a polytope, the ball spanned by the facet normals
 * (so dualize(dualize(s)) reproduces s up to naming); for Lp with p > 1
 * the conjugate exponent, and for p = 1 the max-norm cube.
 */
Space dualize(const Space& s);

struct ExtremePoints {
    /** True for strictly convex spaces, where every sphere point is extreme. */
    bool whole_sphere = false;
    RatMat points;
};

ExtremePoints extreme_points(const Space& s);

struct SupportSet {
    RatVec point;
    int mu = 1;
    /** Extreme functionals of J_mu(x), one per row. */
    RatMat functionals;
};

/**
 * Extreme points of the support face J_mu(x) = {f in the dual ball :
 * f(x) = mu}, mu in {+1,-1}.  Polytope spaces only; x must lie exactly on
 * the unit sphere.
 */
SupportSet support_set(const Space& s, const RatVec& x, int mu);

/** A sphere point is smooth when its support functional is unique. */
bool is_smooth_point(const Space& s, const RatVec& x);

bool is_smooth_space(const Space& s);
bool is_strictly_convex(const Space& s);

}   // namespace numindex
