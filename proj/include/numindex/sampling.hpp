#pragma once

#include "numindex/geometry.hpp"

#include <vector>

namespace numindex {

inline constexpr int kDefaultDensity = 2;

/**
 * Float mirror of a space used by every sampling routine: vertex and
 * facet data converted once, plus pointwise gauge / support-functional
 * evaluation for both space kinds.
 */
class FloatBall {
public:
    explicit FloatBall(const Space& s);

    Eigen::Index dim() const { return dim_; }
    bool polytope() const { return polytope_; }
    double p() const { return p_; }
    const Eigen::MatrixXd& normals() const { return normals_; }

    double gauge(const Eigen::VectorXd& x) const;
    Eigen::VectorXd to_sphere(const Eigen::VectorXd& x) const;

    /** max_{f in J(x)} |f(t·x)| for a unit vector x. */
    double point_value(const Eigen::MatrixXd& t,
                       const Eigen::VectorXd& unit) const;

    /**
     * A support functional f with f(unit) = 1; among the active facets of
     * a polytope, the one maximizing |f(toward)|.
     */
    Eigen::VectorXd support_functional(const Eigen::VectorXd& unit,
                                       const Eigen::VectorXd& toward) const;

private:
    Eigen::Index dim_;
    bool polytope_;
    double p_ = 0.0;
    Eigen::MatrixXd normals_;
};

struct SampleReport {
    double value = 0.0;
    long evaluations = 0;
    int density = 0;
    Eigen::VectorXd argmax;
    /** Refined near-maximizers, populated when collection is requested. */
    std::vector<Eigen::VectorXd> top_points;
};

/**
 * Sampled numerical radius: deterministic sphere meshes for every level
 * up to `density` (so the value is nondecreasing in `density` by
 * construction), followed by shrinking-step local refinement around the
 * best mesh cells.
 */
SampleReport sample_radius(const Space& s, const Eigen::MatrixXd& t,
                           int density = kDefaultDensity,
                           bool collect_top = false);

/** Sampled operator norm over the same meshes. */
SampleReport sample_op_norm(const Space& s, const Eigen::MatrixXd& t,
                            int density = kDefaultDensity);

/**
 * The deterministic sphere mesh of one refinement level, one
 * gauge-normalized unit point per column.  This is the exact point set
 * the sampling routines scan, exposed for callers that evaluate many
 * operators over a fixed mesh.
 */
Eigen::MatrixXd sphere_mesh(const Space& s, int level);

}   // namespace numindex
