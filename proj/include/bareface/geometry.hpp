#pragma once

#include <Eigen/Dense>
#include <array>
#include <vector>

namespace bareface {

// Four alignment nodes in a fixed order: left temple, right temple,
// left nose pad, right nose pad. Left/right in model space (-x is left).
struct AnchorSet {
    std::array<Eigen::Vector3d, 4> points;

    Eigen::Vector3d& operator[](int i) { return points[i]; }
    const Eigen::Vector3d& operator[](int i) const { return points[i]; }
};

// x -> s * R * x + t with R in SO(3) and s > 0.
struct SimilarityTransform {
    Eigen::Matrix3d R = Eigen::Matrix3d::Identity();
    Eigen::Vector3d t = Eigen::Vector3d::Zero();
    double s = 1.0;

    Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return s * (R * p) + t; }
};

// (b o a): apply a first, then b.
SimilarityTransform compose(const SimilarityTransform& b, const SimilarityTransform& a);

struct AlignmentResult {
    SimilarityTransform transform;
    double residual = 0.0;  // sum over anchors of |s R a + t - v|^2
};

double alignment_energy(const SimilarityTransform& T, const AnchorSet& src, const AnchorSet& dst);

/// Closed-form similarity registration of the four glasses anchors onto their
/// face targets (Umeyama's SVD solution, with the determinant sign fix so the
/// result is always a proper rotation). Throws std::invalid_argument when the
/// source anchors are rank-deficient (all collinear).
AlignmentResult solve_similarity(const AnchorSet& glasses_anchors, const AnchorSet& face_targets);

std::vector<Eigen::Vector3d> apply_transform(const SimilarityTransform& T,
                                             const std::vector<Eigen::Vector3d>& points);

// Uniformly distributed random rotation (used by data synthesis and tests).
Eigen::Matrix3d random_rotation(class Rng& rng);
Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis, double angle_rad);

}  // namespace bareface
