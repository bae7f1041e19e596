#include "bareface/geometry.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <stdexcept>

#include "bareface/rng.hpp"

namespace bareface {

SimilarityTransform compose(const SimilarityTransform& b, const SimilarityTransform& a) {
    SimilarityTransform out;
    out.s = b.s * a.s;
    out.R = b.R * a.R;
    out.t = b.s * (b.R * a.t) + b.t;
    return out;
}

double alignment_energy(const SimilarityTransform& T, const AnchorSet& src, const AnchorSet& dst) {
    double e = 0.0;
    for (int i = 0; i < 4; ++i) e += (T.apply(src[i]) - dst[i]).squaredNorm();
    return e;
}

AlignmentResult solve_similarity(const AnchorSet& glasses_anchors, const AnchorSet& face_targets) {
    constexpr int n = 4;
    Eigen::Vector3d mu_a = Eigen::Vector3d::Zero(), mu_v = Eigen::Vector3d::Zero();
    for (int i = 0; i < n; ++i) {
        mu_a += glasses_anchors[i];
        mu_v += face_targets[i];
    }
    mu_a /= n;
    mu_v /= n;

    // Cross-covariance (target x source) and source variance
    Eigen::Matrix3d sigma = Eigen::Matrix3d::Zero();
    double var_a = 0.0;
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d da = glasses_anchors[i] - mu_a;
        Eigen::Vector3d dv = face_targets[i] - mu_v;
        sigma += dv * da.transpose();
        var_a += da.squaredNorm();
    }
    sigma /= n;
    var_a /= n;

    // Source anchors must span at least a plane for (R, s) to be determined.
    Eigen::Matrix3d cov_a = Eigen::Matrix3d::Zero();
    for (int i = 0; i < n; ++i) {
        Eigen::Vector3d da = glasses_anchors[i] - mu_a;
        cov_a += da * da.transpose();
    }
    Eigen::JacobiSVD<Eigen::Matrix3d> cov_svd(cov_a);
    const auto& cs = cov_svd.singularValues();
    if (cs(1) <= 1e-12 * std::max(cs(0), 1e-300))
        throw std::invalid_argument("solve_similarity: degenerate anchors (collinear source points)");

    Eigen::JacobiSVD<Eigen::Matrix3d> svd(sigma, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d U = svd.matrixU();
    Eigen::Matrix3d V = svd.matrixV();
    Eigen::Vector3d d = svd.singularValues();

    // Sign fix: reflect along the weakest direction when det(U V^T) < 0
    Eigen::Vector3d sgn = Eigen::Vector3d::Ones();
    if ((U * V.transpose()).determinant() < 0.0) sgn(2) = -1.0;

    AlignmentResult res;
    res.transform.R = U * sgn.asDiagonal() * V.transpose();
    res.transform.s = d.dot(sgn) / var_a;
    res.transform.t = mu_v - res.transform.s * (res.transform.R * mu_a);
    res.residual = alignment_energy(res.transform, glasses_anchors, face_targets);
    return res;
}

std::vector<Eigen::Vector3d> apply_transform(const SimilarityTransform& T,
                                             const std::vector<Eigen::Vector3d>& points) {
    std::vector<Eigen::Vector3d> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(T.apply(p));
    return out;
}

Eigen::Matrix3d rotation_about(const Eigen::Vector3d& axis, double angle_rad) {
    return Eigen::AngleAxisd(angle_rad, axis.normalized()).toRotationMatrix();
}

Eigen::Matrix3d random_rotation(Rng& rng) {
    // Uniform over SO(3) via random unit quaternion
    double u1 = rng.uniform(), u2 = rng.uniform(), u3 = rng.uniform();
    double a = std::sqrt(1.0 - u1), b = std::sqrt(u1);
    double t1 = 2.0 * M_PI * u2, t2 = 2.0 * M_PI * u3;
    Eigen::Quaterniond q(a * std::sin(t1), a * std::cos(t1), b * std::sin(t2), b * std::cos(t2));
    return q.normalized().toRotationMatrix();
}

}  // namespace bareface
