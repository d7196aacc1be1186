#pragma once

#include <Eigen/Dense>
#include <vector>

#include "ctda/errors.hpp"

namespace ctda {

/// Closed ball in R^d. Simplex filtration values use the diameter, not the
/// radius: a vertex set enters the complex once the ball diameter reaches
/// the scale parameter.
struct Ball {
    Eigen::VectorXd center;
    double radius = 0.0;

    double diameter() const { return 2.0 * radius; }

    bool contains(const Eigen::Ref<const Eigen::VectorXd>& p,
                  double slack = 1e-12) const {
        return (p - center).norm() <= radius * (1.0 + slack) + slack;
    }
};

/// Euclidean distance between two points of equal dimension.
template <typename DerivedA, typename DerivedB>
double distance(const Eigen::MatrixBase<DerivedA>& p,
                const Eigen::MatrixBase<DerivedB>& q) {
    if (p.size() != q.size())
        throw ValidationError("distance: dimension mismatch (" +
                              std::to_string(p.size()) + " vs " +
                              std::to_string(q.size()) + ")");
    return (p.derived().template cast<double>() -
            q.derived().template cast<double>())
        .norm();
}

/// Smallest ball containing all points (one point per row). Exact for
/// affinely independent support sets via Welzl's move-to-front procedure;
/// deterministic (internally seeded shuffle).
Ball min_enclosing_ball(const Eigen::Ref<const Eigen::MatrixXd>& points);

/// Same, restricted to a subset of rows.
Ball min_enclosing_ball(const Eigen::Ref<const Eigen::MatrixXd>& points,
                        const std::vector<int>& subset);

/// Smallest ball with all given points on its boundary (the circumball of
/// an affinely independent set, center restricted to the affine hull).
/// Used by Welzl's recursion on support sets of size <= d+1.
Ball circumball(const Eigen::Ref<const Eigen::MatrixXd>& points);

} // namespace ctda
