#include "ctda/geometry.hpp"

#include "ctda/rng.hpp"

namespace ctda {

namespace {

Ball invalid_ball() {
    Ball b;
    b.radius = -1.0;
    return b;
}

bool ball_contains(const Ball& b, const Eigen::VectorXd& p) {
    return b.radius >= 0.0 && b.contains(p);
}

Ball ball_of_support(const std::vector<Eigen::VectorXd>& support) {
    const std::size_t k = support.size();
    if (k == 0) return invalid_ball();
    if (k == 1) return Ball{support[0], 0.0};

    const Eigen::VectorXd& p0 = support[0];
    const Eigen::Index d = p0.size();
    Eigen::MatrixXd q(static_cast<Eigen::Index>(k) - 1, d);
    Eigen::VectorXd rhs(static_cast<Eigen::Index>(k) - 1);
    for (std::size_t i = 1; i < k; ++i) {
        q.row(static_cast<Eigen::Index>(i) - 1) = (support[i] - p0).transpose();
        rhs(static_cast<Eigen::Index>(i) - 1) =
            0.5 * (support[i] - p0).squaredNorm();
    }
    // Center c = p0 + q^T a with (q q^T) a = rhs; minimum-norm solve keeps
    // near-degenerate supports stable.
    const Eigen::MatrixXd gram = q * q.transpose();
    const Eigen::VectorXd alpha =
        gram.completeOrthogonalDecomposition().solve(rhs);
    Ball b;
    b.center = p0 + q.transpose() * alpha;
    b.radius = (b.center - p0).norm();
    return b;
}

Ball welzl(std::vector<Eigen::VectorXd>& pts, std::size_t n,
           std::vector<Eigen::VectorXd>& support, std::size_t max_support) {
    if (n == 0 || support.size() == max_support)
        return ball_of_support(support);
    Ball b = welzl(pts, n - 1, support, max_support);
    const Eigen::VectorXd& p = pts[n - 1];
    if (ball_contains(b, p)) return b;
    support.push_back(p);
    b = welzl(pts, n - 1, support, max_support);
    support.pop_back();
    return b;
}

Ball meb_of_points(std::vector<Eigen::VectorXd> pts, Eigen::Index dim) {
    if (pts.empty())
        throw ValidationError("min_enclosing_ball: empty point set");
    // Deterministic shuffle: expected-linear behaviour, reproducible output.
    Rng rng(0x5D1B2C3A9E4F7788ULL);
    rng.shuffle(pts);
    std::vector<Eigen::VectorXd> support;
    support.reserve(static_cast<std::size_t>(dim) + 1);
    Ball b = welzl(pts, pts.size(), support,
                   static_cast<std::size_t>(dim) + 1);
    if (b.radius < 0.0) b = Ball{pts[0], 0.0};
    return b;
}

} // namespace

Ball circumball(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    if (points.rows() == 0)
        throw ValidationError("circumball: empty point set");
    std::vector<Eigen::VectorXd> support;
    support.reserve(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        support.push_back(points.row(i).transpose());
    return ball_of_support(support);
}

Ball min_enclosing_ball(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    if (points.rows() == 0)
        throw ValidationError("min_enclosing_ball: empty point set");
    if (!points.allFinite())
        throw ValidationError("min_enclosing_ball: non-finite coordinates");
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(static_cast<std::size_t>(points.rows()));
    for (Eigen::Index i = 0; i < points.rows(); ++i)
        pts.push_back(points.row(i).transpose());
    return meb_of_points(std::move(pts), points.cols());
}

Ball min_enclosing_ball(const Eigen::Ref<const Eigen::MatrixXd>& points,
                        const std::vector<int>& subset) {
    if (subset.empty())
        throw ValidationError("min_enclosing_ball: empty vertex subset");
    std::vector<Eigen::VectorXd> pts;
    pts.reserve(subset.size());
    for (int idx : subset) {
        if (idx < 0 || idx >= points.rows())
            throw ValidationError("min_enclosing_ball: vertex index " +
                                  std::to_string(idx) + " out of range");
        pts.push_back(points.row(idx).transpose());
    }
    return meb_of_points(std::move(pts), points.cols());
}

} // namespace ctda
