#include "ctda/complex.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "ctda/text_util.hpp"

namespace ctda {

namespace {

struct VertexSetHash {
    std::size_t operator()(const std::vector<int>& v) const {
        return static_cast<std::size_t>(
            fnv1a64(v.data(), v.size() * sizeof(int)));
    }
};

using ValueBySimplex =
    std::unordered_map<std::vector<int>, double, VertexSetHash>;

void validate_build_inputs(const Eigen::Ref<const Eigen::MatrixXd>& points,
                           double epsilon_max, int max_dim) {
    if (points.rows() == 0)
        throw ValidationError("filtration build: empty point cloud");
    if (!points.allFinite())
        throw ValidationError("filtration build: non-finite coordinates");
    if (epsilon_max <= 0.0)
        throw ValidationError("filtration build: epsilon_max must be > 0");
    if (max_dim < 0)
        throw ValidationError("filtration build: max_dim must be >= 0");
}

Eigen::MatrixXd pairwise_distances(const Eigen::Ref<const Eigen::MatrixXd>& points) {
    const Eigen::Index n = points.rows();
    Eigen::MatrixXd dist(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        dist(i, i) = 0.0;
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double d = (points.row(i) - points.row(j)).norm();
            dist(i, j) = d;
            dist(j, i) = d;
        }
    }
    return dist;
}

// Lower-neighbour expansion of the epsilon_max neighbourhood graph. Each
// simplex is produced exactly once with vertices ascending, valued at its
// longest edge.
void expand(std::vector<int>& vertices, double value,
            const std::vector<int>& candidates, const Eigen::MatrixXd& dist,
            const std::vector<std::vector<int>>& lower, int max_dim,
            std::vector<Simplex>& out) {
    out.push_back(Simplex{vertices, value});
    if (static_cast<int>(vertices.size()) - 1 >= max_dim) return;
    for (int u : candidates) {
        double new_value = value;
        for (int w : vertices) new_value = std::max(new_value, dist(u, w));
        std::vector<int> next;
        std::set_intersection(candidates.begin(), candidates.end(),
                              lower[static_cast<std::size_t>(u)].begin(),
                              lower[static_cast<std::size_t>(u)].end(),
                              std::back_inserter(next));
        vertices.insert(vertices.begin(), u);
        expand(vertices, new_value, next, dist, lower, max_dim, out);
        vertices.erase(vertices.begin());
    }
}

std::vector<Simplex> rips_simplices(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                    double epsilon_max, int max_dim) {
    const Eigen::Index n = points.rows();
    const Eigen::MatrixXd dist = pairwise_distances(points);
    std::vector<std::vector<int>> lower(static_cast<std::size_t>(n));
    for (Eigen::Index v = 0; v < n; ++v)
        for (Eigen::Index u = 0; u < v; ++u)
            if (dist(u, v) <= epsilon_max)
                lower[static_cast<std::size_t>(v)].push_back(static_cast<int>(u));

    std::vector<Simplex> out;
    for (Eigen::Index v = 0; v < n; ++v) {
        std::vector<int> vertices{static_cast<int>(v)};
        expand(vertices, 0.0, lower[static_cast<std::size_t>(v)], dist, lower,
               max_dim, out);
    }
    return out;
}

void sort_simplices(std::vector<Simplex>& simplices) {
    std::sort(simplices.begin(), simplices.end(), simplex_before);
}

} // namespace

std::string to_string(ComplexKind kind) {
    return kind == ComplexKind::cech ? "cech" : "rips";
}

ComplexKind complex_kind_from_string(const std::string& s) {
    if (s == "cech") return ComplexKind::cech;
    if (s == "rips") return ComplexKind::rips;
    throw ValidationError("unknown complex kind '" + s + "'");
}

bool simplex_before(const Simplex& a, const Simplex& b) {
    if (a.filtration_value != b.filtration_value)
        return a.filtration_value < b.filtration_value;
    if (a.vertices.size() != b.vertices.size())
        return a.vertices.size() < b.vertices.size();
    return a.vertices < b.vertices;
}

Filtration build_rips_filtration(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 double epsilon_max, int max_dim) {
    validate_build_inputs(points, epsilon_max, max_dim);
    Filtration f;
    f.kind = ComplexKind::rips;
    f.point_count = static_cast<int>(points.rows());
    f.max_dim = max_dim;
    f.epsilon_max = epsilon_max;
    f.simplices = rips_simplices(points, epsilon_max, max_dim);
    sort_simplices(f.simplices);
    return f;
}

Filtration build_cech_filtration(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 double epsilon_max, int max_dim) {
    validate_build_inputs(points, epsilon_max, max_dim);

    std::vector<Simplex> candidates = rips_simplices(points, epsilon_max, max_dim);
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Simplex& a, const Simplex& b) {
                         return a.vertices.size() < b.vertices.size();
                     });

    // Re-value every candidate at its MEB diameter. A candidate survives only
    // if its ball fits the scale and all facets survived, so the result is
    // closed under faces with monotone values even under roundoff.
    ValueBySimplex kept;
    std::vector<Simplex> simplices;
    for (Simplex& s : candidates) {
        double value = 0.0;
        if (s.vertices.size() == 2) {
            value = s.filtration_value; // MEB diameter of a pair is its distance
        } else if (s.vertices.size() > 2) {
            value = min_enclosing_ball(points, s.vertices).diameter();
        }
        if (value > epsilon_max) continue;

        bool faces_present = true;
        if (s.vertices.size() >= 2) {
            std::vector<int> facet(s.vertices.size() - 1);
            for (std::size_t skip = 0; skip < s.vertices.size() && faces_present;
                 ++skip) {
                std::size_t k = 0;
                for (std::size_t i = 0; i < s.vertices.size(); ++i)
                    if (i != skip) facet[k++] = s.vertices[i];
                auto it = kept.find(facet);
                if (it == kept.end())
                    faces_present = false;
                else
                    value = std::max(value, it->second);
            }
        }
        if (!faces_present) continue;

        kept.emplace(s.vertices, value);
        s.filtration_value = value;
        simplices.push_back(std::move(s));
    }

    Filtration f;
    f.kind = ComplexKind::cech;
    f.point_count = static_cast<int>(points.rows());
    f.max_dim = max_dim;
    f.epsilon_max = epsilon_max;
    f.simplices = std::move(simplices);
    sort_simplices(f.simplices);
    return f;
}

VerificationReport verify_homotopy_equivalence(
    const Filtration& filtration,
    const Eigen::Ref<const Eigen::MatrixXd>& points, double tol) {
    VerificationReport report;
    report.tol = tol;
    for (const Simplex& s : filtration.simplices) {
        for (int v : s.vertices)
            if (v < 0 || v >= points.rows())
                throw ValidationError(
                    "verify_homotopy_equivalence: simplex references vertex " +
                    std::to_string(v) + " outside point cloud of size " +
                    std::to_string(points.rows()));
        ++report.simplices_checked;
        if (s.vertices.size() < 2) continue;
        const double diam = min_enclosing_ball(points, s.vertices).diameter();
        if (diam > s.filtration_value + tol)
            report.violations.push_back(Violation{s, diam});
    }
    return report;
}

Filtration truncate(const Filtration& filtration, double epsilon) {
    Filtration out = filtration;
    out.epsilon_max = epsilon;
    out.simplices.clear();
    for (const Simplex& s : filtration.simplices)
        if (s.filtration_value <= epsilon) out.simplices.push_back(s);
    return out;
}

std::string filtration_to_text(const Filtration& filtration) {
    std::ostringstream os;
    os << "# kind=" << to_string(filtration.kind) << "\n";
    os << "# point_count=" << filtration.point_count << "\n";
    os << "# max_dim=" << filtration.max_dim << "\n";
    os << "# epsilon_max=" << format_double(filtration.epsilon_max) << "\n";
    for (const Simplex& s : filtration.simplices) {
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
            if (i) os << ' ';
            os << s.vertices[i];
        }
        os << " ; " << format_double(s.filtration_value) << "\n";
    }
    return os.str();
}

Filtration filtration_from_text(const std::string& text) {
    Filtration f;
    f.point_count = 0;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const std::string context = "filtration text line " + std::to_string(lineno);
        if (t[0] == '#') {
            const auto eq = t.find('=');
            if (eq == std::string::npos) continue;
            const std::string key = trim(t.substr(1, eq - 1));
            const std::string value = trim(t.substr(eq + 1));
            if (key == "kind") f.kind = complex_kind_from_string(value);
            else if (key == "point_count") f.point_count = static_cast<int>(parse_int(value, context));
            else if (key == "max_dim") f.max_dim = static_cast<int>(parse_int(value, context));
            else if (key == "epsilon_max") f.epsilon_max = parse_double(value, context);
            continue;
        }
        const auto sep = t.find(';');
        if (sep == std::string::npos)
            throw ValidationError(context + ": missing ';' separator");
        Simplex s;
        std::istringstream vs(t.substr(0, sep));
        std::string tok;
        while (vs >> tok)
            s.vertices.push_back(static_cast<int>(parse_int(tok, context)));
        if (s.vertices.empty())
            throw ValidationError(context + ": simplex with no vertices");
        for (std::size_t i = 1; i < s.vertices.size(); ++i)
            if (s.vertices[i] <= s.vertices[i - 1])
                throw ValidationError(context + ": vertices not strictly increasing");
        s.filtration_value = parse_double(t.substr(sep + 1), context);
        f.max_dim = std::max(f.max_dim, s.dimension());
        for (int v : s.vertices) f.point_count = std::max(f.point_count, v + 1);
        f.simplices.push_back(std::move(s));
    }
    return f;
}

} // namespace ctda
