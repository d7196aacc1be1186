#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "ctda/geometry.hpp"

namespace ctda {

enum class ComplexKind { cech, rips };

std::string to_string(ComplexKind kind);
ComplexKind complex_kind_from_string(const std::string& s);

/// A simplex with the scale at which it enters the filtration. Vertices are
/// strictly increasing 0-based point indices.
struct Simplex {
    std::vector<int> vertices;
    double filtration_value = 0.0;

    int dimension() const { return static_cast<int>(vertices.size()) - 1; }

    friend bool operator==(const Simplex&, const Simplex&) = default;
};

/// Ordering used everywhere: scale, then dimension, then lexicographic
/// vertices. Faces sort before cofaces, and ties break deterministically.
bool simplex_before(const Simplex& a, const Simplex& b);

struct Filtration {
    std::vector<Simplex> simplices; // sorted by simplex_before
    ComplexKind kind = ComplexKind::cech;
    int point_count = 0;
    int max_dim = 3;
    double epsilon_max = 0.0;
};

/// Vietoris-Rips filtration: a simplex is present iff all pairwise vertex
/// distances are <= epsilon_max, valued at its longest edge. Built by
/// lower-neighbour expansion of the epsilon_max neighbourhood graph.
Filtration build_rips_filtration(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 double epsilon_max, int max_dim);

/// Cech filtration: a simplex is present iff the minimal enclosing ball of
/// its vertices has diameter <= epsilon_max, valued at that diameter. Balls
/// carry the scale as their diameter, so edges enter exactly at the pairwise
/// distance. Candidates come from Rips expansion (the Cech complex is a
/// subcomplex of Rips at equal scale) and are re-valued by their MEB.
Filtration build_cech_filtration(const Eigen::Ref<const Eigen::MatrixXd>& points,
                                 double epsilon_max, int max_dim);

struct Violation {
    Simplex simplex;
    double meb_diameter = 0.0;
};

struct VerificationReport {
    std::size_t simplices_checked = 0;
    double tol = 1e-9;
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
};

/// Nerve-condition check: every simplex must satisfy
///   2 * MEB(vertices).radius <= filtration_value + tol,
/// i.e. its diameter-epsilon balls share a common point at the scale where
/// the simplex is present. For covers by (convex) balls this certifies the
/// homotopy equivalence between the complex and the ball union, so a
/// Cech-built filtration passes with zero violations while a Rips filtration
/// generally does not.
VerificationReport verify_homotopy_equivalence(
    const Filtration& filtration,
    const Eigen::Ref<const Eigen::MatrixXd>& points, double tol = 1e-9);

/// Restrict to simplices with value <= epsilon (same sorted order).
Filtration truncate(const Filtration& filtration, double epsilon);

/// Serialized form: metadata comments, then one simplex per line
/// "v0 v1 ... vk ; epsilon" in faces-before-cofaces order.
std::string filtration_to_text(const Filtration& filtration);
Filtration filtration_from_text(const std::string& text);

} // namespace ctda
