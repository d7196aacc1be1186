#pragma once

#include <limits>
#include <string>
#include <vector>

#include "ctda/complex.hpp"

namespace ctda {

/// Entropy is undefined when no bar has positive lifetime.
class UndefinedEntropyError : public ValidationError {
public:
    explicit UndefinedEntropyError(const std::string& what)
        : ValidationError(what) {}
};

struct PersistencePair {
    double birth = 0.0;
    double death = std::numeric_limits<double>::infinity();

    bool finite() const { return std::isfinite(death); }
    double lifetime() const { return death - birth; }

    friend bool operator==(const PersistencePair&, const PersistencePair&) = default;
};

/// Birth-death pairs per homology dimension, Z/2 coefficients. Zero-length
/// pairs are retained; unpaired classes carry an infinite death.
struct PersistenceDiagram {
    std::vector<std::vector<PersistencePair>> pairs_by_dim;
    double epsilon_max = 0.0; // scale window of the source filtration
    int point_count = 0;

    static const std::vector<PersistencePair> kEmpty;
    const std::vector<PersistencePair>& pairs(int dim) const {
        if (dim < 0 || dim >= static_cast<int>(pairs_by_dim.size())) return kEmpty;
        return pairs_by_dim[static_cast<std::size_t>(dim)];
    }
    std::size_t total_pairs() const;
};

/// Checks that values never decrease and every face precedes its cofaces;
/// throws ValidationError naming the offending simplex otherwise.
void validate_filtration_order(const Filtration& filtration);

/// Standard column reduction of the Z/2 boundary matrix in filtration order.
/// A death column pairs with the birth simplex at its pivot; columns that
/// reduce to zero and are never killed become infinite classes.
PersistenceDiagram compute_persistence(const Filtration& filtration);

struct BettiCurve {
    int dimension = 0;
    std::vector<double> grid;
    std::vector<int> values; // beta_k at each grid epsilon
};

/// beta_k(eps) = #{(b,d) : b <= eps < d}; infinite deaths count for all
/// eps >= b. Grid must be sorted ascending and non-negative.
BettiCurve betti_curve(const PersistenceDiagram& diagram, int dim,
                       const std::vector<double>& grid);

/// Shannon entropy of normalized bar lifetimes in dimension `dim`, with
/// infinite deaths capped at epsilon_cap. Returned non-negative (the
/// magnitude of sum (l/L) ln(l/L)); a single bar yields 0. Natural log.
double persistent_entropy(const PersistenceDiagram& diagram, int dim,
                          double epsilon_cap);

/// Drops finite pairs with lifetime < min_persistence. Infinite classes are
/// never dropped. Idempotent.
PersistenceDiagram prune_transient(const PersistenceDiagram& diagram,
                                   double min_persistence);

struct LabeledDiagram {
    std::string label;
    PersistenceDiagram diagram;
};

struct EntropySummary {
    struct Entry {
        std::string label;
        int dimension = 0;
        double mean = 0.0;
        double variance = 0.0; // population variance
        int count = 0;
    };
    std::vector<Entry> entries; // sorted by (label, dimension)
};

/// Per class label and homology dimension, mean and population variance of
/// persistent entropies (each diagram capped at its own epsilon_max).
/// Propagates UndefinedEntropyError from any member diagram.
EntropySummary entropy_statistics(const std::vector<LabeledDiagram>& diagrams,
                                  int max_hom_dim = 2);

} // namespace ctda
