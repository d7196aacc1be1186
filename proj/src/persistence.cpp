#include "ctda/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_map>

#include "ctda/text_util.hpp"

namespace ctda {

const std::vector<PersistencePair> PersistenceDiagram::kEmpty;

std::size_t PersistenceDiagram::total_pairs() const {
    std::size_t n = 0;
    for (const auto& dim : pairs_by_dim) n += dim.size();
    return n;
}

namespace {

struct VertexSetHash {
    std::size_t operator()(const std::vector<int>& v) const {
        return static_cast<std::size_t>(
            fnv1a64(v.data(), v.size() * sizeof(int)));
    }
};

std::string describe(const Simplex& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.vertices.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(s.vertices[i]);
    }
    out += "}";
    return out;
}

// XOR of two sorted index lists (symmetric difference over Z/2).
void add_column(std::vector<int>& target, const std::vector<int>& other) {
    std::vector<int> result;
    result.reserve(target.size() + other.size());
    std::set_symmetric_difference(target.begin(), target.end(), other.begin(),
                                  other.end(), std::back_inserter(result));
    target = std::move(result);
}

} // namespace

void validate_filtration_order(const Filtration& filtration) {
    std::unordered_map<std::vector<int>, std::size_t, VertexSetHash> position;
    double prev_value = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < filtration.simplices.size(); ++i) {
        const Simplex& s = filtration.simplices[i];
        if (s.vertices.empty())
            throw ValidationError("filtration: empty simplex at position " +
                                  std::to_string(i));
        for (std::size_t k = 1; k < s.vertices.size(); ++k)
            if (s.vertices[k] <= s.vertices[k - 1])
                throw ValidationError("filtration: simplex " + describe(s) +
                                      " has non-increasing vertices");
        if (s.filtration_value < prev_value)
            throw ValidationError("filtration: simplex " + describe(s) +
                                  " enters at " + format_double(s.filtration_value) +
                                  " after a simplex at " + format_double(prev_value));
        prev_value = s.filtration_value;
        if (s.vertices.size() > 1) {
            std::vector<int> facet(s.vertices.size() - 1);
            for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
                std::size_t k = 0;
                for (std::size_t j = 0; j < s.vertices.size(); ++j)
                    if (j != skip) facet[k++] = s.vertices[j];
                auto it = position.find(facet);
                if (it == position.end())
                    throw ValidationError("filtration: simplex " + describe(s) +
                                          " appears before its face");
                if (filtration.simplices[it->second].filtration_value >
                    s.filtration_value)
                    throw ValidationError("filtration: simplex " + describe(s) +
                                          " enters before its face");
            }
        }
        if (!position.emplace(s.vertices, i).second)
            throw ValidationError("filtration: duplicate simplex " + describe(s));
    }
}

PersistenceDiagram compute_persistence(const Filtration& filtration) {
    validate_filtration_order(filtration);

    const std::vector<Simplex>& simplices = filtration.simplices;
    const std::size_t n = simplices.size();

    std::unordered_map<std::vector<int>, int, VertexSetHash> index_of;
    index_of.reserve(n);
    int max_dim = 0;
    for (std::size_t i = 0; i < n; ++i) {
        index_of.emplace(simplices[i].vertices, static_cast<int>(i));
        max_dim = std::max(max_dim, simplices[i].dimension());
    }

    std::vector<std::vector<int>> columns(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Simplex& s = simplices[i];
        if (s.vertices.size() < 2) continue;
        std::vector<int> boundary;
        boundary.reserve(s.vertices.size());
        std::vector<int> facet(s.vertices.size() - 1);
        for (std::size_t skip = 0; skip < s.vertices.size(); ++skip) {
            std::size_t k = 0;
            for (std::size_t j = 0; j < s.vertices.size(); ++j)
                if (j != skip) facet[k++] = s.vertices[j];
            boundary.push_back(index_of.at(facet));
        }
        std::sort(boundary.begin(), boundary.end());
        columns[i] = std::move(boundary);
    }

    std::vector<int> pivot_owner(n, -1);
    std::vector<char> paired(n, 0);

    PersistenceDiagram diagram;
    diagram.pairs_by_dim.assign(static_cast<std::size_t>(max_dim) + 1, {});
    diagram.epsilon_max = filtration.epsilon_max;
    diagram.point_count = filtration.point_count;

    for (std::size_t j = 0; j < n; ++j) {
        std::vector<int>& col = columns[j];
        while (!col.empty()) {
            const int low = col.back();
            const int owner = pivot_owner[static_cast<std::size_t>(low)];
            if (owner < 0) break;
            add_column(col, columns[static_cast<std::size_t>(owner)]);
        }
        if (!col.empty()) {
            const int birth = col.back();
            pivot_owner[static_cast<std::size_t>(birth)] = static_cast<int>(j);
            paired[static_cast<std::size_t>(birth)] = 1;
            paired[j] = 1;
            const int dim = simplices[static_cast<std::size_t>(birth)].dimension();
            diagram.pairs_by_dim[static_cast<std::size_t>(dim)].push_back(
                PersistencePair{simplices[static_cast<std::size_t>(birth)].filtration_value,
                                simplices[j].filtration_value});
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (paired[i] || !columns[i].empty()) continue;
        const int dim = simplices[i].dimension();
        diagram.pairs_by_dim[static_cast<std::size_t>(dim)].push_back(
            PersistencePair{simplices[i].filtration_value,
                            std::numeric_limits<double>::infinity()});
    }

    for (auto& pairs : diagram.pairs_by_dim)
        std::sort(pairs.begin(), pairs.end(),
                  [](const PersistencePair& a, const PersistencePair& b) {
                      if (a.birth != b.birth) return a.birth < b.birth;
                      return a.death < b.death;
                  });
    return diagram;
}

BettiCurve betti_curve(const PersistenceDiagram& diagram, int dim,
                       const std::vector<double>& grid) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] < 0.0)
            throw ValidationError("betti_curve: negative epsilon in grid");
        if (i > 0 && grid[i] < grid[i - 1])
            throw ValidationError("betti_curve: grid not sorted ascending");
        if (!std::isfinite(grid[i]))
            throw ValidationError("betti_curve: non-finite epsilon in grid");
    }
    BettiCurve curve;
    curve.dimension = dim;
    curve.grid = grid;
    curve.values.assign(grid.size(), 0);
    for (const PersistencePair& p : diagram.pairs(dim))
        for (std::size_t i = 0; i < grid.size(); ++i)
            if (p.birth <= grid[i] && grid[i] < p.death) ++curve.values[i];
    return curve;
}

double persistent_entropy(const PersistenceDiagram& diagram, int dim,
                          double epsilon_cap) {
    if (!(epsilon_cap > 0.0) || !std::isfinite(epsilon_cap))
        throw ValidationError("persistent_entropy: epsilon_cap must be finite and > 0");
    std::vector<double> lifetimes;
    for (const PersistencePair& p : diagram.pairs(dim)) {
        const double l = std::min(p.death, epsilon_cap) - p.birth;
        if (l > 0.0) lifetimes.push_back(l);
    }
    if (lifetimes.empty())
        throw UndefinedEntropyError(
            "persistent_entropy: no positive-lifetime bars in dimension " +
            std::to_string(dim));
    double total = 0.0;
    for (double l : lifetimes) total += l;
    double entropy = 0.0;
    for (double l : lifetimes) {
        const double frac = l / total;
        entropy -= frac * std::log(frac);
    }
    // -0.0 guard so a single bar reports exactly 0
    return entropy == 0.0 ? 0.0 : entropy;
}

PersistenceDiagram prune_transient(const PersistenceDiagram& diagram,
                                   double min_persistence) {
    if (min_persistence < 0.0)
        throw ValidationError("prune_transient: min_persistence must be >= 0");
    PersistenceDiagram out = diagram;
    for (auto& pairs : out.pairs_by_dim)
        pairs.erase(std::remove_if(pairs.begin(), pairs.end(),
                                   [&](const PersistencePair& p) {
                                       return p.finite() &&
                                              p.lifetime() < min_persistence;
                                   }),
                    pairs.end());
    return out;
}

EntropySummary entropy_statistics(const std::vector<LabeledDiagram>& diagrams,
                                  int max_hom_dim) {
    if (diagrams.empty())
        throw ValidationError("entropy_statistics: empty diagram list");
    std::map<std::string, std::vector<const PersistenceDiagram*>> by_label;
    for (const LabeledDiagram& ld : diagrams)
        by_label[ld.label].push_back(&ld.diagram);

    EntropySummary summary;
    for (const auto& [label, members] : by_label) {
        for (int dim = 0; dim <= max_hom_dim; ++dim) {
            std::vector<double> entropies;
            entropies.reserve(members.size());
            for (const PersistenceDiagram* d : members)
                entropies.push_back(persistent_entropy(*d, dim, d->epsilon_max));
            double mean = 0.0;
            for (double e : entropies) mean += e;
            mean /= static_cast<double>(entropies.size());
            double var = 0.0;
            for (double e : entropies) var += (e - mean) * (e - mean);
            var /= static_cast<double>(entropies.size());
            summary.entries.push_back(EntropySummary::Entry{
                label, dim, mean, var, static_cast<int>(entropies.size())});
        }
    }
    return summary;
}

} // namespace ctda
