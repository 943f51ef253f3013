#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "facetpath/complex.hpp"

namespace facetpath {

inline constexpr std::int32_t kUnreachable = -1;

/// Exact shortest-path lengths from one source in the facet-adjacency graph.
struct DistanceMap {
    std::uint64_t source = 0;
    std::vector<std::int32_t> dist;  // kUnreachable where no path exists

    std::int32_t max_finite() const;
    bool all_reachable() const;
};

/// Full metric survey: one BFS per source, merged deterministically.
struct MetricReport {
    /// Per-element eccentricity; kUnreachable when the element cannot reach
    /// the whole metric space (its component misses some element).
    std::vector<std::int32_t> eccentricities;
    std::optional<std::int32_t> diameter;
    std::string diameter_reason;  // nonempty iff diameter is absent
    /// Per source: count of elements at each exact distance; entry 0 is 1.
    std::vector<std::vector<std::uint64_t>> layer_profiles;
    /// Facet-adjacency components, as Complex::connected_components().
    std::vector<std::vector<std::uint64_t>> components;
    /// Largest distance realized inside each component.
    std::vector<std::int32_t> component_diameters;
};

DistanceMap bfs_distances(const Complex& complex, std::uint64_t source_rank);
DistanceMap bfs_distances(const Complex& complex, const Simplex& source);

/// Max distance from sigma when every element is reachable; empty otherwise
/// (the complex is disconnected as seen from sigma).
std::optional<std::int32_t> eccentricity(const Complex& complex, const Simplex& sigma);

/// Max eccentricity over all sources; empty iff the facet-adjacency graph is
/// disconnected (isolated elements included).  threads = 0 picks the
/// hardware concurrency.
std::optional<std::int32_t> diameter(const Complex& complex, unsigned threads = 0);

/// Layer counts [|layer 0|, |layer 1|, ...] of exact distances from the
/// source; stops at the last nonempty layer.
std::vector<std::uint64_t> ball_growth(const Complex& complex, const Simplex& source);
std::vector<std::uint64_t> ball_growth(const Complex& complex, std::uint64_t source_rank);

MetricReport metric_report(const Complex& complex, unsigned threads = 0);

/// Dense all-pairs distances, kUnreachable off-component.
struct DistanceMatrix {
    std::uint64_t size = 0;
    std::vector<std::int32_t> entries;  // row-major

    std::int32_t at(std::uint64_t i, std::uint64_t j) const {
        return entries[i * size + j];
    }
};

/// Validation oracle: materializes the adjacency matrix facet by facet and
/// runs a Floyd-Warshall relaxation.  Shares no path-finding code with
/// bfs_distances.  Refuses metric spaces larger than `cap`.
DistanceMatrix all_pairs_oracle(const Complex& complex, std::uint64_t cap = 512);

}  // namespace facetpath
