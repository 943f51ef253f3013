#include "facetpath/metric.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

namespace facetpath {

namespace {

/// BFS over the facet-adjacency graph with caller-owned scratch space.
void bfs_into(const Complex& complex, std::uint64_t source, NeighborFinder& finder,
              std::vector<std::uint64_t>& queue, std::vector<std::uint64_t>& neighbors,
              std::vector<std::int32_t>& dist) {
    dist.assign(complex.element_count(), kUnreachable);
    dist[source] = 0;
    queue.clear();
    queue.push_back(source);
    std::size_t head = 0;
    while (head < queue.size()) {
        std::uint64_t current = queue[head++];
        std::int32_t next_dist = dist[current] + 1;
        neighbors.clear();
        finder.collect(current, neighbors);
        for (std::uint64_t next : neighbors) {
            if (dist[next] == kUnreachable) {
                dist[next] = next_dist;
                queue.push_back(next);
            }
        }
    }
}

std::vector<std::uint64_t> layers_from(const std::vector<std::int32_t>& dist) {
    std::int32_t max_dist = 0;
    for (std::int32_t value : dist) max_dist = std::max(max_dist, value);
    std::vector<std::uint64_t> layers(static_cast<std::size_t>(max_dist) + 1, 0);
    for (std::int32_t value : dist) {
        if (value != kUnreachable) ++layers[static_cast<std::size_t>(value)];
    }
    return layers;
}

unsigned resolve_threads(unsigned threads, std::uint64_t n_sources) {
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    return static_cast<unsigned>(
        std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, n_sources)));
}

/// Runs fn(source, dist) for every source rank.  Each worker owns its
/// scratch; fn writes only to per-source slots, so the merged result is
/// independent of scheduling.
template <typename PerSource>
void sweep_sources(const Complex& complex, unsigned threads, PerSource fn) {
    const std::uint64_t n_elements = complex.element_count();
    const unsigned n_workers = resolve_threads(threads, n_elements);
    std::atomic<std::uint64_t> cursor{0};
    auto worker = [&]() {
        NeighborFinder finder(complex);
        std::vector<std::uint64_t> queue;
        std::vector<std::uint64_t> neighbors;
        std::vector<std::int32_t> dist;
        for (;;) {
            std::uint64_t source = cursor.fetch_add(1);
            if (source >= n_elements) break;
            bfs_into(complex, source, finder, queue, neighbors, dist);
            fn(source, dist);
        }
    };
    if (n_workers == 1) {
        worker();
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned i = 0; i < n_workers; ++i) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
}

}  // namespace

std::int32_t DistanceMap::max_finite() const {
    std::int32_t result = 0;
    for (std::int32_t value : dist) result = std::max(result, value);
    return result;
}

bool DistanceMap::all_reachable() const {
    return std::find(dist.begin(), dist.end(), kUnreachable) == dist.end();
}

DistanceMap bfs_distances(const Complex& complex, std::uint64_t source_rank) {
    if (source_rank >= complex.element_count()) {
        throw RangeError("source rank " + std::to_string(source_rank) +
                         " out of range, N = " + std::to_string(complex.element_count()));
    }
    DistanceMap map;
    map.source = source_rank;
    NeighborFinder finder(complex);
    std::vector<std::uint64_t> queue;
    std::vector<std::uint64_t> neighbors;
    bfs_into(complex, source_rank, finder, queue, neighbors, map.dist);
    return map;
}

DistanceMap bfs_distances(const Complex& complex, const Simplex& source) {
    return bfs_distances(complex, complex.element_indexer().rank(source));
}

std::optional<std::int32_t> eccentricity(const Complex& complex, const Simplex& sigma) {
    DistanceMap map = bfs_distances(complex, sigma);
    if (!map.all_reachable()) return std::nullopt;
    return map.max_finite();
}

std::optional<std::int32_t> diameter(const Complex& complex, unsigned threads) {
    std::atomic<std::int32_t> max_ecc{0};
    std::atomic<bool> disconnected{false};
    sweep_sources(complex, threads,
                  [&](std::uint64_t, const std::vector<std::int32_t>& dist) {
                      std::int32_t ecc = 0;
                      for (std::int32_t value : dist) {
                          if (value == kUnreachable) {
                              disconnected.store(true, std::memory_order_relaxed);
                              return;
                          }
                          ecc = std::max(ecc, value);
                      }
                      std::int32_t seen = max_ecc.load(std::memory_order_relaxed);
                      while (seen < ecc &&
                             !max_ecc.compare_exchange_weak(seen, ecc,
                                                            std::memory_order_relaxed)) {
                      }
                  });
    if (disconnected.load()) return std::nullopt;
    return max_ecc.load();
}

std::vector<std::uint64_t> ball_growth(const Complex& complex, std::uint64_t source_rank) {
    return layers_from(bfs_distances(complex, source_rank).dist);
}

std::vector<std::uint64_t> ball_growth(const Complex& complex, const Simplex& source) {
    return layers_from(bfs_distances(complex, source).dist);
}

MetricReport metric_report(const Complex& complex, unsigned threads) {
    const std::uint64_t n_elements = complex.element_count();
    MetricReport report;
    report.eccentricities.assign(n_elements, kUnreachable);
    report.layer_profiles.assign(n_elements, {});

    sweep_sources(complex, threads,
                  [&](std::uint64_t source, const std::vector<std::int32_t>& dist) {
                      std::int32_t ecc = 0;
                      bool reaches_all = true;
                      for (std::int32_t value : dist) {
                          if (value == kUnreachable) {
                              reaches_all = false;
                          } else {
                              ecc = std::max(ecc, value);
                          }
                      }
                      report.eccentricities[source] = reaches_all ? ecc : kUnreachable;
                      report.layer_profiles[source] = layers_from(dist);
                  });

    report.components = complex.connected_components();
    report.component_diameters.assign(report.components.size(), 0);
    std::vector<std::uint64_t> component_of(n_elements, 0);
    for (std::uint64_t c = 0; c < report.components.size(); ++c) {
        for (std::uint64_t rank : report.components[c]) component_of[rank] = c;
    }
    for (std::uint64_t source = 0; source < n_elements; ++source) {
        // Within a component the BFS reaches everything, so the per-source
        // max distance is the layer count minus one.
        std::uint64_t c = component_of[source];
        std::int32_t reach =
            static_cast<std::int32_t>(report.layer_profiles[source].size()) - 1;
        report.component_diameters[c] = std::max(report.component_diameters[c], reach);
    }

    if (report.components.size() == 1) {
        std::int32_t max_ecc = 0;
        for (std::int32_t ecc : report.eccentricities) max_ecc = std::max(max_ecc, ecc);
        report.diameter = max_ecc;
    } else {
        report.diameter_reason = "disconnected";
    }
    return report;
}

DistanceMatrix all_pairs_oracle(const Complex& complex, std::uint64_t cap) {
    const std::uint64_t n = complex.element_count();
    if (n > cap) {
        throw CapacityError("all-pairs oracle capped at N <= " + std::to_string(cap) +
                            ", got N = " + std::to_string(n));
    }
    constexpr std::int32_t kInf = std::numeric_limits<std::int32_t>::max() / 2;
    DistanceMatrix matrix;
    matrix.size = n;
    matrix.entries.assign(n * n, kInf);
    for (std::uint64_t i = 0; i < n; ++i) matrix.entries[i * n + i] = 0;

    // Adjacency straight from the definition: all faces of one facet are
    // pairwise at distance 1.
    const SubsetIndexer& elements = complex.element_indexer();
    for (const Simplex& facet : complex.facets()) {
        std::vector<std::uint64_t> face_ranks;
        for (const Simplex& face : facet.faces()) {
            face_ranks.push_back(elements.rank(face));
        }
        for (std::size_t a = 0; a < face_ranks.size(); ++a) {
            for (std::size_t b = a + 1; b < face_ranks.size(); ++b) {
                matrix.entries[face_ranks[a] * n + face_ranks[b]] = 1;
                matrix.entries[face_ranks[b] * n + face_ranks[a]] = 1;
            }
        }
    }

    // Floyd-Warshall min-plus relaxation.
    for (std::uint64_t k = 0; k < n; ++k) {
        for (std::uint64_t i = 0; i < n; ++i) {
            std::int32_t dik = matrix.entries[i * n + k];
            if (dik >= kInf) continue;
            for (std::uint64_t j = 0; j < n; ++j) {
                std::int32_t candidate = dik + matrix.entries[k * n + j];
                if (candidate < matrix.entries[i * n + j]) {
                    matrix.entries[i * n + j] = candidate;
                }
            }
        }
    }

    for (std::int32_t& entry : matrix.entries) {
        if (entry >= kInf) entry = kUnreachable;
    }
    return matrix;
}

}  // namespace facetpath
