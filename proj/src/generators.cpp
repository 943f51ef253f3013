#include "facetpath/generators.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <optional>
#include <random>
#include <sstream>

namespace facetpath {

namespace {

/// Deterministic random stream.  mt19937_64 is fully pinned by the language
/// standard, so seeds reproduce bitwise across platforms; the unit-interval
/// and bounded-integer mappings below are the only derivations used.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0,1) with 53 random mantissa bits.
    double unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform in [0, bound) by rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit =
            std::numeric_limits<std::uint64_t>::max() -
            std::numeric_limits<std::uint64_t>::max() % bound;
        for (;;) {
            std::uint64_t draw = engine_();
            if (draw < limit) return draw % bound;
        }
    }

private:
    std::mt19937_64 engine_;
};

std::vector<Simplex> facet_list(const SubsetIndexer& indexer,
                                const std::vector<std::uint64_t>& ranks) {
    std::vector<Simplex> out;
    out.reserve(ranks.size());
    for (std::uint64_t rank : ranks) out.push_back(indexer.unrank(rank));
    return out;
}

}  // namespace

std::string GenSpec::describe() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Complete:
            os << "complete(n=" << n << ",d=" << d << ")";
            break;
        case Kind::RandomUniform:
            os << "random_uniform(n=" << n << ",d=" << d << ",p=" << p
               << ",seed=" << seed << ")";
            break;
        case Kind::GraphImport:
            os << "graph_import(" << (name.empty() ? "edges" : name) << ",n=" << n
               << ")";
            break;
        case Kind::NearRegular:
            os << "near_regular(n=" << n << ",d=" << d << ",r=" << r
               << ",seed=" << seed << ",max_iters=" << max_iters << ")";
            break;
    }
    return os.str();
}

Complex complete_complex(int n, int d) {
    if (d < 1 || d + 1 > n) {
        throw DimensionError("complete complex requires 1 <= d and d+1 <= n, got n=" +
                             std::to_string(n) + " d=" + std::to_string(d));
    }
    SubsetIndexer facets(n, d + 1);
    std::vector<Simplex> all;
    all.reserve(facets.count());
    for (std::uint64_t rank = 0; rank < facets.count(); ++rank) {
        all.push_back(facets.unrank(rank));
    }
    return Complex(n, d, all);
}

Complex random_uniform(int n, int d, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw ParameterError("probability must be in [0,1], got " + std::to_string(p));
    }
    if (d < 1 || d + 1 > n) {
        throw DimensionError("random complex requires 1 <= d and d+1 <= n, got n=" +
                             std::to_string(n) + " d=" + std::to_string(d));
    }
    SubsetIndexer facets(n, d + 1);
    SeededRng rng(seed);
    std::vector<Simplex> chosen;
    for (std::uint64_t rank = 0; rank < facets.count(); ++rank) {
        if (rng.unit() < p) chosen.push_back(facets.unrank(rank));
    }
    return Complex(n, d, chosen);
}

Complex graph_import(std::span<const std::pair<Vertex, Vertex>> edges, int n,
                     std::vector<std::string>* warnings) {
    std::vector<Simplex> facets;
    facets.reserve(edges.size());
    for (const auto& [a, b] : edges) {
        if (a == b) {
            throw InvalidEdgeError("self-loop at vertex " + std::to_string(a));
        }
        if (a < 1 || b < 1 || a > n || b > n) {
            throw InvalidEdgeError("edge (" + std::to_string(a) + "," +
                                   std::to_string(b) + ") out of range 1.." +
                                   std::to_string(n));
        }
        facets.push_back(Simplex({a, b}));
    }
    return Complex(n, 1, facets, warnings);
}

Complex make_cycle(int m) {
    if (m < 3) {
        throw ParameterError("cycle needs m >= 3 vertices, got " + std::to_string(m));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (int i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(m, 1);
    return graph_import(edges, m);
}

Complex make_circular_ladder(int m) {
    if (m < 3) {
        throw ParameterError("circular ladder needs m >= 3, got " + std::to_string(m));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(3 * m);
    for (int i = 1; i <= m; ++i) {
        int next = i % m + 1;
        edges.emplace_back(i, next);          // outer cycle
        edges.emplace_back(m + i, m + next);  // inner cycle
        edges.emplace_back(i, m + i);         // rung
    }
    return graph_import(edges, 2 * m);
}

Complex make_petersen() {
    // Outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5.
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i + 1, (i + 1) % 5 + 1);
        edges.emplace_back(i + 6, (i + 2) % 5 + 6);
        edges.emplace_back(i + 1, i + 6);
    }
    return graph_import(edges, 10);
}

Complex make_complete_graph(int m) {
    if (m < 2) {
        throw ParameterError("complete graph needs m >= 2 vertices, got " +
                             std::to_string(m));
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (int a = 1; a <= m; ++a) {
        for (int b = a + 1; b <= m; ++b) edges.emplace_back(a, b);
    }
    return graph_import(edges, m);
}

Complex named_graph(const std::string& name) {
    std::string base = name;
    std::optional<int> arg;
    auto open = name.find_first_of("(:");
    if (open != std::string::npos) {
        base = name.substr(0, open);
        std::string rest = name.substr(open + 1);
        if (!rest.empty() && rest.back() == ')') rest.pop_back();
        try {
            arg = std::stoi(rest);
        } catch (const std::exception&) {
            throw ParameterError("cannot parse graph size in '" + name + "'");
        }
    }
    if (base == "petersen") {
        if (arg) throw ParameterError("petersen takes no size argument");
        return make_petersen();
    }
    if (!arg) {
        throw ParameterError("graph '" + base + "' needs a size, e.g. '" + base +
                             "(6)'");
    }
    if (base == "cycle") return make_cycle(*arg);
    if (base == "circular_ladder") return make_circular_ladder(*arg);
    if (base == "complete_graph") return make_complete_graph(*arg);
    throw ParameterError("unknown graph '" + base +
                         "'; known: cycle(m), circular_ladder(m), petersen, "
                         "complete_graph(m)");
}

namespace {

/// Mutable working state for the near-regular swap search.
struct SwapState {
    const SubsetIndexer* elements;
    const SubsetIndexer* facets;
    std::vector<bool> member;
    std::vector<std::int32_t> degree;  // per element rank
    std::int64_t target_r = 0;
    std::int64_t deviation = 0;  // sum |degree - r|

    std::vector<Vertex> facet_scratch;
    std::vector<Vertex> face_scratch;

    void for_each_face_rank(std::uint64_t facet_rank, auto fn) {
        facets->unrank_into(facet_rank, facet_scratch);
        for (std::size_t skip = 0; skip < facet_scratch.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < facet_scratch.size(); ++i) {
                if (i != skip) face_scratch[w++] = facet_scratch[i];
            }
            fn(elements->rank_sorted(face_scratch));
        }
    }

    /// Deviation change if the facet's faces all gained `delta` degree.
    std::int64_t delta_if(std::uint64_t facet_rank, std::int32_t delta) {
        std::int64_t change = 0;
        for_each_face_rank(facet_rank, [&](std::uint64_t rank) {
            std::int64_t before = std::abs(std::int64_t{degree[rank]} - target_r);
            std::int64_t after =
                std::abs(std::int64_t{degree[rank]} + delta - target_r);
            change += after - before;
        });
        return change;
    }

    void apply(std::uint64_t facet_rank, std::int32_t delta) {
        member[facet_rank] = delta > 0;
        for_each_face_rank(facet_rank, [&](std::uint64_t rank) {
            deviation -= std::abs(std::int64_t{degree[rank]} - target_r);
            degree[rank] += delta;
            deviation += std::abs(std::int64_t{degree[rank]} - target_r);
        });
    }

    void remove_facet(std::uint64_t facet_rank) { apply(facet_rank, -1); }
    void add_facet(std::uint64_t facet_rank) { apply(facet_rank, +1); }
};

}  // namespace

NearRegularResult near_regular(int n, int d, std::int64_t r, std::uint64_t seed,
                               std::uint64_t max_iters) {
    if (r < 1) {
        throw ParameterError("target degree must be >= 1, got " + std::to_string(r));
    }
    if (d < 1 || d + 1 > n) {
        throw DimensionError("near-regular complex requires 1 <= d and d+1 <= n");
    }

    SubsetIndexer elements(n, d);
    SubsetIndexer facets(n, d + 1);
    const std::uint64_t n_elements = elements.count();
    const std::uint64_t n_slots = facets.count();

    // ceil(r*N/(d+1)) facets; infeasible targets clamp to the full slot
    // count and surface through the returned profile instead of an error.
    std::uint64_t target_facets = static_cast<std::uint64_t>(
        (static_cast<unsigned long long>(r) * n_elements + d) / (d + 1));
    target_facets = std::min(target_facets, n_slots);

    SeededRng rng(seed);

    // Partial Fisher-Yates draw of target_facets distinct slot ranks.
    std::vector<std::uint64_t> pool(n_slots);
    for (std::uint64_t i = 0; i < n_slots; ++i) pool[i] = i;
    for (std::uint64_t i = 0; i < target_facets; ++i) {
        std::uint64_t j = i + rng.below(n_slots - i);
        std::swap(pool[i], pool[j]);
    }

    SwapState state;
    state.elements = &elements;
    state.facets = &facets;
    state.member.assign(n_slots, false);
    state.degree.assign(n_elements, 0);
    state.target_r = r;
    state.facet_scratch.resize(static_cast<std::size_t>(d) + 1);
    state.face_scratch.resize(static_cast<std::size_t>(d));
    state.deviation = static_cast<std::int64_t>(n_elements) * r;
    for (std::uint64_t i = 0; i < target_facets; ++i) {
        state.add_facet(pool[i]);
    }

    // Slots incident to one element, split by current membership.
    std::vector<Vertex> sigma(static_cast<std::size_t>(d));
    std::vector<Vertex> candidate(static_cast<std::size_t>(d) + 1);
    auto incident_slots = [&](std::uint64_t element_rank, bool want_member) {
        std::vector<std::uint64_t> out;
        elements.unrank_into(element_rank, sigma);
        for (Vertex v = 1; v <= n; ++v) {
            if (std::binary_search(sigma.begin(), sigma.end(), v)) continue;
            std::size_t w = 0;
            std::size_t i = 0;
            while (i < sigma.size() && sigma[i] < v) candidate[w++] = sigma[i++];
            candidate[w++] = v;
            while (i < sigma.size()) candidate[w++] = sigma[i++];
            std::uint64_t rank = facets.rank_sorted(candidate);
            if (state.member[rank] == want_member) out.push_back(rank);
        }
        return out;
    };

    auto best_slot = [&](const std::vector<std::uint64_t>& slots,
                         std::int32_t delta) -> std::optional<std::uint64_t> {
        std::optional<std::uint64_t> best;
        std::int64_t best_change = 0;
        for (std::uint64_t slot : slots) {
            std::int64_t change = state.delta_if(slot, delta);
            if (!best || change < best_change) {
                best = slot;
                best_change = change;
            }
        }
        return best;
    };

    std::uint64_t iterations = 0;
    for (; iterations < max_iters && state.deviation > 0; ++iterations) {
        std::vector<std::uint64_t> over;
        std::vector<std::uint64_t> under;
        for (std::uint64_t rank = 0; rank < n_elements; ++rank) {
            if (state.degree[rank] > r) over.push_back(rank);
            else if (state.degree[rank] < r) under.push_back(rank);
        }

        const std::int64_t before = state.deviation;
        std::optional<std::uint64_t> removed;
        std::optional<std::uint64_t> added;
        if (!over.empty()) {
            auto slots = incident_slots(over[rng.below(over.size())], true);
            removed = best_slot(slots, -1);
            if (removed) state.remove_facet(*removed);
        }
        if (!under.empty()) {
            auto slots = incident_slots(under[rng.below(under.size())], false);
            added = best_slot(slots, +1);
            if (added) state.add_facet(*added);
        }
        if (!removed && !added) break;  // nothing movable; local dead end
        if (state.deviation > before) {
            // Worsening move: roll back in reverse order.
            if (added) state.remove_facet(*added);
            if (removed) state.add_facet(*removed);
        }
    }

    std::vector<std::uint64_t> kept;
    for (std::uint64_t rank = 0; rank < n_slots; ++rank) {
        if (state.member[rank]) kept.push_back(rank);
    }
    Complex complex(n, d, facet_list(facets, kept));
    DegreeProfile profile = complex.degree_profile();
    return NearRegularResult{std::move(complex), std::move(profile), iterations};
}

}  // namespace facetpath
