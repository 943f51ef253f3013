#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "facetpath/complex.hpp"

namespace facetpath {

/// Reproducible description of how a complex was generated; serialized into
/// document metadata so corpora can be rebuilt.
struct GenSpec {
    enum class Kind { Complete, RandomUniform, GraphImport, NearRegular };

    Kind kind = Kind::Complete;
    int n = 0;
    int d = 0;
    double p = 0.0;            // RandomUniform
    std::int64_t r = 0;        // NearRegular
    std::uint64_t seed = 0;    // RandomUniform, NearRegular
    std::uint64_t max_iters = 0;  // NearRegular
    std::string name;          // GraphImport via a named construction

    std::string describe() const;
};

/// All C(n, d+1) facets; (n-d)-regular.
Complex complete_complex(int n, int d);

/// Every possible facet included independently with probability p.  The
/// random stream is mt19937_64 seeded directly with `seed`; each facet rank
/// in colex order consumes one draw mapped to [0,1) by the 53-bit shift.
/// Identical seeds give identical facet sets, bitwise.
Complex random_uniform(int n, int d, double p, std::uint64_t seed);

/// A graph as a d=1 complex: facets are edges, metric elements are vertices,
/// and the facet-path metric is the ordinary graph metric.
Complex graph_import(std::span<const std::pair<Vertex, Vertex>> edges, int n,
                     std::vector<std::string>* warnings = nullptr);

Complex make_cycle(int m);
/// Two m-cycles joined by rungs: 2m vertices, 3m edges, 3-regular.
Complex make_circular_ladder(int m);
Complex make_petersen();
Complex make_complete_graph(int m);

/// Dispatches on "petersen", "cycle(M)", "circular_ladder(M)",
/// "complete_graph(M)"; a colon separator ("cycle:6") is also accepted.
Complex named_graph(const std::string& name);

struct NearRegularResult {
    Complex complex;
    DegreeProfile profile;      // callers must inspect profile.regular_r
    std::uint64_t iterations;   // swap iterations actually spent
};

/// Best-effort r-regular complex: starts from ceil(r*C(n,d)/(d+1)) random
/// facets and greedily swaps facets (remove at an over-degree element, add
/// at an under-degree one), never increasing sum |degree - r|.  Stops at
/// exact regularity or after max_iters swap attempts; the achieved profile
/// is always returned.  Infeasible parameters are not errors.
NearRegularResult near_regular(int n, int d, std::int64_t r, std::uint64_t seed,
                               std::uint64_t max_iters);

}  // namespace facetpath
