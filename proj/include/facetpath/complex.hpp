#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facetpath/simplex.hpp"

namespace facetpath {

/// Degree statistics over all C(n,d) elements of the metric space.
struct DegreeProfile {
    std::vector<std::int32_t> degrees;  // indexed by (d-1)-simplex colex rank
    std::int64_t min_degree = 0;
    std::int64_t max_degree = 0;
    std::map<std::int64_t, std::uint64_t> histogram;  // degree -> count
    std::optional<std::int64_t> regular_r;            // present iff min == max

    std::int64_t deviation_from(std::int64_t r) const;  // sum |degree - r|
};

/// A d-dimensional complex over {1..n} with complete (d-1)-skeleton: the
/// metric space always has all C(n,d) (d-1)-simplices, independent of which
/// d-simplices were chosen as facets.  Immutable after construction.
class Complex {
public:
    /// Normalizes (sorts, deduplicates) the facet list.  Duplicates are
    /// accepted; each dropped duplicate is reported through `warnings`
    /// when a sink is given.
    Complex(int n, int d, std::span<const Simplex> facets,
            std::vector<std::string>* warnings = nullptr);

    int n() const { return n_; }
    int d() const { return d_; }

    /// N: size of the metric space, C(n, d).
    std::uint64_t element_count() const { return elements_.count(); }
    /// Number of possible facets, C(n, d+1).
    std::uint64_t facet_slot_count() const { return facets_.count(); }
    std::uint64_t facet_count() const { return facet_count_; }

    const SubsetIndexer& element_indexer() const { return elements_; }
    const SubsetIndexer& facet_indexer() const { return facets_; }

    bool has_facet(const Simplex& facet) const;
    bool has_facet_rank(std::uint64_t facet_rank) const { return member_[facet_rank]; }

    /// All facets in colex rank order.
    std::vector<Simplex> facets() const;

    /// Number of facets containing sigma, computed as the number of
    /// extension vertices v with sigma + {v} a facet.
    std::int64_t degree(const Simplex& sigma) const;

    DegreeProfile degree_profile() const;

    /// The (d-1)-simplices co-facial with sigma in some facet, sigma itself
    /// excluded.  Sorted, duplicate-free; size is exactly d * degree(sigma).
    std::vector<Simplex> facet_neighbors(const Simplex& sigma) const;

    /// Partition of all element ranks into facet-adjacency components.
    /// Components are ordered by smallest member; members sorted ascending.
    std::vector<std::vector<std::uint64_t>> connected_components() const;

private:
    std::uint64_t validated_element_rank(const Simplex& sigma) const;

    int n_;
    int d_;
    SubsetIndexer elements_;  // d-subsets: the (d-1)-simplices
    SubsetIndexer facets_;    // (d+1)-subsets: the facet slots
    std::vector<bool> member_;
    std::uint64_t facet_count_ = 0;

    friend class NeighborFinder;
};

/// Streams the facet-adjacency neighbors of one element at a time without
/// materializing a graph.  Owns scratch buffers; make one per thread.
class NeighborFinder {
public:
    explicit NeighborFinder(const Complex& complex);

    /// Appends the neighbor ranks of `element_rank` to `out` (not cleared).
    /// For each extension vertex v with sigma + {v} a facet, emits the d
    /// elements (sigma - {u}) + {v}.
    void collect(std::uint64_t element_rank, std::vector<std::uint64_t>& out);

private:
    const Complex* cx_;
    std::vector<Vertex> sigma_;     // d vertices of the current element
    std::vector<Vertex> facet_;     // d+1 vertices of a candidate facet
    std::vector<Vertex> neighbor_;  // d vertices of an emitted neighbor
};

}  // namespace facetpath
