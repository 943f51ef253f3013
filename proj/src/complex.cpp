#include "facetpath/complex.hpp"

#include <algorithm>
#include <cstdlib>

namespace facetpath {

namespace {

SubsetIndexer element_indexer_for(int n, int d) {
    if (d < 1 || d + 1 > n) {
        throw DimensionError("complex requires 1 <= d and d+1 <= n, got n=" +
                             std::to_string(n) + " d=" + std::to_string(d));
    }
    return SubsetIndexer(n, d);
}

}  // namespace

std::int64_t DegreeProfile::deviation_from(std::int64_t r) const {
    std::int64_t total = 0;
    for (std::int32_t deg : degrees) {
        total += std::abs(static_cast<std::int64_t>(deg) - r);
    }
    return total;
}

Complex::Complex(int n, int d, std::span<const Simplex> facets,
                 std::vector<std::string>* warnings)
    : n_(n), d_(d), elements_(element_indexer_for(n, d)), facets_(n, d + 1) {
    member_.assign(facets_.count(), false);
    for (const Simplex& facet : facets) {
        if (facet.dimension() != d_) {
            throw InvalidSimplexError("facet " + facet.to_string() + " is not a " +
                                      std::to_string(d_) + "-simplex");
        }
        std::uint64_t rank = facets_.rank(facet);
        if (member_[rank]) {
            if (warnings) {
                warnings->push_back("duplicate facet " + facet.to_string() + " dropped");
            }
            continue;
        }
        member_[rank] = true;
        ++facet_count_;
    }
}

bool Complex::has_facet(const Simplex& facet) const {
    return member_[facets_.rank(facet)];
}

std::vector<Simplex> Complex::facets() const {
    std::vector<Simplex> out;
    out.reserve(facet_count_);
    for (std::uint64_t rank = 0; rank < member_.size(); ++rank) {
        if (member_[rank]) out.push_back(facets_.unrank(rank));
    }
    return out;
}

std::uint64_t Complex::validated_element_rank(const Simplex& sigma) const {
    return elements_.rank(sigma);
}

std::int64_t Complex::degree(const Simplex& sigma) const {
    validated_element_rank(sigma);
    std::int64_t count = 0;
    for (Vertex v = 1; v <= n_; ++v) {
        if (sigma.contains(v)) continue;
        if (member_[facets_.rank_sorted(sigma.with_vertex(v).vertices())]) ++count;
    }
    return count;
}

DegreeProfile Complex::degree_profile() const {
    DegreeProfile profile;
    const std::uint64_t n_elements = elements_.count();
    profile.degrees.assign(n_elements, 0);

    // One pass over facets: each facet contributes 1 to each of its d+1 faces.
    std::vector<Vertex> facet(static_cast<std::size_t>(d_) + 1);
    std::vector<Vertex> face(static_cast<std::size_t>(d_));
    for (std::uint64_t rank = 0; rank < member_.size(); ++rank) {
        if (!member_[rank]) continue;
        facets_.unrank_into(rank, facet);
        for (std::size_t skip = 0; skip < facet.size(); ++skip) {
            std::size_t w = 0;
            for (std::size_t i = 0; i < facet.size(); ++i) {
                if (i != skip) face[w++] = facet[i];
            }
            ++profile.degrees[elements_.rank_sorted(face)];
        }
    }

    for (std::int32_t deg : profile.degrees) {
        ++profile.histogram[deg];
    }
    profile.min_degree = profile.histogram.begin()->first;
    profile.max_degree = profile.histogram.rbegin()->first;
    if (profile.min_degree == profile.max_degree) {
        profile.regular_r = profile.min_degree;
    }
    return profile;
}

std::vector<Simplex> Complex::facet_neighbors(const Simplex& sigma) const {
    std::uint64_t rank = validated_element_rank(sigma);
    NeighborFinder finder(*this);
    std::vector<std::uint64_t> ranks;
    finder.collect(rank, ranks);
    std::sort(ranks.begin(), ranks.end());
    ranks.erase(std::unique(ranks.begin(), ranks.end()), ranks.end());
    std::vector<Simplex> out;
    out.reserve(ranks.size());
    for (std::uint64_t r : ranks) out.push_back(elements_.unrank(r));
    return out;
}

std::vector<std::vector<std::uint64_t>> Complex::connected_components() const {
    const std::uint64_t n_elements = elements_.count();
    std::vector<bool> seen(n_elements, false);
    std::vector<std::vector<std::uint64_t>> components;
    NeighborFinder finder(*this);
    std::vector<std::uint64_t> frontier;
    std::vector<std::uint64_t> neighbors;

    for (std::uint64_t start = 0; start < n_elements; ++start) {
        if (seen[start]) continue;
        std::vector<std::uint64_t> component;
        seen[start] = true;
        frontier.clear();
        frontier.push_back(start);
        component.push_back(start);
        while (!frontier.empty()) {
            std::uint64_t current = frontier.back();
            frontier.pop_back();
            neighbors.clear();
            finder.collect(current, neighbors);
            for (std::uint64_t next : neighbors) {
                if (!seen[next]) {
                    seen[next] = true;
                    frontier.push_back(next);
                    component.push_back(next);
                }
            }
        }
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
    }
    return components;
}

NeighborFinder::NeighborFinder(const Complex& complex)
    : cx_(&complex),
      sigma_(static_cast<std::size_t>(complex.d())),
      facet_(static_cast<std::size_t>(complex.d()) + 1),
      neighbor_(static_cast<std::size_t>(complex.d())) {}

void NeighborFinder::collect(std::uint64_t element_rank,
                             std::vector<std::uint64_t>& out) {
    const int n = cx_->n_;
    cx_->elements_.unrank_into(element_rank, sigma_);
    for (Vertex v = 1; v <= n; ++v) {
        if (std::binary_search(sigma_.begin(), sigma_.end(), v)) continue;
        // Candidate facet: sigma with v merged in order.
        {
            std::size_t w = 0;
            std::size_t i = 0;
            while (i < sigma_.size() && sigma_[i] < v) facet_[w++] = sigma_[i++];
            facet_[w++] = v;
            while (i < sigma_.size()) facet_[w++] = sigma_[i++];
        }
        if (!cx_->member_[cx_->facets_.rank_sorted(facet_)]) continue;
        // Facet present: emit the d faces keeping v, i.e. drop each u in sigma.
        for (std::size_t skip = 0; skip < facet_.size(); ++skip) {
            if (facet_[skip] == v) continue;
            std::size_t w = 0;
            for (std::size_t i = 0; i < facet_.size(); ++i) {
                if (i != skip) neighbor_[w++] = facet_[i];
            }
            out.push_back(cx_->elements_.rank_sorted(neighbor_));
        }
    }
}

}  // namespace facetpath
