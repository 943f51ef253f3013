#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "facetpath/errors.hpp"

namespace facetpath {

using Vertex = int;
using BigInt = boost::multiprecision::cpp_int;

/// Largest number of ranks a single indexer may address.  Ranks beyond this
/// are rejected with a CapacityError before any allocation is attempted.
inline constexpr std::uint64_t kMaxIndexableRanks = std::uint64_t{1} << 32;

/// A k-simplex: a strictly increasing sequence of k+1 vertices from 1..n.
/// The vertex range is validated wherever an n is in scope, not here.
class Simplex {
public:
    /// Sorts the input; rejects empty input, vertices < 1 and duplicates.
    explicit Simplex(std::vector<Vertex> vertices);

    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t vertex_count() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    Vertex max_vertex() const { return vertices_.back(); }

    bool contains(Vertex v) const;

    /// The simplex with v added.  Pre: !contains(v).
    Simplex with_vertex(Vertex v) const;
    /// The simplex with v removed.  Pre: contains(v) and dimension() >= 1.
    Simplex without_vertex(Vertex v) const;

    /// All (k-1)-dimensional faces, one per deleted vertex.  A 0-simplex has
    /// no proper faces and yields an empty list.
    std::vector<Simplex> faces() const;

    std::string to_string() const;

    friend bool operator==(const Simplex&, const Simplex&) = default;
    friend std::strong_ordering operator<=>(const Simplex&, const Simplex&) = default;

private:
    struct Unchecked {};
    Simplex(Unchecked, std::vector<Vertex> sorted) : vertices_(std::move(sorted)) {}

    std::vector<Vertex> vertices_;

    friend class SubsetIndexer;
};

/// Exact binomial coefficient; k > n yields 0.
BigInt binomial(std::uint64_t n, std::uint64_t k);

/// Bijection between the m-subsets of {1..n} and [0, C(n,m)) in
/// colexicographic order: rank(S) = sum of C(s_i - 1, i) over sorted
/// s_1 < ... < s_m.  Construction fails with CapacityError when C(n,m)
/// does not fit the in-memory rank budget.
class SubsetIndexer {
public:
    SubsetIndexer(int n, int subset_size);

    int n() const { return n_; }
    int subset_size() const { return m_; }
    std::uint64_t count() const { return count_; }

    /// Validating rank of a simplex with subset_size() vertices over 1..n.
    std::uint64_t rank(const Simplex& s) const;
    /// Fast path; pre: sorted, strictly increasing, in 1..n, length m.
    std::uint64_t rank_sorted(std::span<const Vertex> sorted) const;

    Simplex unrank(std::uint64_t rank) const;
    /// Fast path writing into out (length m); pre: rank < count().
    void unrank_into(std::uint64_t rank, std::span<Vertex> out) const;

    /// C(i, j) for i <= n, j <= subset_size; pre: within table bounds.
    std::uint64_t choose(int i, int j) const;

private:
    int n_;
    int m_;
    std::uint64_t count_;
    // Pascal rows 0..n, columns 0..m; UINT64_MAX marks overflow.
    std::vector<std::uint64_t> table_;

    std::uint64_t cell(int i, int j) const {
        return table_[static_cast<std::size_t>(i) * (m_ + 1) + j];
    }
};

/// Colex rank of s among subsets of its size over {1..n}.
std::uint64_t colex_rank(const Simplex& s, int n);

/// Inverse: the k-simplex (k+1 vertices) over {1..n} with the given rank.
Simplex colex_unrank(std::uint64_t rank, int k, int n);

}  // namespace facetpath
