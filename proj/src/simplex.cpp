#include "facetpath/simplex.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace facetpath {

Simplex::Simplex(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.empty()) {
        throw InvalidSimplexError("simplex must have at least one vertex");
    }
    std::sort(vertices_.begin(), vertices_.end());
    if (vertices_.front() < 1) {
        throw InvalidSimplexError("vertices must be >= 1, got " +
                                  std::to_string(vertices_.front()));
    }
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw InvalidSimplexError("duplicate vertex in " + to_string());
    }
}

bool Simplex::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

Simplex Simplex::with_vertex(Vertex v) const {
    std::vector<Vertex> verts = vertices_;
    verts.insert(std::upper_bound(verts.begin(), verts.end(), v), v);
    return Simplex(Unchecked{}, std::move(verts));
}

Simplex Simplex::without_vertex(Vertex v) const {
    std::vector<Vertex> verts;
    verts.reserve(vertices_.size() - 1);
    for (Vertex u : vertices_) {
        if (u != v) verts.push_back(u);
    }
    return Simplex(Unchecked{}, std::move(verts));
}

std::vector<Simplex> Simplex::faces() const {
    std::vector<Simplex> out;
    if (dimension() == 0) return out;
    out.reserve(vertices_.size());
    for (Vertex v : vertices_) {
        out.push_back(without_vertex(v));
    }
    return out;
}

std::string Simplex::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (i) os << ',';
        os << vertices_[i];
    }
    os << '}';
    return os.str();
}

BigInt binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;  // exact: C(n-k+i, i) is an integer
    }
    return result;
}

namespace {

constexpr std::uint64_t kOverflow = std::numeric_limits<std::uint64_t>::max();

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    if (a == kOverflow || b == kOverflow || a > kOverflow - b) return kOverflow;
    return a + b;
}

}  // namespace

SubsetIndexer::SubsetIndexer(int n, int subset_size) : n_(n), m_(subset_size) {
    if (n < 1 || m_ < 1 || m_ > n) {
        throw ParameterError("subset indexer requires 1 <= subset_size <= n, got n=" +
                             std::to_string(n) + " size=" + std::to_string(m_));
    }
    table_.assign(static_cast<std::size_t>(n_ + 1) * (m_ + 1), 0);
    for (int i = 0; i <= n_; ++i) {
        table_[static_cast<std::size_t>(i) * (m_ + 1)] = 1;
        for (int j = 1; j <= std::min(i, m_); ++j) {
            table_[static_cast<std::size_t>(i) * (m_ + 1) + j] =
                saturating_add(cell(i - 1, j - 1), cell(i - 1, j));
        }
    }
    count_ = cell(n_, m_);
    if (count_ == kOverflow || count_ > kMaxIndexableRanks) {
        throw CapacityError("C(" + std::to_string(n_) + "," + std::to_string(m_) +
                            ") exceeds the in-memory rank capacity");
    }
}

std::uint64_t SubsetIndexer::choose(int i, int j) const {
    return cell(i, j);
}

std::uint64_t SubsetIndexer::rank(const Simplex& s) const {
    if (static_cast<int>(s.vertex_count()) != m_) {
        throw InvalidSimplexError("expected a " + std::to_string(m_ - 1) +
                                  "-simplex (" + std::to_string(m_) +
                                  " vertices), got " + s.to_string());
    }
    if (s.max_vertex() > n_) {
        throw InvalidSimplexError("vertex " + std::to_string(s.max_vertex()) +
                                  " out of range 1.." + std::to_string(n_) +
                                  " in " + s.to_string());
    }
    return rank_sorted(s.vertices());
}

std::uint64_t SubsetIndexer::rank_sorted(std::span<const Vertex> sorted) const {
    std::uint64_t r = 0;
    for (int i = 0; i < m_; ++i) {
        r += cell(sorted[static_cast<std::size_t>(i)] - 1, i + 1);
    }
    return r;
}

Simplex SubsetIndexer::unrank(std::uint64_t rank) const {
    if (rank >= count_) {
        throw RangeError("rank " + std::to_string(rank) + " out of range, C(" +
                         std::to_string(n_) + "," + std::to_string(m_) + ") = " +
                         std::to_string(count_));
    }
    std::vector<Vertex> verts(static_cast<std::size_t>(m_));
    unrank_into(rank, verts);
    return Simplex(Simplex::Unchecked{}, std::move(verts));
}

void SubsetIndexer::unrank_into(std::uint64_t rank, std::span<Vertex> out) const {
    // Positions are filled from the largest vertex down: at position i the
    // vertex is the largest c with C(c-1, i) <= remaining rank.
    int c = n_;
    for (int i = m_; i >= 1; --i) {
        while (cell(c - 1, i) > rank) --c;
        out[static_cast<std::size_t>(i - 1)] = c;
        rank -= cell(c - 1, i);
    }
}

std::uint64_t colex_rank(const Simplex& s, int n) {
    SubsetIndexer indexer(n, static_cast<int>(s.vertex_count()));
    return indexer.rank(s);
}

Simplex colex_unrank(std::uint64_t rank, int k, int n) {
    SubsetIndexer indexer(n, k + 1);
    return indexer.unrank(rank);
}

}  // namespace facetpath
