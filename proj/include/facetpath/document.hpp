#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "facetpath/bounds.hpp"
#include "facetpath/complex.hpp"
#include "facetpath/metric.hpp"

namespace facetpath {

inline constexpr const char* kFormatVersion = "1";

struct ComplexMetadata {
    std::optional<std::string> name;
    std::optional<std::string> genspec;
    std::optional<std::uint64_t> seed;

    bool empty() const { return !name && !genspec && !seed; }
};

struct ParsedComplex {
    Complex complex;
    ComplexMetadata metadata;
    std::vector<std::string> warnings;
};

/// Canonical document text: facets vertex-sorted and listed in
/// lexicographic order, fixed key order, 2-space indent, trailing newline.
/// Byte-stable for a fixed complex and metadata.
std::string serialize_complex(const Complex& complex,
                              const ComplexMetadata& metadata = {});

/// Inverse of serialize_complex, tolerant of non-canonical input: facet
/// vertex lists may be unsorted, duplicates are dropped with a warning.
ParsedComplex parse_complex(const std::string& text);

/// Everything the analyze command reports about one complex.
struct AnalysisDocument {
    int n = 0;
    int d = 0;
    std::uint64_t n_elements = 0;  // N = C(n, d)

    std::int64_t min_degree = 0;
    std::int64_t max_degree = 0;
    std::optional<std::int64_t> regular_r;
    std::vector<std::pair<std::int64_t, std::uint64_t>> degree_histogram;

    std::uint64_t component_count = 0;
    std::vector<std::uint64_t> component_sizes;

    std::optional<std::int32_t> diameter;
    std::string diameter_reason;

    std::optional<std::int32_t> ecc_min;  // over sources with finite ecc
    std::optional<std::int32_t> ecc_max;

    std::uint64_t source_rank = 0;
    std::vector<Vertex> source_vertices;
    std::vector<std::uint64_t> source_layers;

    BoundReport bounds;
};

AnalysisDocument make_analysis(const Complex& complex, std::uint64_t source_rank,
                               unsigned threads = 0);

nlohmann::json analysis_to_json(const AnalysisDocument& doc);
std::string analysis_to_csv(const AnalysisDocument& doc);

/// Bound report rendering used by the check-bounds command; witnesses carry
/// both the rank and the vertex list of the offending simplex.
nlohmann::json bound_report_to_json(const BoundReport& report, const Complex& complex);
std::string bound_report_to_csv(const BoundReport& report, const Complex& complex);

}  // namespace facetpath
