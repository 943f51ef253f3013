#include "facetpath/document.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace facetpath {

namespace {

using nlohmann::json;

std::string full_precision(double value) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10) << value;
    return os.str();
}

std::string csv_escape(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

template <typename T>
std::string join(const std::vector<T>& values, char sep) {
    std::ostringstream os;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) os << sep;
        os << values[i];
    }
    return os.str();
}

const json& require_key(const json& obj, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(std::string("missing required key '") + key + "'");
    }
    return *it;
}

int require_int(const json& obj, const char* key) {
    const json& value = require_key(obj, key);
    if (!value.is_number_integer()) {
        throw ParseError(std::string("key '") + key + "' must be an integer");
    }
    return value.get<int>();
}

}  // namespace

std::string serialize_complex(const Complex& complex,
                              const ComplexMetadata& metadata) {
    std::vector<std::vector<Vertex>> facet_lists;
    facet_lists.reserve(complex.facet_count());
    for (const Simplex& facet : complex.facets()) {
        facet_lists.push_back(facet.vertices());
    }
    std::sort(facet_lists.begin(), facet_lists.end());  // lexicographic

    json doc;
    doc["format_version"] = kFormatVersion;
    doc["n"] = complex.n();
    doc["d"] = complex.d();
    doc["facets"] = facet_lists;
    if (!metadata.empty()) {
        json meta;
        if (metadata.name) meta["name"] = *metadata.name;
        if (metadata.genspec) meta["genspec"] = *metadata.genspec;
        if (metadata.seed) meta["seed"] = *metadata.seed;
        doc["metadata"] = meta;
    }
    return doc.dump(2) + "\n";
}

ParsedComplex parse_complex(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError("malformed document at byte " + std::to_string(e.byte) +
                         ": " + e.what());
    }
    if (!doc.is_object()) {
        throw ParseError("document root must be an object");
    }
    const json& version = require_key(doc, "format_version");
    if (!version.is_string() || version.get<std::string>() != kFormatVersion) {
        throw ParseError("unsupported format_version, expected \"" +
                         std::string(kFormatVersion) + "\"");
    }
    int n = require_int(doc, "n");
    int d = require_int(doc, "d");
    const json& facet_array = require_key(doc, "facets");
    if (!facet_array.is_array()) {
        throw ParseError("'facets' must be an array of vertex lists");
    }

    std::vector<Simplex> facets;
    facets.reserve(facet_array.size());
    for (std::size_t i = 0; i < facet_array.size(); ++i) {
        const json& entry = facet_array[i];
        if (!entry.is_array() || entry.empty()) {
            throw ParseError("facet #" + std::to_string(i) +
                             " must be a nonempty array of integers");
        }
        std::vector<Vertex> verts;
        verts.reserve(entry.size());
        for (const json& v : entry) {
            if (!v.is_number_integer()) {
                throw ParseError("facet #" + std::to_string(i) +
                                 " has a non-integer vertex");
            }
            verts.push_back(v.get<Vertex>());
        }
        try {
            facets.emplace_back(std::move(verts));
        } catch (const InvalidSimplexError& e) {
            throw InvalidSimplexError("facet #" + std::to_string(i) + ": " + e.what());
        }
    }

    ComplexMetadata metadata;
    if (auto it = doc.find("metadata"); it != doc.end() && it->is_object()) {
        const json& meta = *it;
        if (auto m = meta.find("name"); m != meta.end() && m->is_string()) {
            metadata.name = m->get<std::string>();
        }
        if (auto m = meta.find("genspec"); m != meta.end() && m->is_string()) {
            metadata.genspec = m->get<std::string>();
        }
        if (auto m = meta.find("seed"); m != meta.end() && m->is_number_unsigned()) {
            metadata.seed = m->get<std::uint64_t>();
        }
    }

    std::vector<std::string> warnings;
    Complex complex(n, d, facets, &warnings);
    return ParsedComplex{std::move(complex), std::move(metadata), std::move(warnings)};
}

AnalysisDocument make_analysis(const Complex& complex, std::uint64_t source_rank,
                               unsigned threads) {
    if (source_rank >= complex.element_count()) {
        throw RangeError("source rank " + std::to_string(source_rank) +
                         " out of range, N = " + std::to_string(complex.element_count()));
    }

    AnalysisDocument doc;
    doc.n = complex.n();
    doc.d = complex.d();
    doc.n_elements = complex.element_count();

    DegreeProfile degrees = complex.degree_profile();
    doc.min_degree = degrees.min_degree;
    doc.max_degree = degrees.max_degree;
    doc.regular_r = degrees.regular_r;
    doc.degree_histogram.assign(degrees.histogram.begin(), degrees.histogram.end());

    MetricReport metric = metric_report(complex, threads);
    doc.component_count = metric.components.size();
    for (const auto& component : metric.components) {
        doc.component_sizes.push_back(component.size());
    }
    doc.diameter = metric.diameter;
    doc.diameter_reason = metric.diameter_reason;
    for (std::int32_t ecc : metric.eccentricities) {
        if (ecc == kUnreachable) continue;
        doc.ecc_min = doc.ecc_min ? std::min(*doc.ecc_min, ecc) : ecc;
        doc.ecc_max = doc.ecc_max ? std::max(*doc.ecc_max, ecc) : ecc;
    }
    doc.source_rank = source_rank;
    doc.source_vertices = complex.element_indexer().unrank(source_rank).vertices();
    doc.source_layers = metric.layer_profiles[source_rank];

    doc.bounds = check_bounds(complex, metric, degrees);
    return doc;
}

namespace {

json bounds_context_json(const BoundReport& report) {
    json context;
    context["N"] = report.n_elements;
    context["d"] = report.d;
    context["regular_r"] =
        report.regular_r ? json(*report.regular_r) : json(nullptr);
    context["min_degree"] = report.min_degree;
    return context;
}

json moore_side_json(const BoundReport& report) {
    json moore;
    moore["applicable"] = report.moore_applicable;
    moore["skip_reason"] = report.moore_applicable ? json(nullptr)
                                                   : json(report.moore_skip_reason);
    moore["measured_diameter"] =
        report.measured_diameter ? json(*report.measured_diameter) : json(nullptr);
    if (report.moore_applicable) {
        moore["ball_at_diameter"] = report.moore_ball_at_diameter.str();
        moore["degree_only_ball_at_diameter"] =
            report.degree_only_ball_at_diameter.str();
        moore["satisfied"] = report.moore_bound_satisfied;
        moore["diameter_lower_bound_int"] = report.diameter_lb_int;
        moore["diameter_lower_bound_real"] =
            report.diameter_lb_real ? json(*report.diameter_lb_real) : json(nullptr);
        moore["lower_bound_holds"] = report.diameter_lb_holds;
    }
    return moore;
}

json min_degree_side_json(const BoundReport& report, const Complex& complex) {
    json side;
    side["applicable"] = report.min_degree_applicable;
    side["skip_reason"] = report.min_degree_applicable
                              ? json(nullptr)
                              : json(report.min_degree_skip_reason);
    if (report.min_degree_applicable) {
        side["radius_bound"] = report.min_degree_radius_bound;
        side["covering_radius"] = report.min_degree_covering_radius;
        side["holds"] = report.min_degree_bound_holds;
        json violations = json::array();
        for (const auto& violation : report.min_degree_violations) {
            json witness;
            witness["rank"] = violation.rank;
            witness["simplex"] =
                complex.element_indexer().unrank(violation.rank).vertices();
            witness["eccentricity"] = violation.eccentricity;
            violations.push_back(witness);
        }
        side["violations"] = violations;
    }
    return side;
}

}  // namespace

nlohmann::json bound_report_to_json(const BoundReport& report,
                                    const Complex& complex) {
    json doc;
    doc["context"] = bounds_context_json(report);
    doc["moore_bound"] = moore_side_json(report);
    doc["min_degree_bound"] = min_degree_side_json(report, complex);
    return doc;
}

std::string bound_report_to_csv(const BoundReport& report, const Complex& complex) {
    std::ostringstream os;
    os << "N,d,regular_r,min_degree,moore_applicable,moore_skip_reason,"
          "measured_diameter,moore_ball_at_diameter,degree_only_ball_at_diameter,"
          "moore_bound_satisfied,diameter_lb_int,diameter_lb_real,diameter_lb_holds,"
          "min_degree_applicable,min_degree_skip_reason,min_degree_radius_bound,"
          "min_degree_covering_radius,min_degree_bound_holds,violation_count,"
          "violations\n";
    os << report.n_elements << ',' << report.d << ','
       << (report.regular_r ? std::to_string(*report.regular_r) : "") << ','
       << report.min_degree << ',' << (report.moore_applicable ? "true" : "false")
       << ',' << csv_escape(report.moore_skip_reason) << ','
       << (report.measured_diameter ? std::to_string(*report.measured_diameter) : "")
       << ',';
    if (report.moore_applicable) {
        os << report.moore_ball_at_diameter.str() << ','
           << report.degree_only_ball_at_diameter.str() << ','
           << (report.moore_bound_satisfied ? "true" : "false") << ','
           << report.diameter_lb_int << ','
           << (report.diameter_lb_real ? full_precision(*report.diameter_lb_real) : "")
           << ',' << (report.diameter_lb_holds ? "true" : "false") << ',';
    } else {
        os << ",,,,,,";
    }
    os << (report.min_degree_applicable ? "true" : "false") << ','
       << csv_escape(report.min_degree_skip_reason) << ',';
    if (report.min_degree_applicable) {
        std::vector<std::string> witnesses;
        for (const auto& violation : report.min_degree_violations) {
            Simplex simplex = complex.element_indexer().unrank(violation.rank);
            std::string verts;
            for (std::size_t i = 0; i < simplex.vertices().size(); ++i) {
                if (i) verts += ' ';
                verts += std::to_string(simplex.vertices()[i]);
            }
            witnesses.push_back(std::to_string(violation.rank) + ":" + verts + ":" +
                                std::to_string(violation.eccentricity));
        }
        os << report.min_degree_radius_bound << ','
           << report.min_degree_covering_radius << ','
           << (report.min_degree_bound_holds ? "true" : "false") << ','
           << report.min_degree_violations.size() << ','
           << csv_escape(join(witnesses, '|'));
    } else {
        os << ",,,,";
    }
    os << '\n';
    return os.str();
}

nlohmann::json analysis_to_json(const AnalysisDocument& doc) {
    json out;
    out["n"] = doc.n;
    out["d"] = doc.d;
    out["N"] = doc.n_elements;

    json degrees;
    degrees["min"] = doc.min_degree;
    degrees["max"] = doc.max_degree;
    degrees["regular_r"] = doc.regular_r ? json(*doc.regular_r) : json(nullptr);
    json histogram;
    for (const auto& [degree, count] : doc.degree_histogram) {
        histogram[std::to_string(degree)] = count;
    }
    degrees["histogram"] = histogram;
    out["degrees"] = degrees;

    json connectivity;
    connectivity["component_count"] = doc.component_count;
    connectivity["component_sizes"] = doc.component_sizes;
    out["connectivity"] = connectivity;

    out["diameter"] = doc.diameter ? json(*doc.diameter) : json(nullptr);
    out["diameter_reason"] =
        doc.diameter ? json(nullptr) : json(doc.diameter_reason);
    json ecc;
    ecc["min"] = doc.ecc_min ? json(*doc.ecc_min) : json(nullptr);
    ecc["max"] = doc.ecc_max ? json(*doc.ecc_max) : json(nullptr);
    out["eccentricity"] = ecc;

    json source;
    source["rank"] = doc.source_rank;
    source["simplex"] = doc.source_vertices;
    source["layers"] = doc.source_layers;
    out["source"] = source;

    out["bounds"]["context"] = bounds_context_json(doc.bounds);
    out["bounds"]["moore_bound"] = moore_side_json(doc.bounds);
    // The violation witness list needs the complex for vertex lists; the
    // analysis document stores only counts plus bound values.
    json side;
    side["applicable"] = doc.bounds.min_degree_applicable;
    side["skip_reason"] = doc.bounds.min_degree_applicable
                              ? json(nullptr)
                              : json(doc.bounds.min_degree_skip_reason);
    if (doc.bounds.min_degree_applicable) {
        side["radius_bound"] = doc.bounds.min_degree_radius_bound;
        side["covering_radius"] = doc.bounds.min_degree_covering_radius;
        side["holds"] = doc.bounds.min_degree_bound_holds;
        side["violation_count"] = doc.bounds.min_degree_violations.size();
    }
    out["bounds"]["min_degree_bound"] = side;
    return out;
}

std::string analysis_to_csv(const AnalysisDocument& doc) {
    std::vector<std::string> histogram;
    for (const auto& [degree, count] : doc.degree_histogram) {
        histogram.push_back(std::to_string(degree) + ":" + std::to_string(count));
    }
    std::string source_simplex;
    for (std::size_t i = 0; i < doc.source_vertices.size(); ++i) {
        if (i) source_simplex += ' ';
        source_simplex += std::to_string(doc.source_vertices[i]);
    }

    std::ostringstream os;
    os << "n,d,N,min_degree,max_degree,regular_r,degree_histogram,"
          "component_count,component_sizes,diameter,diameter_reason,ecc_min,"
          "ecc_max,source_rank,source_simplex,source_layers,moore_applicable,"
          "moore_skip_reason,moore_ball_at_diameter,degree_only_ball_at_diameter,"
          "moore_bound_satisfied,diameter_lb_int,diameter_lb_real,diameter_lb_holds,"
          "min_degree_applicable,min_degree_skip_reason,min_degree_radius_bound,"
          "min_degree_covering_radius,min_degree_bound_holds,violation_count\n";
    os << doc.n << ',' << doc.d << ',' << doc.n_elements << ',' << doc.min_degree
       << ',' << doc.max_degree << ','
       << (doc.regular_r ? std::to_string(*doc.regular_r) : "") << ','
       << csv_escape(join(histogram, '|')) << ',' << doc.component_count << ','
       << csv_escape(join(doc.component_sizes, '|')) << ','
       << (doc.diameter ? std::to_string(*doc.diameter) : "") << ','
       << csv_escape(doc.diameter ? "" : doc.diameter_reason) << ','
       << (doc.ecc_min ? std::to_string(*doc.ecc_min) : "") << ','
       << (doc.ecc_max ? std::to_string(*doc.ecc_max) : "") << ','
       << doc.source_rank << ',' << csv_escape(source_simplex) << ','
       << csv_escape(join(doc.source_layers, '|')) << ','
       << (doc.bounds.moore_applicable ? "true" : "false") << ','
       << csv_escape(doc.bounds.moore_skip_reason) << ',';
    if (doc.bounds.moore_applicable) {
        os << doc.bounds.moore_ball_at_diameter.str() << ','
           << doc.bounds.degree_only_ball_at_diameter.str() << ','
           << (doc.bounds.moore_bound_satisfied ? "true" : "false") << ','
           << doc.bounds.diameter_lb_int << ','
           << (doc.bounds.diameter_lb_real
                   ? full_precision(*doc.bounds.diameter_lb_real)
                   : "")
           << ',' << (doc.bounds.diameter_lb_holds ? "true" : "false") << ',';
    } else {
        os << ",,,,,,";
    }
    os << (doc.bounds.min_degree_applicable ? "true" : "false") << ','
       << csv_escape(doc.bounds.min_degree_skip_reason) << ',';
    if (doc.bounds.min_degree_applicable) {
        os << doc.bounds.min_degree_radius_bound << ','
           << doc.bounds.min_degree_covering_radius << ','
           << (doc.bounds.min_degree_bound_holds ? "true" : "false") << ','
           << doc.bounds.min_degree_violations.size();
    } else {
        os << ",,,";
    }
    os << '\n';
    return os.str();
}

}  // namespace facetpath
