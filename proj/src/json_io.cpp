#include "pou/json_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "pou/error.hpp"

namespace pou {

using nlohmann::json;

json number_or_inf(double v) {
    if (std::isinf(v)) return json(v > 0 ? "inf" : "-inf");
    return json(v);
}

double parse_number_or_inf(const json& j, const std::string& context) {
    if (j.is_number()) return j.get<double>();
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return kInfinite;
        if (s == "-inf") return -kInfinite;
    }
    Error::raise(ErrorKind::SchemaError, context + ": expected a number or \"inf\"");
}

namespace {

const json& require(const json& j, const std::string& key, const std::string& context) {
    if (!j.is_object() || !j.contains(key)) {
        Error::raise(ErrorKind::SchemaError, context + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

std::vector<std::vector<double>> parse_real_table(const json& j, const std::string& context) {
    if (!j.is_array() || j.empty()) {
        Error::raise(ErrorKind::SchemaError, context + ": expected a nonempty array of rows");
    }
    std::vector<std::vector<double>> table;
    table.reserve(j.size());
    for (std::size_t r = 0; r < j.size(); ++r) {
        const json& row = j.at(r);
        if (!row.is_array()) {
            Error::raise(ErrorKind::SchemaError,
                         context + ": row " + std::to_string(r) + " is not an array");
        }
        std::vector<double> values;
        values.reserve(row.size());
        for (std::size_t c = 0; c < row.size(); ++c) {
            const json& cell = row.at(c);
            if (!cell.is_number()) {
                Error::raise(ErrorKind::SchemaError, context + ": entry (" + std::to_string(r) +
                                                         "," + std::to_string(c) +
                                                         ") is not a number");
            }
            values.push_back(cell.get<double>());
        }
        table.push_back(std::move(values));
    }
    return table;
}

json mu_names(const std::vector<std::size_t>& mu, const Cover& cover) {
    json names = json::array();
    for (std::size_t a : mu) names.push_back(cover.name(a));
    return names;
}

}  // namespace

MetricSpace space_from_json(const json& j) {
    std::vector<std::string> labels;
    if (j.contains("labels")) {
        const json& raw = j.at("labels");
        if (!raw.is_array()) Error::raise(ErrorKind::SchemaError, "space: labels must be an array");
        for (const auto& label : raw) {
            if (label.is_string()) {
                labels.push_back(label.get<std::string>());
            } else {
                labels.push_back(label.dump());
            }
        }
    }

    const json& metric = require(j, "metric", "space");
    if (!metric.is_string()) {
        Error::raise(ErrorKind::SchemaError, "space: metric must be \"matrix\" or \"euclidean\"");
    }
    const std::string kind = metric.get<std::string>();
    const bool has_matrix = j.contains("matrix");
    const bool has_coords = j.contains("coords");
    if (has_matrix == has_coords) {
        Error::raise(ErrorKind::SchemaError,
                     "space: exactly one of \"matrix\" and \"coords\" is required");
    }
    if (kind == "matrix") {
        if (!has_matrix) Error::raise(ErrorKind::SchemaError, "space: metric \"matrix\" needs a matrix");
        return MetricSpace::validated(parse_real_table(j.at("matrix"), "space.matrix"),
                                      std::move(labels));
    }
    if (kind == "euclidean") {
        if (!has_coords) Error::raise(ErrorKind::SchemaError, "space: metric \"euclidean\" needs coords");
        return MetricSpace::from_points(parse_real_table(j.at("coords"), "space.coords"),
                                        std::move(labels));
    }
    Error::raise(ErrorKind::SchemaError, "space: unknown metric kind \"" + kind + "\"");
}

json space_to_json(const MetricSpace& space) {
    json j;
    j["labels"] = space.labels();
    if (space.has_coords()) {
        j["metric"] = "euclidean";
        j["coords"] = space.coords();
    } else {
        j["metric"] = "matrix";
        json matrix = json::array();
        for (int i = 0; i < space.size(); ++i) {
            json row = json::array();
            for (int k = 0; k < space.size(); ++k) row.push_back(space.dist(i, k));
            matrix.push_back(std::move(row));
        }
        j["matrix"] = std::move(matrix);
    }
    return j;
}

Cover cover_from_json(const json& j, int point_count, bool allow_empty) {
    const json& sets = require(j, "sets", "cover");
    if (!sets.is_object() || sets.empty()) {
        Error::raise(ErrorKind::SchemaError, "cover: \"sets\" must be a nonempty object");
    }
    std::vector<std::string> names;
    std::vector<std::vector<int>> members;
    for (const auto& [name, points] : sets.items()) {
        if (!points.is_array()) {
            Error::raise(ErrorKind::SchemaError, "cover: member \"" + name + "\" is not an array");
        }
        std::vector<int> member;
        member.reserve(points.size());
        for (const auto& p : points) {
            if (!p.is_number_integer()) {
                Error::raise(ErrorKind::SchemaError,
                             "cover: member \"" + name + "\" has a non-integer point index");
            }
            member.push_back(p.get<int>());
        }
        names.push_back(name);
        members.push_back(std::move(member));
    }
    return allow_empty ? Cover::refinement_family(std::move(names), std::move(members), point_count)
                       : Cover::create(std::move(names), std::move(members), point_count);
}

json cover_to_json(const Cover& cover) {
    json sets = json::object();
    for (std::size_t a = 0; a < cover.set_count(); ++a) {
        sets[cover.name(a)] = cover.member(a);
    }
    return json{{"sets", std::move(sets)}};
}

MetricSpace load_space(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        Error::raise(ErrorKind::SchemaError, path + ": " + e.what());
    }
    return space_from_json(j);
}

Cover load_cover(const std::string& path, int point_count, bool allow_empty) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        Error::raise(ErrorKind::SchemaError, path + ": " + e.what());
    }
    return cover_from_json(j, point_count, allow_empty);
}

json lebesgue_to_json(const LebesgueReport& report) {
    json j;
    json pointwise = json::array();
    for (double v : report.pointwise) pointwise.push_back(number_or_inf(v));
    j["pointwise"] = std::move(pointwise);
    j["optimal"] = number_or_inf(report.optimal);
    j["multiplicity"] = report.multiplicity;
    json rho = json::array();
    for (const RhoMultiplicity& entry : report.rho_multiplicity) {
        rho.push_back(json{{"rho", entry.rho}, {"value", entry.value}, {"exact", entry.exact}});
    }
    j["rho_multiplicity"] = std::move(rho);
    return j;
}

json top_two_to_json(const TopTwoReport& report) {
    return json{{"first_bound_ok", report.first_bound_ok},
                {"min_top_two_sum", number_or_inf(report.min_top_two_sum)},
                {"twice_optimal", number_or_inf(2.0 * report.optimal_lebesgue)},
                {"midpoint_defect", report.midpoint_defect},
                {"status", to_string(report.status)},
                {"argmin_point", report.argmin_point}};
}

json bounds_to_json(const BoundSet& bounds) {
    return json{{"multiplicity", bounds.multiplicity},
                {"lebesgue", number_or_inf(bounds.lebesgue)},
                {"p", bounds.p},
                {"q", std::isinf(bounds.q) ? json("inf") : json(bounds.q)},
                {"amp", bounds.amp},
                {"amp_constant", bounds.amp_constant},
                {"per_function", bounds.per_function},
                {"partial_sum", bounds.partial_sum},
                {"vector_lq", bounds.vector_lq},
                {"roots", bounds.roots}};
}

json certificate_to_json(const LipschitzCertificate& cert, const MetricSpace& space,
                         const Cover& cover, const AmpDecision& amp) {
    json witnesses = json::array();
    witnesses.push_back(json{{"kind", "per_function"},
                             {"set", cover.name(cert.per_function_set)},
                             {"x", space.label(cert.per_function_witness.x)},
                             {"y", space.label(cert.per_function_witness.y)},
                             {"constant", cert.empirical_per_function}});
    witnesses.push_back(json{{"kind", "worst_partial_sum"},
                             {"mu", mu_names(cert.partial_sum_witness.mu, cover)},
                             {"x", space.label(cert.partial_sum_witness.x)},
                             {"y", space.label(cert.partial_sum_witness.y)},
                             {"constant", cert.empirical_worst_partial_sum}});
    witnesses.push_back(json{{"kind", "vector_lq"},
                             {"q", std::isinf(cert.bounds.q) ? json("inf") : json(cert.bounds.q)},
                             {"x", space.label(cert.vector_witness.x)},
                             {"y", space.label(cert.vector_witness.y)},
                             {"constant", cert.empirical_vector_lq}});

    return json{
        {"empirical",
         {{"per_function", cert.empirical_per_function},
          {"worst_partial_sum", cert.empirical_worst_partial_sum},
          {"vector_lq", cert.empirical_vector_lq}}},
        {"bounds", bounds_to_json(cert.bounds)},
        {"checks",
         {{"per_function", cert.per_function_pass},
          {"worst_partial_sum", cert.partial_sum_pass},
          {"vector_lq", cert.vector_pass}}},
        {"amp",
         {{"value", amp.value},
          {"source", amp.source},
          {"tolerance", amp.tolerance},
          {"midpoint_defect", amp.defect}}},
        {"verdict", cert.pass() ? "pass" : "fail"},
        {"witnesses", std::move(witnesses)}};
}

json refinement_to_json(const Refinement& refinement, const LebesgueReport& measured,
                        const json& parameters) {
    json sets = json::object();
    for (std::size_t a = 0; a < refinement.refined.set_count(); ++a) {
        sets[refinement.refined.name(a)] = refinement.refined.member(a);
    }
    json provenance{{"construction", refinement.construction},
                    {"parameters", parameters},
                    {"claimed",
                     {{"lebesgue", number_or_inf(refinement.claimed_lebesgue)},
                      {"multiplicity", refinement.claimed_multiplicity}}},
                    {"measured",
                     {{"lebesgue", number_or_inf(measured.optimal)},
                      {"multiplicity", measured.multiplicity}}}};
    return json{{"sets", std::move(sets)}, {"provenance", std::move(provenance)}};
}

json decomposition_to_json(const DisjointDecomposition& decomposition,
                           const MetricSpace& space) {
    json families = json::array();
    json sets = json::object();
    for (std::size_t k = 0; k < decomposition.families.size(); ++k) {
        const SeparatedFamily& family = decomposition.families[k];
        json members = json::array();
        for (std::size_t i = 0; i < family.members.size(); ++i) {
            const SeparatedSet& member = family.members[i];
            json mu = json::array();
            for (std::size_t a : member.mu) mu.push_back(a);
            members.push_back(json{{"mu", std::move(mu)}, {"points", member.points}});
            char name[32];
            std::snprintf(name, sizeof(name), "F%zu.%zu", k + 1, i);
            sets[name] = member.points;
        }
        families.push_back(json{{"size", k + 1},
                                {"members", std::move(members)},
                                {"separation", number_or_inf(family.separation)}});
    }
    return json{{"sets", std::move(sets)},
                {"families", std::move(families)},
                {"provenance",
                 {{"construction", "decompose"},
                  {"parameters",
                   {{"epsilon", decomposition.params.epsilon},
                    {"zeta", decomposition.params.zeta},
                    {"multiplicity", decomposition.params.multiplicity}}},
                  {"points", space.size()}}}};
}

json kuhn_refinement_to_json(const KuhnRefinement& result, const LebesgueReport& measured) {
    json j = refinement_to_json(result.refinement, measured,
                                json{{"dim", result.grid.dim},
                                     {"spacing", result.grid.spacing},
                                     {"stars", result.star_count}});
    j["provenance"]["simplex"] = json{
        {"star_diameter_bound", result.star_diameter_bound},
        {"nominal_star_diameter", result.nominal_star_diameter},
        {"diameter_exceeds_nominal", result.diameter_exceeds_nominal}};
    return j;
}

json nerve_to_json(const NerveComplex& nerve, const std::vector<SimplexPreimage>& preimages,
                   const Cover& cover) {
    json simplices = json::array();
    for (const SimplexPreimage& entry : preimages) {
        simplices.push_back(json{{"mu", mu_names(entry.mu, cover)},
                                 {"points", entry.points},
                                 {"preimage_diameter", entry.diameter}});
    }
    return json{{"dimension", nerve.dimension}, {"simplices", std::move(simplices)}};
}

std::string partition_csv(const PartitionOfUnity& pou, const MetricSpace& space) {
    std::ostringstream out;
    out << "point";
    for (std::size_t a = 0; a < pou.set_count(); ++a) out << "," << pou.cover().name(a);
    out << "\n";
    char buffer[64];
    for (int x = 0; x < pou.point_count(); ++x) {
        out << space.label(x);
        for (std::size_t a = 0; a < pou.set_count(); ++a) {
            std::snprintf(buffer, sizeof(buffer), "%.17g", pou.value(x, a));
            out << "," << buffer;
        }
        out << "\n";
    }
    return out.str();
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) Error::raise(ErrorKind::IoError, "cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) Error::raise(ErrorKind::IoError, "cannot write " + path);
    out << content;
    if (!out) Error::raise(ErrorKind::IoError, "short write to " + path);
}

std::string canonical_dump(const json& j) {
    return j.dump(2) + "\n";
}

}  // namespace pou
