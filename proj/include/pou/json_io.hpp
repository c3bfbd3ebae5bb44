#pragma once

#include <string>

#include <json.hpp>

#include "pou/bounds.hpp"
#include "pou/certificate.hpp"
#include "pou/cover.hpp"
#include "pou/kuhn.hpp"
#include "pou/metric_space.hpp"
#include "pou/nerve.hpp"
#include "pou/partition.hpp"
#include "pou/profile.hpp"
#include "pou/refine.hpp"

namespace pou {

/// Infinite values cannot be represented as JSON numbers; they are written
/// as the string "inf" and read back accordingly.
nlohmann::json number_or_inf(double v);
double parse_number_or_inf(const nlohmann::json& j, const std::string& context);

/// Space schema: {"labels":[...], "metric":"matrix"|"euclidean",
/// "matrix":[[...]] or "coords":[[...]]} with exactly one of matrix/coords.
MetricSpace space_from_json(const nlohmann::json& j);
nlohmann::json space_to_json(const MetricSpace& space);

/// Cover schema: {"sets": {"<name>": [point indices]}}. Refinement files may
/// carry empty members; plain covers may not.
Cover cover_from_json(const nlohmann::json& j, int point_count, bool allow_empty = false);
nlohmann::json cover_to_json(const Cover& cover);

MetricSpace load_space(const std::string& path);
Cover load_cover(const std::string& path, int point_count, bool allow_empty = false);

nlohmann::json lebesgue_to_json(const LebesgueReport& report);
nlohmann::json top_two_to_json(const TopTwoReport& report);
nlohmann::json bounds_to_json(const BoundSet& bounds);

/// How the midpoint-property flag entering a bound set was chosen.
struct AmpDecision {
    bool value = false;
    std::string source = "none";  // "asserted" | "inferred" | "none"
    double tolerance = 0.0;
    double defect = 0.0;
};

nlohmann::json certificate_to_json(const LipschitzCertificate& cert,
                                   const MetricSpace& space, const Cover& cover,
                                   const AmpDecision& amp);

nlohmann::json refinement_to_json(const Refinement& refinement,
                                  const LebesgueReport& measured,
                                  const nlohmann::json& parameters);
nlohmann::json decomposition_to_json(const DisjointDecomposition& decomposition,
                                     const MetricSpace& space);
nlohmann::json kuhn_refinement_to_json(const KuhnRefinement& result,
                                       const LebesgueReport& measured);
nlohmann::json nerve_to_json(const NerveComplex& nerve,
                             const std::vector<SimplexPreimage>& preimages,
                             const Cover& cover);

/// Value matrix as CSV: header row, then one row per point with the label
/// followed by the member values at 17 significant digits.
std::string partition_csv(const PartitionOfUnity& pou, const MetricSpace& space);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// Canonical serialization used for files and golden comparisons: sorted
/// keys, two-space indent, trailing newline.
std::string canonical_dump(const nlohmann::json& j);

}  // namespace pou
