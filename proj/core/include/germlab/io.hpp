#pragma once

#include "germlab/connectivity.hpp"
#include "germlab/icss.hpp"
#include "germlab/monodromy.hpp"
#include "germlab/multiple_points.hpp"

#include <string>

#include <json.hpp>

namespace germlab::io {

using json = nlohmann::json;

json ideal_to_json(const Ideal& ideal);
Ideal ideal_from_json(const json& j);

struct GermFile {
    MapGerm germ;
    std::optional<Unfolding> unfolding;
};

/// Germ file: { "n":, "p":, "branches": [{"vars": [...], "components": [...]}],
/// "target_vars"?: [...], "params"?: [...], "unfolded_components"?: [[...]] }
GermFile germ_from_json(const json& j);
json germ_to_json(const MapGerm& g);
json unfolding_to_json(const Unfolding& f);

json locus_report_to_json(const LocusReport& rep);
json origin_dim_to_json(const OriginDim& d);
json multiple_point_space_to_json(const MultiplePointSpace& mps);
json dim_correctness_to_json(const DimCorrectnessReport& rep);
json degree_window_to_json(const DegreeWindow& w);
json analyze_report_to_json(const AnalyzeReport& rep);

QMat matrix_from_json(const json& j);
json matrix_to_json(const QMat& m);

/// Matrix file: { "degree": i, "matrix": [["1","0"],["0","1"]] }
MonodromyMatrix monodromy_matrix_from_json(const json& j);

/// Jordan data: [{"order": m, "exponent": e, "size": a, "count": c} ...].
json jordan_to_json(const JordanModule& m);

EquivariantComplex complex_from_json(const json& j, int k);
ICSSModel icss_model_from_json(const json& j);
AbsoluteIcssModel absolute_model_from_json(const json& j);
bool model_json_is_absolute(const json& j);
json icss_result_to_json(const IcssResult& r);
json icss_monodromy_to_json(const IcssMonodromyReport& r);

json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const json& j);

} // namespace germlab::io
