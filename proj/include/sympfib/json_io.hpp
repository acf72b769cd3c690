#pragma once

#include <json.hpp>

#include "sympfib/extension.hpp"
#include "sympfib/volume.hpp"

namespace sympfib {

using Json = nlohmann::json;

// Real matrix: {"n": <block size>, "rows": [[...], ...]}, row-major.
Json matrix_to_json(const RealMatrix& M);
RealMatrix matrix_from_json(const Json& j);

// Complex matrix: {"re": rows, "im": rows}.
Json complex_matrix_to_json(const ComplexMatrix& M);
ComplexMatrix complex_matrix_from_json(const Json& j);

// Siegel point: {"n": int, "X": rows, "Y": rows}.
Json siegel_to_json(const SiegelPoint& Z);
SiegelPoint siegel_from_json(const Json& j, double tau = 1e-9);

// Cover element: {"matrix": <matrix>, "w": float}.
Json cover_to_json(const CoverElement& g);
CoverElement cover_from_json(const Json& j);

// Extension element: {"g": <cover-element>, "r": float}.
Json ext_to_json(const ExtElement& e);
ExtElement ext_from_json(const Json& j);

// Model point: {"Z": <siegel-point>, "t": float}.
Json model_point_to_json(const ModelPoint& p);
ModelPoint model_point_from_json(const Json& j, double tau = 1e-9);

SeifertDescriptor seifert_from_json(const Json& j);

}  // namespace sympfib
