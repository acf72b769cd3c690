#include "sympfib/json_io.hpp"

namespace sympfib {

namespace {

Json rows_to_json(const RealMatrix& M) {
    Json rows = Json::array();
    for (int i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < M.cols(); ++j) row.push_back(M(i, j));
        rows.push_back(row);
    }
    return rows;
}

RealMatrix rows_from_json(const Json& rows) {
    if (!rows.is_array() || rows.empty())
        throw InvariantViolation("matrix JSON: expected a nonempty array of rows");
    const int r = static_cast<int>(rows.size());
    const int c = static_cast<int>(rows.at(0).size());
    RealMatrix M(r, c);
    for (int i = 0; i < r; ++i) {
        const auto& row = rows.at(i);
        if (static_cast<int>(row.size()) != c)
            throw InvariantViolation("matrix JSON: ragged rows");
        for (int j = 0; j < c; ++j) M(i, j) = row.at(j).get<double>();
    }
    return M;
}

}  // namespace

Json matrix_to_json(const RealMatrix& M) {
    return Json{{"n", M.rows() / 2}, {"rows", rows_to_json(M)}};
}

RealMatrix matrix_from_json(const Json& j) {
    const RealMatrix M = rows_from_json(j.at("rows"));
    if (j.contains("n") && 2 * j.at("n").get<int>() != M.rows())
        throw InvariantViolation("matrix JSON: n does not match row count");
    return M;
}

Json complex_matrix_to_json(const ComplexMatrix& M) {
    return Json{{"re", rows_to_json(M.real())}, {"im", rows_to_json(M.imag())}};
}

ComplexMatrix complex_matrix_from_json(const Json& j) {
    const RealMatrix re = rows_from_json(j.at("re"));
    const RealMatrix im = rows_from_json(j.at("im"));
    if (re.rows() != im.rows() || re.cols() != im.cols())
        throw InvariantViolation("complex matrix JSON: re/im shape mismatch");
    return re.cast<Complex>() + Complex(0, 1) * im.cast<Complex>();
}

Json siegel_to_json(const SiegelPoint& Z) {
    return Json{{"n", Z.n()}, {"X", rows_to_json(Z.X())}, {"Y", rows_to_json(Z.Y())}};
}

SiegelPoint siegel_from_json(const Json& j, double tau) {
    const RealMatrix X = rows_from_json(j.at("X"));
    const RealMatrix Y = rows_from_json(j.at("Y"));
    return SiegelPoint(X.cast<Complex>() + Complex(0, 1) * Y.cast<Complex>(), tau);
}

Json cover_to_json(const CoverElement& g) {
    return Json{{"matrix", matrix_to_json(g.M)}, {"w", g.w}};
}

CoverElement cover_from_json(const Json& j) {
    return CoverElement{matrix_from_json(j.at("matrix")), j.at("w").get<double>()};
}

Json ext_to_json(const ExtElement& e) {
    return Json{{"g", cover_to_json(e.g())}, {"r", e.r()}};
}

ExtElement ext_from_json(const Json& j) {
    const CoverElement g = cover_from_json(j.at("g"));
    return ExtElement(g, j.at("r").get<double>(), static_cast<int>(g.M.rows()) / 2);
}

Json model_point_to_json(const ModelPoint& p) {
    return Json{{"Z", siegel_to_json(p.Z)}, {"t", p.t}};
}

ModelPoint model_point_from_json(const Json& j, double tau) {
    return ModelPoint{siegel_from_json(j.at("Z"), tau), j.at("t").get<double>()};
}

SeifertDescriptor seifert_from_json(const Json& j) {
    SeifertDescriptor d;
    d.fiber_covolume = j.at("fiber_covolume").is_string()
                           ? j.at("fiber_covolume").get<std::string>()
                           : j.at("fiber_covolume").dump();
    d.base_euler = j.at("base_euler").is_string() ? j.at("base_euler").get<std::string>()
                                                  : j.at("base_euler").dump();
    d.arises_from_psp = j.value("arises_from_psp", false);
    return d;
}

}  // namespace sympfib
