#include "cubelin/io.hpp"

#include <string>

namespace cubelin {
namespace {

Json optional_json(const auto& value) {
  if (!value) return nullptr;
  return Json(*value);
}

}  // namespace

ScalarMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw MatrixParseError("matrix must be a JSON array of rows");
  std::vector<std::vector<GaussianRational>> rows;
  rows.reserve(j.size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    const Json& row = j[r];
    if (!row.is_array()) {
      throw MatrixParseError("row " + std::to_string(r + 1) + " is not a JSON array");
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw MatrixParseError("ragged matrix: row " + std::to_string(r + 1) + " has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
    }
    std::vector<GaussianRational> values;
    values.reserve(row.size());
    for (std::size_t c = 0; c < row.size(); ++c) {
      const std::string where = "row " + std::to_string(r + 1) + ", column " + std::to_string(c + 1);
      if (!row[c].is_string()) throw MatrixParseError(where + ": entry must be a string literal");
      try {
        values.push_back(GaussianRational::parse(row[c].get<std::string>()));
      } catch (const ParseError& e) {
        throw MatrixParseError(where + ": " + e.what());
      }
    }
    rows.push_back(std::move(values));
  }
  return ScalarMatrix::from_rows(rows);
}

ScalarMatrix parse_matrix(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MatrixParseError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
  return matrix_from_json(j);
}

Json matrix_to_json(const ScalarMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    out.push_back(std::move(row));
  }
  return out;
}

const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names{"paper-example", "shear-2", "zero-3"};
  return names;
}

ScalarMatrix builtin_example(std::string_view name) {
  if (name == "paper-example") {
    return parse_matrix(R"([["1","i","1","1"],
                            ["-i","1","-i","-i"],
                            ["-1","-i","1","-1"],
                            ["-1","-i","1","-1"]])");
  }
  if (name == "shear-2") return parse_matrix(R"([["0","1"],["0","0"]])");
  if (name == "zero-3") return ScalarMatrix::zero(3, 3);
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown example '" + std::string(name) + "'; available: " + known);
}

Json to_json(const RankBoundCertificate& cert) {
  return Json{{"trace_condition_holds", cert.trace_condition_holds},
              {"delta", cert.delta},
              {"rank", cert.rank},
              {"bound_times_two", cert.bound_times_two},
              {"theorem_satisfied", cert.theorem_satisfied}};
}

Json to_json(const PolyMap& map) { return Json(map.to_strings()); }

Json to_json(const InverseResult& result) {
  Json out;
  out["status"] = result.invertible() ? "Invertible" : "NotInvertible";
  out["inverse_degree"] = optional_json(result.inverse_degree);
  out["degree_bound_used"] = result.degree_bound_used;
  out["inverse"] = result.inverse ? to_json(*result.inverse) : Json(nullptr);
  return out;
}

Json to_json(const GZPair& pair) {
  Json out;
  out["rank"] = pair.rank;
  out["B"] = matrix_to_json(pair.b);
  out["C"] = matrix_to_json(pair.c);
  out["G"] = to_json(pair.g);
  return out;
}

Json to_json(const CorollaryReport& report) {
  Json out;
  out["n"] = report.n;
  out["diag_nonzero"] = report.diag_nonzero;
  out["keller"] = report.keller;
  out["trace_condition"] = optional_json(report.trace_condition);
  out["rank"] = optional_json(report.rank);
  out["rank_le_4"] = optional_json(report.rank_le_4);
  out["pair"] = report.pair ? to_json(*report.pair) : Json(nullptr);
  out["g_nilpotent"] = optional_json(report.g_nilpotent);
  out["g_inverse_degree"] = optional_json(report.g_inverse_degree);
  out["f_inverse_degree"] = optional_json(report.f_inverse_degree);
  out["f_inverse"] = report.f_inverse ? to_json(*report.f_inverse) : Json(nullptr);
  out["verified"] = report.verified;
  out["anomaly"] = optional_json(report.anomaly);
  return out;
}

}  // namespace cubelin
