#ifndef CUBELIN_IO_HPP
#define CUBELIN_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cubelin/druzkowski.hpp"
#include "cubelin/inversion.hpp"
#include "cubelin/matrix.hpp"
#include "cubelin/pairing.hpp"

namespace cubelin {

using Json = nlohmann::ordered_json;

/// Malformed matrix text; the message names the offending row/column or byte.
class MatrixParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses a JSON array of equal-length arrays of complex literals.
ScalarMatrix parse_matrix(std::string_view text);
ScalarMatrix matrix_from_json(const Json& j);
Json matrix_to_json(const ScalarMatrix& m);

/// Names accepted by builtin_example().
const std::vector<std::string>& builtin_names();
/// Throws std::invalid_argument listing the available names.
ScalarMatrix builtin_example(std::string_view name);

Json to_json(const RankBoundCertificate& cert);
Json to_json(const InverseResult& result);
Json to_json(const GZPair& pair);
Json to_json(const CorollaryReport& report);
Json to_json(const PolyMap& map);

}  // namespace cubelin

#endif  // CUBELIN_IO_HPP
