#ifndef DEGEN_JSON_IO_HPP
#define DEGEN_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "degen/checkers.hpp"
#include "degen/polynomial.hpp"

namespace degen::json {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors onto ErrorCode::Parse.
Json parse(const std::string& text);

Json to_json(const Partition& p);
Json to_json(const FieldSpec& f);
Json to_json(const Matrix& m);
Json to_json(const Polynomial& f);
Json to_json(const JordanData& delta);
Json to_json(const VarietyDescriptor& v);
Json to_json(const SandwichReport& r);
Json to_json(const WitnessFamily& f);
Json to_json(const WitnessReport& r);
Json to_json(const FixedCountSample& s);
Json to_json(const InterpolationResult& r);
Json to_json(const CheckReport& r);
Json to_json(const SumScanSummary& s);
Json to_json(const SandwichVerification& v);

// Parsers throw Error(Parse) on malformed documents and Error(InvalidArgument)
// on well-formed documents that violate a type invariant.

/// [3,1]
Partition partition_from_json(const Json& j);
/// {"kind":"rational"} or {"kind":"prime","p":7}; also accepts "Q", "rational", "F_7", "7".
FieldSpec field_from_json(const Json& j);
FieldSpec field_from_string(const std::string& text);
/// {"field": ..., "entries": [["1/2","0"],["3","-1"]]}; numeric entries accepted.
Matrix matrix_from_json(const Json& j);
/// {"n":4,"blocks":[[2],[1,1]]}, {"n":4,"concrete":[{"eig":"1","partition":[2]},...]},
/// or a bare [[2],[1,1]].
JordanData jordan_data_from_json(const Json& j);
/// {"kind":"X","blocks":[[2],[1,1]]}, {"kind":"U","partition":[3,1]}, {"kind":"S","partition":[2,1,1]}.
VarietyDescriptor descriptor_from_json(const Json& j);

}  // namespace degen::json

#endif
