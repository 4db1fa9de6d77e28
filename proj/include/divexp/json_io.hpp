#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "divexp/divisor.hpp"
#include "divexp/multipoly.hpp"
#include "divexp/terao.hpp"

namespace divexp {

using Json = nlohmann::ordered_json;

// Checks an instance against a JSON Schema subset: type, enum, const,
// properties, required, additionalProperties, items, minItems, maxItems,
// minimum, maximum, pattern, anyOf, oneOf and local $ref pointers.
class SchemaValidator {
 public:
  explicit SchemaValidator(Json root) : root_(std::move(root)) {}
  // Violations of the subschema at `pointer` (e.g. "/requests/sigma"),
  // empty when the instance conforms.
  std::vector<std::string> validate(const Json& instance, const std::string& pointer) const;

 private:
  void check(const Json& schema, const Json& instance, const std::string& where,
             std::vector<std::string>& errors) const;
  Json root_;
};

// The shipped schema, compiled into the binary.
const Json& cli_schema();
const SchemaValidator& cli_validator();

// A JSON number when the value fits in 64 bits, else a decimal string.
Json integer_json(const Integer& z);
Json derivation_json(const Derivation& d);
Json normalization_json(const PointDivisor& d);
Json lattice_point_json(const LatticePoint& p);

// Payload readers; the payload is assumed to have passed the schema.
MultiplicityVector mult_from_json(const Json& mult);
PointDivisor divisor_from_json(const Json& payload);
LineArrangement arrangement_from_json(const Json& payload);

}  // namespace divexp
