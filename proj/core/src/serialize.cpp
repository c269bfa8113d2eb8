#include "lg36/serialize.hpp"

namespace lg36 {

json field_header(const PrimeField& F) { return {{"field", "Fp"}, {"p", F.characteristic()}}; }

json field_header(const RationalField&) { return {{"field", "Q"}}; }

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema") || j.at("schema") != kSchemaVersion)
    throw Error(ErrorCode::kSchemaMismatch, "expected \"schema\": " + std::to_string(kSchemaVersion));
}

void check_field(const json& j, const PrimeField& F) {
  if (!j.contains("field") || j.at("field") != "Fp" || !j.contains("p") || j.at("p") != F.characteristic())
    throw Error(ErrorCode::kFieldMismatch, "document is not over " + F.name());
}

void check_field(const json& j, const RationalField&) {
  if (!j.contains("field") || j.at("field") != "Q") throw Error(ErrorCode::kFieldMismatch, "document is not over Q");
}

}  // namespace lg36
