#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "tencode/anticode.hpp"
#include "tencode/moments.hpp"

namespace tencode {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tencode/1";

/// Bad input.  `code` is a stable identifier such as "input.parse" or "input.schema".
class InputError : public std::runtime_error {
public:
    InputError(std::string code, const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), code_(std::move(code)), position_(position) {}
    const std::string& code() const { return code_; }
    std::optional<std::size_t> position() const { return position_; }

private:
    std::string code_;
    std::optional<std::size_t> position_;
};

/// {"p": p, "m": m, "modulus": [c_0, ..., c_m]}
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

/// Prime-field elements are integers; extension elements are coefficient lists.
Json elem_to_json(const Field& f, Elem e);
Elem elem_from_json(const Field& f, const Json& j);

Json vec_to_json(const Field& f, const Vec& v);
Vec vec_from_json(const Field& f, const Json& j);

/// {"dims": [...], "entries": [...]} with the last index fastest.
Json tensor_to_json(const Tensor& x);
/// Accepts the object form or {"display": "..."} for order 2 and 3 over prime fields.
Tensor tensor_from_json(const FieldPtr& f, const Dims& dims, const Json& j);

/// List of basis rows.
Json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(const FieldPtr& f, std::size_t n, const Json& j);

/// {"schema", "field", "dims", "basis"}
Json code_to_json(const TensorCode& c);
TensorCode code_from_json(const Json& j);
Json read_json_file(const std::string& path);
TensorCode read_code_file(const std::string& path);

Json anticode_to_json(const Anticode& a);

/// Numbers up to 2^53 in magnitude, strings beyond.
Json integer_to_json(const Integer& v);
/// Integers as above, proper fractions as "a/b".
Json rational_to_json(const Rational& v);
Json table_to_json(const IntTable& t);
Json table_to_json(const RatTable& t);

/// {"schema", "error": {"code", "message", ...extra}}
Json error_json(const std::string& code, const std::string& message, const Json& extra = Json::object());

} // namespace tencode
