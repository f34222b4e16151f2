#include "tencode/io.hpp"

#include <fstream>
#include <sstream>

#include "tencode/fixtures.hpp"

namespace tencode {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw InputError("input.schema", what); }

const Json& member(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) schema_error(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

long long as_int(const Json& j, const char* what) {
    if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
    return j.get<long long>();
}

Dims dims_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) schema_error("dims must be a non-empty array");
    Dims d;
    for (const auto& e : j) {
        long long v = as_int(e, "dims entry");
        if (v < 1) schema_error("dims entries must be positive");
        d.push_back(static_cast<std::size_t>(v));
    }
    try {
        check_dims(d);
    } catch (const std::exception& e) {
        schema_error(e.what());
    }
    return d;
}

const Integer kSafe = Integer(1) << 53;

} // namespace

Json field_to_json(const Field& f) {
    return Json{{"p", f.p()}, {"m", f.m()}, {"modulus", f.modulus()}};
}

FieldPtr field_from_json(const Json& j) {
    if (j.is_number_integer()) {
        try {
            return Field::of_order(j.get<int>());
        } catch (const std::exception& e) {
            schema_error(e.what());
        }
    }
    int p = static_cast<int>(as_int(member(j, "p"), "p"));
    std::vector<int> modulus;
    if (j.contains("modulus")) {
        for (const auto& c : j.at("modulus")) modulus.push_back(static_cast<int>(as_int(c, "modulus entry")));
    }
    long long m = j.contains("m") ? as_int(j.at("m"), "m") : (modulus.empty() ? 1 : modulus.size() - 1);
    try {
        if (modulus.empty()) {
            long long q = 1;
            for (long long i = 0; i < m; ++i) q *= p;
            if (m < 1 || q > 256) schema_error("field order out of range");
            return Field::of_order(static_cast<int>(q));
        }
        if (static_cast<long long>(modulus.size()) != m + 1) schema_error("modulus length must be m + 1");
        return Field::create(p, modulus);
    } catch (const InputError&) {
        throw;
    } catch (const std::exception& e) {
        schema_error(e.what());
    }
}

Json elem_to_json(const Field& f, Elem e) {
    if (f.is_prime()) return int(e);
    return f.coeffs(e);
}

Elem elem_from_json(const Field& f, const Json& j) {
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (!f.is_prime()) {
            if (v < 0 || v >= f.p()) schema_error("extension-field entries must be coefficient lists");
            return static_cast<Elem>(v);
        }
        return f.from_int(v);
    }
    if (j.is_array() && !f.is_prime()) {
        if (j.size() > static_cast<std::size_t>(f.m())) schema_error("too many coefficients");
        std::vector<int> c(f.m(), 0);
        for (std::size_t i = 0; i < j.size(); ++i) {
            long long v = as_int(j[i], "coefficient");
            c[i] = static_cast<int>(((v % f.p()) + f.p()) % f.p());
        }
        return f.from_coeffs(c);
    }
    schema_error("bad field element");
}

Json vec_to_json(const Field& f, const Vec& v) {
    Json a = Json::array();
    for (Elem e : v) a.push_back(elem_to_json(f, e));
    return a;
}

Vec vec_from_json(const Field& f, const Json& j) {
    if (!j.is_array()) schema_error("vector must be an array");
    Vec v;
    for (const auto& e : j) v.push_back(elem_from_json(f, e));
    return v;
}

Json tensor_to_json(const Tensor& x) {
    return Json{{"dims", x.dims()}, {"entries", vec_to_json(*x.field(), x.entries())}};
}

Tensor tensor_from_json(const FieldPtr& f, const Dims& dims, const Json& j) {
    if (j.is_object() && j.contains("dims") && dims_from_json(j.at("dims")) != dims)
        schema_error("tensor dims do not match the code");
    if (j.is_object() && j.contains("display")) {
        if (!j.at("display").is_string()) schema_error("display must be a string");
        try {
            return parse_display(f, dims, j.at("display").get<std::string>());
        } catch (const std::invalid_argument& e) {
            schema_error(e.what());
        }
    }
    const Json& e = j.is_array() ? j : member(j, "entries");
    Vec v = vec_from_json(*f, e);
    if (v.size() != dims_size(dims)) schema_error("tensor has the wrong number of entries");
    return Tensor(f, dims, v);
}

Json subspace_to_json(const Subspace& s) {
    Json a = Json::array();
    for (const auto& r : s.basis()) a.push_back(vec_to_json(*s.field(), r));
    return a;
}

Subspace subspace_from_json(const FieldPtr& f, std::size_t n, const Json& j) {
    if (!j.is_array()) schema_error("subspace must be a list of rows");
    Matrix m;
    for (const auto& r : j) {
        m.push_back(vec_from_json(*f, r));
        if (m.back().size() != n) schema_error("subspace row has the wrong length");
    }
    return Subspace(f, n, m);
}

Json code_to_json(const TensorCode& c) {
    Json basis = Json::array();
    for (const auto& t : c.basis()) basis.push_back(Json{{"entries", vec_to_json(*c.field(), t.entries())}});
    return Json{{"schema", kSchema}, {"field", field_to_json(*c.field())}, {"dims", c.dims()}, {"basis", basis}};
}

TensorCode code_from_json(const Json& j) {
    if (!j.is_object()) schema_error("code must be a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema)
        throw InputError("input.schema", "unsupported schema " + j.at("schema").dump());
    auto f = field_from_json(member(j, "field"));
    Dims dims = dims_from_json(member(j, "dims"));
    const Json& basis = member(j, "basis");
    if (!basis.is_array()) schema_error("basis must be an array");
    std::vector<Tensor> gens;
    for (const auto& t : basis) gens.push_back(tensor_from_json(f, dims, t));
    return TensorCode(f, dims, gens);
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("input.io", "cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const Json::parse_error& e) {
        throw InputError("input.parse", e.what(), e.byte);
    }
}

TensorCode read_code_file(const std::string& path) { return code_from_json(read_json_file(path)); }

Json anticode_to_json(const Anticode& a) {
    Json j{{"variant", family_name(a.family)}, {"dim", a.dim()}, {"mode", nullptr}};
    Json subs = Json::array();
    switch (a.family) {
    case Family::ClosureType:
    case Family::DualClosureType:
        for (const auto& c : a.components) subs.push_back(subspace_to_json(c));
        j["subspaces"] = subs;
        break;
    case Family::Delsarte:
    case Family::Ravagnani:
        j["mode"] = a.mode;
        subs.push_back(subspace_to_json(a.components.at(0)));
        j["subspaces"] = subs;
        break;
    case Family::Perfect: {
        Json gens = Json::array();
        for (const auto& g : a.generators) gens.push_back(vec_to_json(*a.field, g));
        j["generators"] = gens;
        break;
    }
    }
    return j;
}

Json integer_to_json(const Integer& v) {
    if (abs(v) <= kSafe) return v.convert_to<long long>();
    return v.str();
}

Json rational_to_json(const Rational& v) {
    if (denominator(v) == 1) return integer_to_json(numerator(v));
    return numerator(v).str() + "/" + denominator(v).str();
}

Json table_to_json(const IntTable& t) {
    Json rows = Json::array();
    for (const auto& r : t) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(integer_to_json(v));
        rows.push_back(row);
    }
    return rows;
}

Json table_to_json(const RatTable& t) {
    Json rows = Json::array();
    for (const auto& r : t) {
        Json row = Json::array();
        for (const auto& v : r) row.push_back(rational_to_json(v));
        rows.push_back(row);
    }
    return rows;
}

Json error_json(const std::string& code, const std::string& message, const Json& extra) {
    Json e{{"code", code}, {"message", message}};
    for (auto it = extra.begin(); it != extra.end(); ++it) e[it.key()] = it.value();
    return Json{{"schema", kSchema}, {"error", e}};
}

} // namespace tencode
