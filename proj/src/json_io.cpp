#include "finfree/json_io.hpp"

#include <fstream>
#include <sstream>

#include "finfree/error.hpp"

namespace finfree::json {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::malformed_json, what); }

const Json& field(const Json& j, const char* key) {
    if (!j.is_object()) malformed(std::string("expected an object with field '") + key + "'");
    auto it = j.find(key);
    if (it == j.end()) malformed(std::string("missing field '") + key + "'");
    return *it;
}

std::size_t size_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        malformed(std::string("field '") + key + "' must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

std::vector<Scalar> scalar_list(const Json& j) {
    if (!j.is_array()) malformed("expected an array of scalars");
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(scalar_from_json(e));
    return out;
}

Json scalar_array(const std::vector<Scalar>& values) {
    Json arr = Json::array();
    for (const auto& v : values) arr.push_back(to_json(v));
    return arr;
}

Json index_array(const std::vector<std::size_t>& indices) {
    Json arr = Json::array();
    for (auto i : indices) arr.push_back(i);
    return arr;
}

}  // namespace

Json to_json(const Scalar& s) { return s.to_string(); }

Scalar scalar_from_json(const Json& j) {
    if (j.is_string()) return Scalar::parse(j.get<std::string>());
    if (j.is_number_integer()) return Scalar(j.get<long>());
    malformed("scalars must be strings such as \"-2/3\" or \"1+1/2*i\"");
}

Json to_json(const Polynomial& p) {
    Json j;
    j["degree"] = p.degree();
    j["coeffs"] = scalar_array(p.coeffs());
    return j;
}

Polynomial polynomial_from_json(const Json& j) {
    const std::size_t degree = size_field(j, "degree");
    std::vector<Scalar> coeffs = scalar_list(field(j, "coeffs"));
    if (coeffs.size() != degree + 1) malformed("polynomial needs degree + 1 coefficients");
    return Polynomial(std::move(coeffs));
}

Json to_json(const Matrix& m) {
    Json j;
    j["n"] = m.size();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(i, c)));
        rows.push_back(std::move(row));
    }
    j["entries"] = std::move(rows);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    const std::size_t n = size_field(j, "n");
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != n) malformed("matrix needs n rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& row : entries) {
        std::vector<Scalar> values = scalar_list(row);
        if (values.size() != n) malformed("matrix rows must have n entries");
        rows.push_back(std::move(values));
    }
    return Matrix(rows);
}

Json to_json(const FfpReport& r) {
    Json j;
    j["kind"] = std::string(to_string(r.kind));
    j["verdict"] = r.verdict;
    Json residuals = Json::object();
    for (const auto& [k, v] : r.residuals) residuals[std::to_string(k)] = to_json(v);
    j["residuals"] = std::move(residuals);
    j["lhs"] = to_json(r.lhs);
    j["rhs"] = to_json(r.rhs);
    return j;
}

FfpReport ffp_report_from_json(const Json& j) {
    FfpReport r;
    const Json& kind = field(j, "kind");
    if (!kind.is_string()) malformed("kind must be a string");
    r.kind = parse_kind(kind.get<std::string>());
    const Json& verdict = field(j, "verdict");
    if (!verdict.is_boolean()) malformed("verdict must be a boolean");
    r.verdict = verdict.get<bool>();
    const Json& residuals = field(j, "residuals");
    if (!residuals.is_object()) malformed("residuals must be an object");
    for (const auto& [key, value] : residuals.items()) {
        std::size_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoul(key, &used);
            if (used != key.size()) malformed("residual keys must be integers");
        } catch (const std::logic_error&) {
            malformed("residual keys must be integers");
        }
        r.residuals.emplace(k, scalar_from_json(value));
    }
    r.lhs = polynomial_from_json(field(j, "lhs"));
    r.rhs = polynomial_from_json(field(j, "rhs"));
    return r;
}

Json to_json(const MinorTable& table) {
    Json orders = Json::array();
    for (std::size_t k = 0; k < table.size(); ++k) {
        Json entries = Json::array();
        for (const auto& minor : table[k]) {
            Json e;
            e["indices"] = index_array(minor.indices);
            e["value"] = to_json(minor.value);
            entries.push_back(std::move(e));
        }
        Json order;
        order["order"] = k;
        order["minors"] = std::move(entries);
        orders.push_back(std::move(order));
    }
    return orders;
}

Json to_json(const CycleSums& sums) {
    Json j;
    j["balanced"] = sums.balanced;
    Json orders = Json::array();
    for (std::size_t k = 1; k < sums.by_order.size(); ++k) {
        Json entries = Json::array();
        for (const auto& c : sums.by_order[k]) {
            Json e;
            e["indices"] = index_array(c.indices);
            e["value"] = to_json(c.value);
            entries.push_back(std::move(e));
        }
        Json order;
        order["order"] = k;
        order["sums"] = std::move(entries);
        orders.push_back(std::move(order));
    }
    j["orders"] = std::move(orders);
    return j;
}

Json to_json(const MomentVector& m) {
    Json j;
    j["n"] = m.n;
    j["moments"] = scalar_array(m.values);
    return j;
}

MomentVector moments_from_json(const Json& j) {
    return MomentVector{size_field(j, "n"), scalar_list(field(j, "moments"))};
}

Json to_json(const CumulantVector& k) {
    Json j;
    j["n"] = k.n;
    j["cumulants"] = scalar_array(k.values);
    return j;
}

CumulantVector cumulants_from_json(const Json& j) {
    return CumulantVector{size_field(j, "n"), scalar_list(field(j, "cumulants"))};
}

Json to_json(const EklWitness& w) {
    Json j;
    j["k"] = w.k;
    j["l"] = w.l;
    j["probe"] = to_json(w.probe);
    j["report"] = to_json(w.report);
    return j;
}

Json to_json(const PairCheckReport& r) {
    Json j;
    j["families"] = Json::array({std::string(to_string(r.first)), std::string(to_string(r.second))});
    j["kind"] = std::string(to_string(r.kind));
    j["n"] = r.n;
    j["trials"] = r.trials;
    j["seed"] = r.seed;
    j["ok"] = r.ok();
    Json failures = Json::array();
    for (const auto& f : r.failures) {
        Json e;
        e["a"] = to_json(f.a);
        e["b"] = to_json(f.b);
        e["report"] = to_json(f.report);
        failures.push_back(std::move(e));
    }
    j["failures"] = std::move(failures);
    Json boundary = Json::array();
    for (const auto& c : r.boundary_checks) {
        Json e;
        e["description"] = c.description;
        e["witnessed"] = c.witnessed;
        e["outside"] = to_json(c.outside);
        e["probe"] = to_json(c.probe);
        e["report"] = to_json(c.report);
        boundary.push_back(std::move(e));
    }
    j["boundary_checks"] = std::move(boundary);
    return j;
}

Json to_json(const McResult& r) {
    Json j;
    j["samples"] = r.samples;
    Json coeffs = Json::array();
    for (const auto& c : r.coeffs) coeffs.push_back(Json::array({c.real(), c.imag()}));
    j["coeffs"] = std::move(coeffs);
    j["exact"] = to_json(r.exact);
    j["max_deviation"] = r.max_deviation;
    j["within_tolerance"] = r.within_tolerance;
    return j;
}

Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(e.what());
    }
}

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
}

}  // namespace finfree::json
