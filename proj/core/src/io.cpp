#include "jetgroups/io.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "jetgroups/errors.hpp"

namespace jetgroups {

using Json = nlohmann::ordered_json;

namespace {

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

Rational rational_from(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw InputError("json: expected a rational as \"p/q\" string");
}

Json rational_to(const Rational& r) { return Json(r.str()); }

std::vector<Rational> coeffs_from(const Json& j, int dim) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim)
        throw InputError("json: expected an array of dim coefficients");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(rational_from(v));
    return out;
}

Json coeffs_to(const std::vector<Rational>& coeffs) {
    Json j = Json::array();
    for (const auto& c : coeffs) j.push_back(rational_to(c));
    return j;
}

RationalMatrix matrix_from(const Json& j) {
    if (!j.is_array() || j.empty()) throw InputError("json: expected a nested-list matrix");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j[0].size());
    RationalMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[static_cast<std::size_t>(i)].is_array() ||
            static_cast<int>(j[static_cast<std::size_t>(i)].size()) != cols)
            throw InputError("json: ragged matrix rows");
        for (int c = 0; c < cols; ++c)
            m.at(i, c) = rational_from(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]);
    }
    return m;
}

Json matrix_to(const RationalMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rational_to(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

GroupPoint group_from(const Json& j, const AlgebraPtr& algebra) {
    if (j.is_string()) {
        if (j.get<std::string>() == "identity") return GroupPoint::identity();
        throw InputError("json: group part must be \"identity\", a matrix, or an automorphism");
    }
    if (j.is_object()) {
        if (!j.contains("automorphism"))
            throw InputError("json: group object needs an \"automorphism\" key");
        return GroupPoint::automorphism(algebra, matrix_from(j.at("automorphism")));
    }
    return GroupPoint::matrix(algebra, matrix_from(j));
}

Json group_to(const GroupPoint& g) {
    if (g.is_identity()) return Json("identity");
    if (g.is_automorphism()) return Json{{"automorphism", matrix_to(g.matrix_value())}};
    return matrix_to(g.matrix_value());
}

Side side_from(const Json& j) {
    const std::string s = j.get<std::string>();
    if (s == "right") return Side::right;
    if (s == "left") return Side::left;
    throw InputError("json: side must be \"right\" or \"left\"");
}

std::string side_to(Side s) { return s == Side::right ? "right" : "left"; }

} // namespace

AlgebraPtr parse_algebra_json(const std::string& text) {
    const Json j = parse_text(text);
    try {
        const std::string name = j.value("name", "anonymous");
        const std::string kind = j.at("kind").get<std::string>();
        const bool leibniz = j.value("leibniz", false);
        if (kind == "structure_constants") {
            const int dim = j.at("dim").get<int>();
            if (dim < 1) throw InputError("json: algebra dim must be positive");
            std::vector<std::vector<Rational>> table(
                static_cast<std::size_t>(dim) * dim,
                std::vector<Rational>(static_cast<std::size_t>(dim)));
            for (const auto& row : j.value("brackets", Json::array())) {
                if (!row.is_array() || row.size() != 3)
                    throw InputError("json: bracket rows are [i, j, coeffs]");
                const int i = row[0].get<int>();
                const int jj = row[1].get<int>();
                if (i < 0 || i >= dim || jj < 0 || jj >= dim)
                    throw InputError("json: bracket indices out of range");
                table[static_cast<std::size_t>(i) * dim + jj] = coeffs_from(row[2], dim);
            }
            return AlgebraSpec::structure_constants(name, dim, std::move(table), leibniz);
        }
        if (kind == "matrix") {
            std::vector<RationalMatrix> basis;
            for (const auto& b : j.at("basis")) basis.push_back(matrix_from(b));
            if (j.contains("dim") && j.at("dim").get<int>() != static_cast<int>(basis.size()))
                throw InputError("json: dim does not match the basis size");
            return AlgebraSpec::from_matrices(name, std::move(basis), leibniz);
        }
        throw InputError("json: kind must be structure_constants or matrix");
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

std::string algebra_to_json(const AlgebraSpec& a) {
    Json j;
    j["name"] = a.name();
    j["kind"] = a.kind() == AlgebraKind::matrix ? "matrix" : "structure_constants";
    j["dim"] = a.dim();
    j["leibniz"] = a.leibniz();
    if (a.kind() == AlgebraKind::matrix) {
        Json basis = Json::array();
        for (const auto& b : a.basis()) basis.push_back(matrix_to(b));
        j["basis"] = std::move(basis);
    } else {
        Json rows = Json::array();
        for (int i = 0; i < a.dim(); ++i)
            for (int jj = 0; jj < a.dim(); ++jj) {
                const auto& row = a.structure_row(i, jj);
                bool nonzero = false;
                for (const auto& c : row) nonzero = nonzero || !c.is_zero();
                if (nonzero) rows.push_back(Json{i, jj, coeffs_to(row)});
            }
        j["brackets"] = std::move(rows);
    }
    return j.dump(2);
}

AlgebraPtr load_algebra(const std::string& path_or_name) {
    if (std::filesystem::exists(path_or_name)) return parse_algebra_json(read_file(path_or_name));
    return AlgebraSpec::builtin(path_or_name);
}

AlgebraElement parse_element_json(const std::string& text, const AlgebraPtr& algebra) {
    const Json j = parse_text(text);
    try {
        return AlgebraElement(algebra, coeffs_from(j.at("coeffs"), algebra->dim()));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

std::string element_to_json(const AlgebraElement& e) {
    Json j;
    j["coeffs"] = coeffs_to(e.coeffs());
    return j.dump(2);
}

JetElement parse_jet_json(const std::string& text, const AlgebraPtr& algebra) {
    const Json j = parse_text(text);
    try {
        const int k = j.at("k").get<int>();
        const Side side = side_from(j.at("side"));
        const GroupPoint g = group_from(j.at("g"), algebra);
        const auto& comps = j.at("x");
        if (!comps.is_array() || static_cast<int>(comps.size()) != k)
            throw InputError("json: jet needs k component arrays");
        std::vector<AlgebraElement> x;
        x.reserve(comps.size());
        for (const auto& c : comps) x.emplace_back(algebra, coeffs_from(c, algebra->dim()));
        return JetElement(algebra, k, side, g, std::move(x));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

std::string jet_to_json(const JetElement& j) {
    Json out;
    out["k"] = j.k();
    out["side"] = side_to(j.side());
    out["g"] = group_to(j.group());
    Json comps = Json::array();
    for (const auto& c : j.components()) comps.push_back(coeffs_to(c.coeffs()));
    out["x"] = std::move(comps);
    return out.dump(2);
}

TangentElement parse_tangent_json(const std::string& text, const AlgebraPtr& algebra) {
    const Json j = parse_text(text);
    try {
        const int k = j.at("k").get<int>();
        if (k < 1 || k > 8) throw InputError("json: tangent order must be in 1..8");
        const Side side = side_from(j.at("side"));
        const GroupPoint g = group_from(j.at("g"), algebra);
        const auto& comps = j.at("components");
        if (!comps.is_object()) throw InputError("json: tangent components must be an object");
        std::vector<AlgebraElement> x(static_cast<std::size_t>((1u << k) - 1),
                                      AlgebraElement::zero(algebra));
        std::vector<bool> seen(x.size(), false);
        for (const auto& [key, value] : comps.items()) {
            const MultiIndex m = parse_multi_index(key, k);
            x[static_cast<std::size_t>(m) - 1] = AlgebraElement(algebra, coeffs_from(value, algebra->dim()));
            seen[static_cast<std::size_t>(m) - 1] = true;
        }
        for (bool s : seen)
            if (!s) throw InputError("json: tangent element must list all 2^k - 1 components");
        return TangentElement(algebra, k, side, g, std::move(x));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

std::string tangent_to_json(const TangentElement& a) {
    Json out;
    out["k"] = a.k();
    out["side"] = side_to(a.side());
    out["g"] = group_to(a.group());
    Json comps = Json::object();
    // ascending-digit keys, grouped by cardinality then mask order
    for (int n = 1; n <= a.k(); ++n)
        for (MultiIndex m = 1; m <= a.full_mask(); ++m)
            if (std::popcount(m) == n) comps[multi_index_str(m)] = coeffs_to(a.component(m).coeffs());
    out["components"] = std::move(comps);
    return out.dump(2);
}

JetAlgebraElement parse_jet_algebra_json(const std::string& text, const AlgebraPtr& algebra) {
    const Json j = parse_text(text);
    try {
        const auto& comps = j.at("x");
        if (!comps.is_array() || comps.empty())
            throw InputError("json: jet algebra element needs component arrays");
        if (j.contains("k") && j.at("k").get<int>() != static_cast<int>(comps.size()))
            throw InputError("json: k does not match the component count");
        AlgebraElement xi(algebra, coeffs_from(j.at("xi"), algebra->dim()));
        std::vector<AlgebraElement> x;
        x.reserve(comps.size());
        for (const auto& c : comps) x.emplace_back(algebra, coeffs_from(c, algebra->dim()));
        return JetAlgebraElement(algebra, std::move(xi), std::move(x));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("json: ") + e.what());
    }
}

std::string jet_algebra_to_json(const JetAlgebraElement& e) {
    Json out;
    out["k"] = e.k();
    out["xi"] = coeffs_to(e.xi().coeffs());
    Json comps = Json::array();
    for (const auto& c : e.components()) comps.push_back(coeffs_to(c.coeffs()));
    out["x"] = std::move(comps);
    return out.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace jetgroups
