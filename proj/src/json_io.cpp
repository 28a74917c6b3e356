#include "qnil/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace qnil {

json rational_to_json(const mpq_class& v) { return v.get_str(); }

mpq_class rational_from_json(const json& j) {
    try {
        if (j.is_number_integer()) return mpq_class(j.get<long>());
        if (j.is_string()) {
            mpq_class v(j.get<std::string>());
            v.canonicalize();
            return v;
        }
    } catch (const std::invalid_argument&) {
        // fall through to the shared error
    }
    throw invalid_input("expected a rational as integer or \"p/q\" string, got " + j.dump());
}

json scalar_to_json(const Scalar& s) {
    if (s.field()->mode() == FieldMode::Rational)
        return rational_to_json(s.coeffs()[0]);
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back(rational_to_json(c));
    return json{{"N", s.field()->order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j, const ScalarField* field) {
    if (j.is_object()) {
        if (!j.contains("N") || !j.contains("coeffs"))
            throw invalid_input("cyclotomic scalar needs \"N\" and \"coeffs\"");
        if (field->mode() != FieldMode::Cyclotomic || j["N"].get<int>() != field->order())
            throw invalid_input("cyclotomic scalar has the wrong field order");
        std::vector<mpq_class> c;
        for (const auto& x : j["coeffs"]) c.push_back(rational_from_json(x));
        if (static_cast<int>(c.size()) != field->degree())
            throw invalid_input("cyclotomic scalar needs deg Phi_N coefficients");
        return Scalar::reduce(field, std::move(c));
    }
    return field->from_rational(rational_from_json(j));
}

json homology_to_json(const HomologyReport& r) {
    return json{{"k", r.k}, {"n", r.n}, {"dim", r.dim},
                {"kernel_dim", r.kernel_dim}, {"image_dim", r.image_dim}};
}

json algebra_to_json(const AlgebraSpec& a) {
    json sc = json::array();
    for (int i = 0; i < a.dim; ++i) {
        json plane = json::array();
        for (int j = 0; j < a.dim; ++j) {
            json row = json::array();
            for (int k = 0; k < a.dim; ++k) row.push_back(rational_to_json(a.c(i, j, k)));
            plane.push_back(row);
        }
        sc.push_back(plane);
    }
    json unit = json::array();
    for (const auto& u : a.unit) unit.push_back(rational_to_json(u));
    return json{{"dim", a.dim}, {"unit", unit}, {"sc", sc}};
}

namespace {

std::vector<mpq_class> tensor_from_json(const json& j, int d0, int d1, int d2,
                                        const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != d0)
        throw invalid_input(std::string(what) + ": expected a " + std::to_string(d0) + "x" +
                            std::to_string(d1) + "x" + std::to_string(d2) + " tensor");
    std::vector<mpq_class> out;
    out.reserve(static_cast<std::size_t>(d0) * d1 * d2);
    for (const auto& plane : j) {
        if (!plane.is_array() || static_cast<int>(plane.size()) != d1)
            throw invalid_input(std::string(what) + ": tensor plane has wrong size");
        for (const auto& row : plane) {
            if (!row.is_array() || static_cast<int>(row.size()) != d2)
                throw invalid_input(std::string(what) + ": tensor row has wrong size");
            for (const auto& x : row) out.push_back(rational_from_json(x));
        }
    }
    return out;
}

} // namespace

AlgebraSpec algebra_from_json(const json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("unit") || !j.contains("sc"))
        throw invalid_input("algebra spec needs \"dim\", \"unit\" and \"sc\"");
    AlgebraSpec a;
    a.dim = j["dim"].get<int>();
    if (a.dim <= 0) throw invalid_input("algebra spec: dim must be positive");
    if (!j["unit"].is_array() || static_cast<int>(j["unit"].size()) != a.dim)
        throw invalid_input("algebra spec: unit must list dim coordinates");
    for (const auto& u : j["unit"]) a.unit.push_back(rational_from_json(u));
    a.sc = tensor_from_json(j["sc"], a.dim, a.dim, a.dim, "algebra spec");
    a.validate();
    return a;
}

BimoduleSpec bimodule_from_json(const json& j, const AlgebraSpec& a) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("left") || !j.contains("right"))
        throw invalid_input("bimodule spec needs \"dim\", \"left\" and \"right\"");
    BimoduleSpec m;
    m.dim = j["dim"].get<int>();
    if (m.dim <= 0) throw invalid_input("bimodule spec: dim must be positive");
    m.left = tensor_from_json(j["left"], a.dim, m.dim, m.dim, "bimodule left action");
    m.right = tensor_from_json(j["right"], m.dim, a.dim, m.dim, "bimodule right action");
    m.validate(a);
    return m;
}

json simplicial_to_json(const SimplicialComplexSpec& k) {
    json facets = json::array();
    for (const auto& f : k.facets) facets.push_back(f);
    return json{{"vertices", k.vertices}, {"facets", facets}};
}

SimplicialComplexSpec simplicial_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("facets"))
        throw invalid_input("simplicial spec needs \"vertices\" and \"facets\"");
    SimplicialComplexSpec k;
    for (const auto& v : j["vertices"]) {
        if (v.is_string())
            k.vertices.push_back(v.get<std::string>());
        else
            k.vertices.push_back(v.dump());
    }
    for (const auto& f : j["facets"]) {
        std::vector<int> facet;
        if (!f.is_array()) throw invalid_input("simplicial spec: facets must be arrays");
        for (const auto& v : f) {
            if (v.is_number_integer()) {
                facet.push_back(v.get<int>());
            } else if (v.is_string()) {
                // vertex by name
                const auto name = v.get<std::string>();
                const auto it =
                    std::find(k.vertices.begin(), k.vertices.end(), name);
                if (it == k.vertices.end())
                    throw invalid_input("simplicial spec: unknown vertex \"" + name + "\"");
                facet.push_back(static_cast<int>(it - k.vertices.begin()));
            } else {
                throw invalid_input("simplicial spec: facet entries are indices or names");
            }
        }
        k.facets.push_back(std::move(facet));
    }
    k.validate();
    return k;
}

MatrixExampleSpec matrix_example_from_json(const json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("blocks") || !j.contains("e"))
        throw invalid_input("matrix spec needs \"N\", \"blocks\" and \"e\"");
    MatrixExampleSpec m;
    m.n = j["N"].get<int>();
    for (const auto& b : j["blocks"]) m.blocks.push_back(b.get<int>());
    if (static_cast<int>(m.blocks.size()) != m.n)
        throw invalid_input("matrix spec: need N block sizes");
    int s = 0;
    for (int b : m.blocks) s += b;
    if (!j["e"].is_array() || static_cast<int>(j["e"].size()) != s)
        throw invalid_input("matrix spec: e must be S x S");
    for (const auto& row : j["e"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != s)
            throw invalid_input("matrix spec: e must be S x S");
        std::vector<mpq_class> r;
        for (const auto& x : row) r.push_back(rational_from_json(x));
        m.e.push_back(std::move(r));
    }
    return m;
}

std::vector<StringSpec> strings_from_json(const json& j) {
    if (!j.is_object() || !j.contains("strings"))
        throw invalid_input("string spec needs a \"strings\" array");
    std::vector<StringSpec> out;
    for (const auto& s : j["strings"]) {
        StringSpec spec;
        if (!s.contains("length")) throw invalid_input("string spec: entry needs \"length\"");
        spec.length = s["length"].get<int>();
        spec.start_degree = s.value("start", 0);
        out.push_back(spec);
    }
    return out;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open input file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // convert the byte offset into a line number
        std::size_t line = 1;
        for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
            if (text[i] == '\n') ++line;
        throw invalid_input(path + ":" + std::to_string(line) + ": " + e.what());
    }
}

} // namespace qnil
