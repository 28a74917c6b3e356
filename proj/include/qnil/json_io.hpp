#pragma once

#include <string>

#include <json.hpp>

#include "qnil/cochain.hpp"
#include "qnil/ncomplex.hpp"
#include "qnil/qdga.hpp"

namespace qnil {

using json = nlohmann::ordered_json;

// Rationals encode as strings "p/q" (or "p"); cyclotomic scalars as
// {"N": int, "coeffs": ["p/q", ...]}.
json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const ScalarField* field);

mpq_class rational_from_json(const json& j);
json rational_to_json(const mpq_class& v);

json homology_to_json(const HomologyReport& r);

// {"dim": int, "unit": [..], "sc": [[[..]]]}
json algebra_to_json(const AlgebraSpec& a);
AlgebraSpec algebra_from_json(const json& j);

// {"dim": int, "left": [[[..]]], "right": [[[..]]]}
BimoduleSpec bimodule_from_json(const json& j, const AlgebraSpec& a);

// {"vertices": [...], "facets": [[...]]}
json simplicial_to_json(const SimplicialComplexSpec& k);
SimplicialComplexSpec simplicial_from_json(const json& j);

// {"N": int, "blocks": [..], "e": [[..]]}; entries of e parsed into `field`
struct MatrixExampleSpec {
    int n = 0;
    std::vector<int> blocks;
    std::vector<std::vector<mpq_class>> e;
};
MatrixExampleSpec matrix_example_from_json(const json& j);

// {"strings": [{"start": int, "length": int}, ...]}
std::vector<StringSpec> strings_from_json(const json& j);

/// Parse a JSON file; throws invalid_input with a line-anchored message on
/// syntax errors and propagates schema errors.
json load_json_file(const std::string& path);

} // namespace qnil
