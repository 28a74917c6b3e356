#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnil/json_io.hpp"
#include "test_support.hpp"

using namespace qnil;

TEST_CASE("scalar round trips") {
    test::Rng rng(3);
    for (const ScalarField* f : {ScalarField::rationals(), ScalarField::cyclotomic(4),
                                 ScalarField::cyclotomic(7)}) {
        for (int t = 0; t < 20; ++t) {
            const Scalar s = test::random_scalar(f, rng);
            CHECK(scalar_from_json(scalar_to_json(s), f) == s);
        }
    }
    // rationals accept plain integers and "p/q" strings
    const auto* f = ScalarField::rationals();
    CHECK(scalar_from_json(json(5), f) == f->from_int(5));
    CHECK(scalar_from_json(json("-3/2"), f) == f->from_rational(mpq_class(-3, 2)));
    CHECK_THROWS_AS(scalar_from_json(json("woof"), f), invalid_input);
    CHECK_THROWS_AS(scalar_from_json(json(1.5), f), invalid_input);
}

TEST_CASE("algebra specs round trip and validate") {
    for (const auto& a : {AlgebraSpec::ground_field(), AlgebraSpec::dual_numbers(),
                          AlgebraSpec::split_sum(3)}) {
        const AlgebraSpec b = algebra_from_json(algebra_to_json(a));
        CHECK(b.dim == a.dim);
        CHECK(b.sc == a.sc);
        CHECK(b.unit == a.unit);
    }
    json bad = algebra_to_json(AlgebraSpec::dual_numbers());
    bad["sc"][1][1][0] = "1"; // x*x = 1 + x is fine; break the unit instead
    bad["unit"][0] = "2";
    CHECK_THROWS_AS(algebra_from_json(bad), invalid_input);
}

TEST_CASE("bimodule specs parse against an algebra") {
    const AlgebraSpec a = AlgebraSpec::dual_numbers();
    // C as a module over the dual numbers: x acts as zero
    const json j{{"dim", 1},
                 {"left", json::array({json::array({json::array({1})}),
                                       json::array({json::array({0})})})},
                 {"right", json::array({json::array({json::array({1}), json::array({0})})})}};
    const BimoduleSpec m = bimodule_from_json(j, a);
    CHECK(m.dim == 1);
    json broken = j;
    broken["left"][0][0][0] = "2"; // unit no longer acts as the identity
    CHECK_THROWS_AS(bimodule_from_json(broken, a), invalid_input);
}

TEST_CASE("simplicial specs accept names or indices") {
    const json j{{"vertices", json::array({"a", "b"})},
                 {"facets", json::array({json::array({"a", "b"})})}};
    const SimplicialComplexSpec k = simplicial_from_json(j);
    REQUIRE(k.facets.size() == 1);
    CHECK(k.facets[0] == std::vector<int>{0, 1});

    json bad = j;
    bad["facets"].push_back(json::array());
    CHECK_THROWS_AS(simplicial_from_json(bad), invalid_input);
}

TEST_CASE("homology reports serialize with fixed keys") {
    HomologyReport r;
    r.k = 1;
    r.n = 2;
    r.dim = 3;
    r.kernel_dim = 5;
    r.image_dim = 2;
    CHECK(homology_to_json(r).dump() ==
          R"({"k":1,"n":2,"dim":3,"kernel_dim":5,"image_dim":2})");
}

TEST_CASE("string specs") {
    const json j{{"strings", json::array({json{{"start", -1}, {"length", 2}},
                                          json{{"length", 1}}})}};
    const auto specs = strings_from_json(j);
    REQUIRE(specs.size() == 2);
    CHECK(specs[0].start_degree == -1);
    CHECK(specs[0].length == 2);
    CHECK(specs[1].start_degree == 0);
}
