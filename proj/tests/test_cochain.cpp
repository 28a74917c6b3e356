#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnil/cochain.hpp"
#include "test_support.hpp"

using namespace qnil;

namespace {

constexpr std::size_t kCap = 4096;

SimplicialComplexSpec point() {
    SimplicialComplexSpec k;
    k.vertices = {"p"};
    k.facets = {{0}};
    return k;
}

SimplicialComplexSpec two_points() {
    SimplicialComplexSpec k;
    k.vertices = {"a", "b"};
    k.facets = {{0}, {1}};
    return k;
}

SimplicialComplexSpec edge() {
    SimplicialComplexSpec k;
    k.vertices = {"a", "b"};
    k.facets = {{0, 1}};
    return k;
}

// M = C over C[x]/(x^2): x acts as zero on both sides
BimoduleSpec scalar_module_over_dual_numbers() {
    BimoduleSpec m;
    m.dim = 1;
    m.left = {mpq_class(1), mpq_class(0)};
    m.right = {mpq_class(1), mpq_class(0)};
    return m;
}

} // namespace

TEST_CASE("simplicial spec validation") {
    CHECK_NOTHROW(edge().validate());
    SimplicialComplexSpec bad = edge();
    bad.facets.push_back({});
    CHECK_THROWS_AS(bad.validate(), invalid_input);
    bad = edge();
    bad.facets = {{0, 7}};
    CHECK_THROWS_AS(bad.validate(), invalid_input);
}

TEST_CASE("one-point complex: the [n]_q ladder") {
    const auto* f3 = ScalarField::cyclotomic(3);
    const Scalar q = q_generator(f3);
    const auto s = simplicial_cofaces(point(), f3, 5, kCap);
    const NComplex c = d_q_from_cofaces(s, q, CofaceVariant::Lower, 3);
    for (int n = 0; n <= 5; ++n) CHECK(c.dim(n) == 1);
    for (int n = 0; n < 5; ++n) {
        REQUIRE(c.d_matrix(n).rows() == 1);
        CHECK(c.d_matrix(n)(0, 0) == q_integer(n, q));
    }
    CHECK(verify_nilpotency(c).ok);

    // full variant multiplies by [n+2]_q
    const NComplex ct = d_q_from_cofaces(s, q, CofaceVariant::Full, 3);
    for (int n = 0; n < 5; ++n) CHECK(ct.d_matrix(n)(0, 0) == q_integer(n + 2, q));
    CHECK(verify_nilpotency(ct).ok);
}

TEST_CASE("q = -1 gives the classical differential") {
    const Scalar minus_one = q_generator(ScalarField::rationals(), -1);
    for (const auto& k : {point(), two_points(), edge()}) {
        const auto s = simplicial_cofaces(k, minus_one.field(), 4, kCap);
        for (const auto variant : {CofaceVariant::Lower, CofaceVariant::Full}) {
            const NComplex c = d_q_from_cofaces(s, minus_one, variant, 2);
            CHECK(verify_nilpotency(c).ok);
        }
        // the two coface differentials coincide at q = -1
        const NComplex lo = d_q_from_cofaces(s, minus_one, CofaceVariant::Lower, 2);
        const NComplex fu = d_q_from_cofaces(s, minus_one, CofaceVariant::Full, 2);
        for (int n = 0; n < 4; ++n) CHECK(lo.d_matrix(n) == fu.d_matrix(n));
    }
}

TEST_CASE("cosimplicial identity is enforced") {
    const auto* f = ScalarField::rationals();
    auto s = simplicial_cofaces(two_points(), f, 3, kCap);
    s.cofaces[1][0] = s.cofaces[1][0].scaled(f->from_int(2)); // break the identity
    CHECK_THROWS_AS(s.validate(), invalid_input);
}

TEST_CASE("simplicial forms") {
    SUBCASE("point: homology of the [n]_q ladder at N = 3") {
        const auto* f3 = ScalarField::cyclotomic(3);
        const Scalar q = q_generator(f3);
        const QDGA forms = simplicial_forms(point(), q, 5, 3, kCap);
        CHECK(homology(forms.complex(), 1, 0).dim == 1);
        CHECK(homology(forms.complex(), 1, 3).dim == 0);
        CHECK(homology(forms.complex(), 1, 1).dim == 0);
        CHECK(forms.leibniz_check().ok);
        CHECK(forms.check_unit());
    }
    SUBCASE("two isolated points have two constant sequences per level") {
        const Scalar q = q_generator(ScalarField::rationals(), 2);
        const QDGA forms = simplicial_forms(two_points(), q, 4, 2, kCap);
        for (int n = 0; n <= 4; ++n) CHECK(forms.complex().dim(n) == 2);
        CHECK(forms.leibniz_check().ok);
    }
    SUBCASE("edge at q = -1: cone cohomology is trivial upstairs") {
        const Scalar minus_one = q_generator(ScalarField::rationals(), -1);
        const QDGA forms = simplicial_forms(edge(), minus_one, 5, 2, kCap);
        for (int n = 0; n <= 5; ++n) CHECK(forms.complex().dim(n) == 1 << (n + 1));
        CHECK(homology(forms.complex(), 1, 0).dim == 1);
        for (int n = 1; n + 1 <= 5; ++n) CHECK(homology(forms.complex(), 1, n).dim == 0);
    }
    SUBCASE("Leibniz on the edge, rational and cyclotomic") {
        const QDGA r = simplicial_forms(edge(), q_generator(ScalarField::rationals(), 2), 3,
                                        2, kCap);
        CHECK(r.leibniz_check().ok);
        CHECK(r.check_associativity());
        const auto* f3 = ScalarField::cyclotomic(3);
        const QDGA z = simplicial_forms(edge(), q_generator(f3), 4, 3, kCap);
        CHECK(z.leibniz_check().ok);
        CHECK(verify_nilpotency(z.complex()).ok);
    }
    SUBCASE("the displayed omission formula, assembled independently") {
        // two点 complex: basis per level is (a..a), (b..b); omitting any
        // vertex of the constant (n+1)-sequence gives the constant n-sequence,
        // so d_q(delta_sigma) = [n]_q delta over each point, diagonally.
        const auto* f3 = ScalarField::cyclotomic(3);
        const Scalar q = q_generator(f3);
        const QDGA forms = simplicial_forms(two_points(), q, 4, 3, kCap);
        for (int n = 0; n < 4; ++n) {
            ExactMatrix expect(f3, 2, 2);
            expect(0, 0) = q_integer(n, q);
            expect(1, 1) = q_integer(n, q);
            CHECK(forms.complex().d_matrix(n) == expect);
        }
    }
}

TEST_CASE("Hochschild complexes") {
    SUBCASE("A = C: the ladder again") {
        const auto* f3 = ScalarField::cyclotomic(3);
        const Scalar q = q_generator(f3);
        const AlgebraSpec a = AlgebraSpec::ground_field();
        const NComplex c =
            hochschild_complex(a, BimoduleSpec::regular(a), q, 5, 3, kCap);
        for (int n = 0; n <= 5; ++n) CHECK(c.dim(n) == 1);
        for (int n = 0; n < 5; ++n) CHECK(c.d_matrix(n)(0, 0) == q_integer(n, q));
        CHECK(homology(c, 1, 0).dim == 1);
        CHECK(homology(c, 2, 0).dim == 1);
        for (int k = 1; k <= 2; ++k)
            for (int n = 1; n + k <= 5; ++n) CHECK(homology(c, k, n).dim == 0);
    }
    SUBCASE("q = -1 is the classical coboundary") {
        const Scalar minus_one = q_generator(ScalarField::rationals(), -1);
        const AlgebraSpec a = AlgebraSpec::dual_numbers();
        const NComplex c =
            hochschild_complex(a, BimoduleSpec::regular(a), minus_one, 4, 2, kCap);
        CHECK(verify_nilpotency(c).ok);
    }
    SUBCASE("cup product Leibniz, rational and cyclotomic") {
        const AlgebraSpec a = AlgebraSpec::dual_numbers();
        const QDGA r = hochschild_qdga(a, q_generator(ScalarField::rationals(), 2), 3, 2, kCap);
        CHECK(r.leibniz_check().ok);
        CHECK(r.check_unit());
        const QDGA z = hochschild_qdga(a, q_generator(ScalarField::cyclotomic(3)), 4, 3, kCap);
        CHECK(z.leibniz_check().ok);
        CHECK(verify_nilpotency(z.complex()).ok);
    }
    SUBCASE("delta_q equals the generic coface assembly") {
        const auto* f3 = ScalarField::cyclotomic(3);
        const Scalar q = q_generator(f3);
        const AlgebraSpec a = AlgebraSpec::dual_numbers();
        for (const BimoduleSpec& m :
             {BimoduleSpec::regular(a), scalar_module_over_dual_numbers()}) {
            const NComplex direct = hochschild_complex(a, m, q, 4, 3, kCap);
            const NComplex generic =
                d_q_from_cofaces(hochschild_cofaces(a, m, f3, 4, kCap), q,
                                 CofaceVariant::Lower, 3);
            for (int n = 0; n < 4; ++n) CHECK(direct.d_matrix(n) == generic.d_matrix(n));
        }
    }
    SUBCASE("dimension cap") {
        const AlgebraSpec a = AlgebraSpec::dual_numbers();
        CHECK_THROWS_AS(
            hochschild_complex(a, BimoduleSpec::regular(a),
                               q_generator(ScalarField::cyclotomic(2)), 20, 2, kCap),
            cap_exceeded);
    }
}

TEST_CASE("dual of the product") {
    SUBCASE("homotopy identity for small algebras, rational and cyclotomic q") {
        for (const AlgebraSpec& a :
             {AlgebraSpec::ground_field(), AlgebraSpec::split_sum(2),
              AlgebraSpec::dual_numbers(), AlgebraSpec::split_sum(3)}) {
            const Scalar q2 = q_generator(ScalarField::rationals(), 2);
            const auto dp = dual_product_complex(a, q2, 5, 2, kCap);
            const auto rep = homotopy_vanishing_check(dp.complex, dp.h, q2, 1);
            CHECK(rep.identity_all());

            const auto* f3 = ScalarField::cyclotomic(3);
            const Scalar z = q_generator(f3);
            const auto dz = dual_product_complex(a, z, 5, 3, kCap);
            const auto rz = homotopy_vanishing_check(dz.complex, dz.h, z, 1);
            CHECK(rz.identity_all());
            CHECK(rz.sum_all());
            CHECK(rz.homology_checked);
            CHECK(rz.homology_vanishes()); // H^(k,n) = 0 for n >= 1
        }
    }
    SUBCASE("H^(k,0) is one-dimensional") {
        const auto* f3 = ScalarField::cyclotomic(3);
        const auto dp = dual_product_complex(AlgebraSpec::dual_numbers(), q_generator(f3), 4,
                                             3, kCap);
        CHECK(homology(dp.complex, 1, 0).dim == 1);
        CHECK(homology(dp.complex, 2, 0).dim == 1);
    }
    SUBCASE("(m*_q)^N = 0 at primitive roots") {
        for (int n : {2, 3}) {
            const auto* f = ScalarField::cyclotomic(n);
            const auto dp = dual_product_complex(AlgebraSpec::dual_numbers(), q_generator(f),
                                                 n + 2, n, kCap);
            CHECK(verify_nilpotency(dp.complex).ok);
        }
    }
    SUBCASE("the degree -2 shifted cofaces reproduce m*_q") {
        const auto* f3 = ScalarField::cyclotomic(3);
        const Scalar q = q_generator(f3);
        const AlgebraSpec a = AlgebraSpec::dual_numbers();
        const auto dp = dual_product_complex(a, q, 5, 3, kCap);
        const auto cofaces = dual_product_cofaces(a, f3, 5, kCap);
        const NComplex shifted = d_q_from_cofaces(cofaces, q, CofaceVariant::Full, 3);
        for (int n = 0; n + 3 <= 5; ++n)
            CHECK(shifted.d_matrix(n) == dp.complex.d_matrix(n + 2));
    }
}
