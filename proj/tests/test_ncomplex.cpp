#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnil/ncomplex.hpp"
#include "test_support.hpp"

using namespace qnil;

namespace {

std::vector<StringSpec> random_specs(test::Rng& rng, int n, int max_count) {
    std::vector<StringSpec> specs;
    const int count = static_cast<int>(rng.below(1, max_count));
    for (int i = 0; i < count; ++i)
        specs.push_back({static_cast<int>(rng.below(-2, 2)), static_cast<int>(rng.below(1, n))});
    return specs;
}

} // namespace

TEST_CASE("nilpotency verification") {
    const auto* f = ScalarField::rationals();

    SUBCASE("zero differential") {
        for (int n = 2; n <= 4; ++n) {
            std::vector<int> dims{2, 2, 2, 2, 2};
            std::vector<ExactMatrix> d(4, ExactMatrix(f, 2, 2));
            CHECK(verify_nilpotency(NComplex::z_graded(f, n, 0, dims, d)).ok);
        }
    }
    SUBCASE("full-length string") {
        const NComplex c = string_complex({{0, 3}}, 3, Grading::ZGraded, f, 0);
        CHECK(verify_nilpotency(c).ok);
    }
    SUBCASE("over-long chain fails at its start degree") {
        // N + 1 cells chained by hand, bypassing the length guard
        const int n = 3;
        std::vector<int> dims{1, 1, 1, 1};
        std::vector<ExactMatrix> d;
        for (int i = 0; i < 3; ++i) {
            ExactMatrix m(f, 1, 1);
            m(0, 0) = f->one();
            d.push_back(m);
        }
        const auto rep = verify_nilpotency(NComplex::z_graded(f, n, 0, dims, d));
        CHECK_FALSE(rep.ok);
        CHECK(rep.first_failing_degree == 0);
    }
    SUBCASE("string length above N is rejected") {
        CHECK_THROWS_AS(string_complex({{0, 4}}, 3, Grading::ZGraded, f, 0), invalid_input);
    }
}

TEST_CASE("homology on strings") {
    const auto* f = ScalarField::rationals();

    SUBCASE("levels 0 and N vanish") {
        const NComplex c = string_complex({{0, 2}, {1, 1}}, 3, Grading::ZGraded, f, 0);
        for (int n = c.lo(); n + 3 <= c.hi(); ++n) {
            CHECK(homology(c, 0, n).dim == 0);
            CHECK(homology(c, 3, n).dim == 0);
        }
    }
    SUBCASE("single cell at degree 0, N = 3") {
        const NComplex c = string_complex({{0, 1}}, 3, Grading::ZGraded, f, 0);
        CHECK(homology(c, 1, 0).dim == 1);
        CHECK(homology(c, 2, 0).dim == 1);
        CHECK(homology(c, 1, 1).dim == 0);
        CHECK(homology(c, 2, -1).dim == 0);
    }
    SUBCASE("full-length strings are acyclic") {
        const NComplex c = string_complex({{0, 3}}, 3, Grading::ZGraded, f, 0);
        for (int k = 1; k <= 2; ++k)
            for (int n = c.lo(); n + k <= c.hi(); ++n) CHECK(homology(c, k, n).dim == 0);
    }
    SUBCASE("the spec's N = 4 example") {
        // one string: start 2, length 2, k = 2 supports degrees 2 and 3
        const std::vector<StringSpec> specs{{2, 2}};
        CHECK(string_homology_dim(specs, 4, Grading::ZGraded, 2, 2) == 1);
        CHECK(string_homology_dim(specs, 4, Grading::ZGraded, 2, 3) == 1);
        CHECK(string_homology_dim(specs, 4, Grading::ZGraded, 2, 1) == 0);
        const NComplex c = string_complex(specs, 4, Grading::ZGraded, f, 0);
        CHECK(homology(c, 2, 2).dim == 1);
        CHECK(homology(c, 2, 3).dim == 1);
        CHECK(homology(c, 2, 1).dim == 0);
    }
    SUBCASE("window edges raise indeterminate") {
        const NComplex c = string_complex({{0, 1}}, 3, Grading::ZGraded, f, 0);
        CHECK_THROWS_AS(homology(c, 2, c.hi()), indeterminate_error);
    }
}

TEST_CASE("string homology matches the analytic oracle") {
    const auto* f = ScalarField::rationals();
    test::Rng rng(61);
    for (int n = 2; n <= 5; ++n) {
        for (int trial = 0; trial < 6; ++trial) {
            const auto specs = random_specs(rng, n, 6);
            for (const std::uint64_t seed : {std::uint64_t(0), rng.next() | 1}) {
                const NComplex zg = string_complex(specs, n, Grading::ZGraded, f, seed);
                for (int k = 1; k < n; ++k)
                    for (int deg = zg.lo(); deg + k <= zg.hi(); ++deg)
                        CHECK(homology(zg, k, deg).dim ==
                              string_homology_dim(specs, n, Grading::ZGraded, k, deg));
                const NComplex zm = string_complex(specs, n, Grading::ZModN, f, seed);
                const ExactMatrix big = zm.flatten();
                for (int k = 1; k < n; ++k) {
                    int total = 0;
                    for (int p = 0; p < n; ++p)
                        total += string_homology_dim(specs, n, Grading::ZModN, k, p);
                    CHECK(quotient_dim(kernel_basis(big.power(k)),
                                       image_basis(big.power(n - k))) == total);
                }
            }
        }
    }
}

TEST_CASE("hexagon exactness") {
    const auto* f = ScalarField::rationals();

    SUBCASE("zero differential, brute force on a 2-dim complex") {
        std::vector<int> dims{1, 1, 0};
        std::vector<ExactMatrix> d{ExactMatrix(f, 1, 1), ExactMatrix(f, 0, 1),
                                   ExactMatrix(f, 1, 0)};
        const NComplex c = NComplex::z_mod_n(f, 3, dims, d);
        const auto rep = hexagon_check(c, 1, 1);
        CHECK(rep.ok);
        // every node is all of E dim 2; maps alternate identity and zero
        for (const auto& node : rep.nodes) {
            CHECK(node.dim == 2);
            CHECK(node.rank_in + node.rank_out == 2);
        }
    }
    SUBCASE("single full string: all nodes zero") {
        const NComplex c = string_complex({{0, 4}}, 4, Grading::ZModN, f, 0);
        for (int l = 1; l < 4; ++l)
            for (int m = 1; l + m <= 4; ++m) {
                const auto rep = hexagon_check(c, l, m);
                CHECK(rep.ok);
                for (const auto& node : rep.nodes) CHECK(node.dim == 0);
            }
    }
    SUBCASE("random string sums, N = 4, all admissible (l, m)") {
        test::Rng rng(71);
        for (int trial = 0; trial < 6; ++trial) {
            const auto specs = random_specs(rng, 4, 5);
            const NComplex c =
                string_complex(specs, 4, Grading::ZModN, f, trial % 2 ? rng.next() | 1 : 0);
            for (int l = 1; l < 4; ++l)
                for (int m = 1; l + m <= 4; ++m) CHECK(hexagon_check(c, l, m).ok);
        }
    }
    SUBCASE("parameter validation") {
        const NComplex c = string_complex({{0, 1}}, 3, Grading::ZModN, f, 0);
        CHECK_THROWS_AS(hexagon_check(c, 0, 1), invalid_input);
        CHECK_THROWS_AS(hexagon_check(c, 2, 2), invalid_input);
        const NComplex zg = string_complex({{0, 1}}, 3, Grading::ZGraded, f, 0);
        CHECK_THROWS_AS(hexagon_check(zg, 1, 1), invalid_input);
    }
}

TEST_CASE("long exact sequences in the ZGraded case") {
    const auto* f = ScalarField::rationals();

    SUBCASE("zero differential") {
        std::vector<int> dims{1, 1, 1, 1, 1, 1, 1};
        std::vector<ExactMatrix> d(6, ExactMatrix(f, 1, 1));
        const NComplex c = NComplex::z_graded(f, 3, -3, dims, d);
        for (int l = 1; l < 3; ++l)
            for (int m = 1; l + m <= 3; ++m)
                for (int p = 0; p < 3; ++p) CHECK(long_sequence_check(c, l, m, p).ok);
    }
    SUBCASE("single full string") {
        const NComplex c = string_complex({{0, 4}}, 4, Grading::ZGraded, f, 0);
        for (int p = 0; p < 4; ++p) {
            const auto rep = long_sequence_check(c, 1, 2, p);
            CHECK(rep.ok);
            for (const auto& node : rep.nodes) CHECK(node.dim == 0);
        }
    }

    test::Rng rng(83);
    for (int n : {3, 4}) {
        for (int trial = 0; trial < 4; ++trial) {
            const auto specs = random_specs(rng, n, 5);
            const NComplex c =
                string_complex(specs, n, Grading::ZGraded, f, trial % 2 ? rng.next() | 1 : 0);
            for (int l = 1; l < n; ++l)
                for (int m = 1; l + m <= n; ++m)
                    for (int p = 0; p < n; ++p) {
                        const auto rep = long_sequence_check(c, l, m, p);
                        CHECK(rep.ok);
                    }
        }
    }
}

TEST_CASE("[i^l] = [i]^l and [d^m] = [d]^m in canonical quotient bases") {
    const auto* f = ScalarField::rationals();
    test::Rng rng(97);
    const int n = 4;
    const auto specs = random_specs(rng, n, 5);
    const NComplex c = string_complex(specs, n, Grading::ZModN, f, 5);
    const ExactMatrix big = c.flatten();
    const ExactMatrix ident = ExactMatrix::identity(f, big.rows());

    auto node = [&](int k) {
        return std::pair{kernel_basis(big.power(k)), image_basis(big.power(n - k))};
    };

    // [i^2]: H^(1) -> H^(3) as one step versus two
    {
        const auto [k1, i1] = node(1);
        const auto [k2, i2] = node(2);
        const auto [k3, i3] = node(3);
        const ExactMatrix direct = induced_map(ident, k1, i1, k3, i3);
        const ExactMatrix step1 = induced_map(ident, k1, i1, k2, i2);
        const ExactMatrix step2 = induced_map(ident, k2, i2, k3, i3);
        CHECK(direct == step2 * step1);
    }
    // [d^2]: H^(3) -> H^(1) as one step versus two
    {
        const auto [k1, i1] = node(1);
        const auto [k2, i2] = node(2);
        const auto [k3, i3] = node(3);
        const ExactMatrix direct = induced_map(big.power(2), k3, i3, k1, i1);
        const ExactMatrix step1 = induced_map(big, k3, i3, k2, i2);
        const ExactMatrix step2 = induced_map(big, k2, i2, k1, i1);
        CHECK(direct == step2 * step1);
    }
}

TEST_CASE("homotopy check fails for h = 0 on a complex that needs one") {
    const auto* f3 = ScalarField::cyclotomic(3);
    const Scalar q = q_generator(f3);
    const NComplex c = string_complex({{0, 3}}, 3, Grading::ZGraded, f3, 0);
    std::map<int, ExactMatrix> h; // all zero
    const auto rep = homotopy_vanishing_check(c, h, q, c.lo());
    CHECK_FALSE(rep.identity_all());
}
