#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qnil/scalar.hpp"
#include "test_support.hpp"

using namespace qnil;
using test::Poly;

TEST_CASE("cyclotomic polynomials against the division oracle") {
    CHECK(cyclotomic_polynomial(1) == Poly{-1, 1});

    // Phi_3 = (x^3 - 1) / (x - 1)
    auto [q3, r3] = test::poly_divmod(test::x_pow_minus_one(3), Poly{-1, 1});
    REQUIRE(r3 == Poly{0});
    CHECK(cyclotomic_polynomial(3) == q3);
    CHECK(q3 == Poly{1, 1, 1});

    // Phi_6 = (x^6 - 1) / (Phi_1 Phi_2 Phi_3)
    const Poly den = test::poly_mul(test::poly_mul(Poly{-1, 1}, Poly{1, 1}), Poly{1, 1, 1});
    auto [q6, r6] = test::poly_divmod(test::x_pow_minus_one(6), den);
    REQUIRE(r6 == Poly{0, 0, 0, 0});
    CHECK(cyclotomic_polynomial(6) == q6);
    CHECK(q6 == Poly{1, -1, 1});

    CHECK_THROWS_AS(cyclotomic_polynomial(0), invalid_input);
}

TEST_CASE("Phi_N is monic, has totient degree and divides x^N - 1") {
    for (int n = 1; n <= 12; ++n) {
        const Poly phi = cyclotomic_polynomial(n);
        CHECK(phi.back() == 1);
        CHECK(static_cast<int>(phi.size()) - 1 == test::totient(n));
        auto [q, r] = test::poly_divmod(test::x_pow_minus_one(n), phi);
        for (const auto& c : r) CHECK(c == 0);
    }
}

TEST_CASE("q_generator") {
    SUBCASE("N = 2 gives -1") {
        const auto* f = ScalarField::cyclotomic(2);
        CHECK(q_generator(f) == f->from_int(-1));
    }
    SUBCASE("N = 4 squares to -1") {
        const auto* f = ScalarField::cyclotomic(4);
        const Scalar z = q_generator(f);
        CHECK(z.pow(2) == f->from_int(-1));
    }
    SUBCASE("rational q") {
        const auto* f = ScalarField::rationals();
        CHECK(q_generator(f, 2) == f->from_int(2));
        CHECK_THROWS_AS(q_generator(f, 0), invalid_input);
        CHECK_THROWS_AS(q_generator(f, 1), invalid_input);
        CHECK_THROWS_AS(q_generator(ScalarField::cyclotomic(3), 2), invalid_input);
    }
}

TEST_CASE("q-integers and q-factorials") {
    const auto* f3 = ScalarField::cyclotomic(3);
    const Scalar z3 = q_generator(f3);
    CHECK(q_integer(3, z3).is_zero()); // 1 + q + q^2 = Phi_3(q)
    CHECK(q_integer(2, q_generator(ScalarField::rationals(), -1)).is_zero());
    CHECK(q_integer(3, q_generator(ScalarField::rationals(), 2)) ==
          ScalarField::rationals()->from_int(7));

    // [2]_q at a primitive third root is 1 + q
    CHECK(q_factorial(2, z3) == f3->one() + z3);
    CHECK(q_factorial(1, z3).is_one());
    CHECK(q_factorial(0, z3).is_one());
    CHECK(q_factorial(3, q_generator(ScalarField::rationals(), 2)) ==
          ScalarField::rationals()->from_int(21)); // [2]_2 [3]_2 = 3 * 7
}

TEST_CASE("primitive root properties for N <= 12") {
    for (int n = 2; n <= 12; ++n) {
        const auto* f = ScalarField::cyclotomic(n);
        const Scalar q = q_generator(f);
        CHECK(q.pow(n).is_one());
        for (int m = 1; m < n; ++m) CHECK_FALSE(q.pow(m).is_one());
        CHECK(q_integer(n, q).is_zero());
        CHECK_FALSE(q_factorial(n - 1, q).is_zero());
    }
}

TEST_CASE("field axioms on randomized scalars") {
    test::Rng rng(7);
    for (const ScalarField* f :
         {ScalarField::rationals(), ScalarField::cyclotomic(3), ScalarField::cyclotomic(5),
          ScalarField::cyclotomic(12)}) {
        for (int t = 0; t < 25; ++t) {
            const Scalar a = test::random_scalar(f, rng);
            const Scalar b = test::random_scalar(f, rng);
            const Scalar c = test::random_scalar(f, rng);
            CHECK((a + b) + c == a + (b + c));
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        }
    }
    CHECK_THROWS_AS(ScalarField::cyclotomic(4)->zero().inverse(), division_by_zero);
}

TEST_CASE("canonical reduction is idempotent") {
    test::Rng rng(11);
    const auto* f = ScalarField::cyclotomic(9);
    for (int t = 0; t < 20; ++t) {
        std::vector<mpq_class> raw(15);
        for (auto& x : raw) {
            x = mpq_class(rng.below(-9, 9), rng.below(1, 4));
            x.canonicalize();
        }
        const Scalar once = Scalar::reduce(f, raw);
        const Scalar twice = Scalar::reduce(f, once.coeffs());
        CHECK(once == twice);
    }
}
