#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qnil/errors.hpp"

namespace qnil {

enum class FieldMode { Rational, Cyclotomic };

/// Coefficients of the N-th cyclotomic polynomial, constant term first.
/// Computed by exact division of x^N - 1 by the product of Phi_d over the
/// proper divisors d of N.
std::vector<mpz_class> cyclotomic_polynomial(int n);

class Scalar;

/// Ground field of all exact computations: either Q, or the cyclotomic
/// field Q(zeta_N) = Q[x]/(Phi_N).  Instances are interned; identity of
/// the pointer is identity of the field.
class ScalarField {
public:
    static const ScalarField* rationals();
    static const ScalarField* cyclotomic(int n); // n >= 2

    FieldMode mode() const { return mode_; }
    /// N in cyclotomic mode, 0 for the rationals.
    int order() const { return n_; }
    /// Extension degree over Q: 1 for the rationals, deg Phi_N otherwise.
    int degree() const { return degree_; }
    const std::vector<mpz_class>& modulus() const { return modulus_; }

    Scalar zero() const;
    Scalar one() const;
    Scalar from_rational(const mpq_class& v) const;
    Scalar from_int(long v) const;

    ScalarField(const ScalarField&) = delete;
    ScalarField& operator=(const ScalarField&) = delete;

private:
    ScalarField(FieldMode mode, int n);

    FieldMode mode_;
    int n_;
    int degree_;
    std::vector<mpz_class> modulus_;
};

/// Element of a ScalarField.  Rational mode stores one rational; cyclotomic
/// mode stores deg Phi_N rationals, the coefficient of zeta^i at index i,
/// always reduced mod Phi_N and in lowest terms.  Immutable value type.
class Scalar {
public:
    Scalar(); // zero in Q

    const ScalarField* field() const { return field_; }
    const std::vector<mpq_class>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    /// The rational part; throws unless the element lies in Q.
    mpq_class rational_value() const;

    Scalar operator-() const;
    Scalar inverse() const; // throws division_by_zero on 0
    Scalar pow(long k) const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;

    /// Canonical reduction of a raw coefficient vector (any length) into a
    /// Scalar of the given field.  Exposed so reduction idempotence is testable.
    static Scalar reduce(const ScalarField* field, std::vector<mpq_class> raw);

private:
    friend class ScalarField;
    Scalar(const ScalarField* f, std::vector<mpq_class> c);

    const ScalarField* field_;
    std::vector<mpq_class> c_;
};

/// The canonical q: the class of x mod Phi_N.  Requires cyclotomic mode.
Scalar q_generator(const ScalarField* field);
/// A caller-supplied rational q; rejects q in {0, 1}.
Scalar q_generator(const ScalarField* field, const mpq_class& value);

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Scalar q_integer(long n, const Scalar& q);
/// [n!]_q = [2]_q [3]_q ... [n]_q; empty product = 1 for n <= 1.
Scalar q_factorial(long n, const Scalar& q);

} // namespace qnil
