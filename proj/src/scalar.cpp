#include "qnil/scalar.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace qnil {

namespace {

// ---- integer polynomial helpers for Phi_N ----

std::vector<mpz_class> poly_mul_z(const std::vector<mpz_class>& a,
                                  const std::vector<mpz_class>& b) {
    std::vector<mpz_class> out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

// Exact division in Z[x]; divisor must be monic here.
std::vector<mpz_class> poly_divexact_z(std::vector<mpz_class> num,
                                       const std::vector<mpz_class>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    std::vector<mpz_class> quot(dn - dd + 1, mpz_class(0));
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class c = num[k + dd]; // leading coeff of den is 1
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j)
            num[k + j] -= c * den[j];
    }
    return quot;
}

} // namespace

std::vector<mpz_class> cyclotomic_polynomial(int n) {
    static std::mutex mtx;
    static std::map<int, std::vector<mpz_class>> cache;
    std::lock_guard<std::mutex> lock(mtx);

    if (n < 1) throw invalid_input("cyclotomic_polynomial: N must be >= 1");
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::function<std::vector<mpz_class>(int)> phi = [&](int m) -> std::vector<mpz_class> {
        auto hit = cache.find(m);
        if (hit != cache.end()) return hit->second;
        std::vector<mpz_class> num(m + 1, mpz_class(0));
        num[0] = -1;
        num[m] = 1;
        std::vector<mpz_class> den{mpz_class(1)};
        for (int d = 1; d < m; ++d)
            if (m % d == 0) den = poly_mul_z(den, phi(d));
        auto result = poly_divexact_z(std::move(num), den);
        cache.emplace(m, result);
        return result;
    };
    return phi(n);
}

// ---- ScalarField ----

ScalarField::ScalarField(FieldMode mode, int n) : mode_(mode), n_(n) {
    if (mode_ == FieldMode::Rational) {
        degree_ = 1;
    } else {
        modulus_ = cyclotomic_polynomial(n);
        degree_ = static_cast<int>(modulus_.size()) - 1;
    }
}

const ScalarField* ScalarField::rationals() {
    static const ScalarField instance(FieldMode::Rational, 0);
    return &instance;
}

const ScalarField* ScalarField::cyclotomic(int n) {
    if (n < 2) throw invalid_input("ScalarField::cyclotomic: N must be >= 2");
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<ScalarField>> registry;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = registry[n];
    if (!slot) slot.reset(new ScalarField(FieldMode::Cyclotomic, n));
    return slot.get();
}

Scalar ScalarField::zero() const {
    return Scalar(this, std::vector<mpq_class>(degree_, mpq_class(0)));
}

Scalar ScalarField::one() const {
    std::vector<mpq_class> c(degree_, mpq_class(0));
    c[0] = 1;
    return Scalar(this, std::move(c));
}

Scalar ScalarField::from_rational(const mpq_class& v) const {
    std::vector<mpq_class> c(degree_, mpq_class(0));
    c[0] = v;
    c[0].canonicalize();
    return Scalar(this, std::move(c));
}

Scalar ScalarField::from_int(long v) const { return from_rational(mpq_class(v)); }

// ---- Scalar ----

Scalar::Scalar() : field_(ScalarField::rationals()), c_(1, mpq_class(0)) {}

Scalar::Scalar(const ScalarField* f, std::vector<mpq_class> c)
    : field_(f), c_(std::move(c)) {}

Scalar Scalar::reduce(const ScalarField* field, std::vector<mpq_class> raw) {
    const int deg = field->degree();
    if (field->mode() == FieldMode::Cyclotomic) {
        const auto& mod = field->modulus();
        for (int i = static_cast<int>(raw.size()) - 1; i >= deg; --i) {
            mpq_class c = raw[i];
            if (c == 0) continue;
            raw[i] = 0;
            for (int j = 0; j < deg; ++j)
                raw[i - deg + j] -= c * mod[j]; // monic modulus
        }
    }
    raw.resize(deg, mpq_class(0));
    for (auto& x : raw) x.canonicalize();
    return Scalar(field, std::move(raw));
}

bool Scalar::is_zero() const {
    for (const auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool Scalar::is_one() const {
    if (c_[0] != 1) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

mpq_class Scalar::rational_value() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) throw error("Scalar::rational_value: element is not rational");
    return c_[0];
}

Scalar Scalar::operator-() const {
    std::vector<mpq_class> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
    return Scalar(field_, std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw dimension_error("Scalar: mixed fields");
    std::vector<mpq_class> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
    return Scalar(a.field_, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw dimension_error("Scalar: mixed fields");
    std::vector<mpq_class> c(a.c_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] - b.c_[i];
    return Scalar(a.field_, std::move(c));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) throw dimension_error("Scalar: mixed fields");
    if (a.field_->mode() == FieldMode::Rational)
        return Scalar(a.field_, {mpq_class(a.c_[0] * b.c_[0])});
    std::vector<mpq_class> prod(2 * a.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    return Scalar::reduce(a.field_, std::move(prod));
}

namespace {

int poly_deg(const std::vector<mpq_class>& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

// Extended Euclid in Q[x]: returns u with u*a == gcd(a, m) (mod m).
// Since Phi_N is irreducible over Q, gcd is a nonzero constant for a != 0.
std::vector<mpq_class> poly_inverse_mod(const std::vector<mpq_class>& a,
                                        const std::vector<mpz_class>& modulus) {
    std::vector<mpq_class> r0(modulus.size());
    for (std::size_t i = 0; i < modulus.size(); ++i) r0[i] = mpq_class(modulus[i]);
    std::vector<mpq_class> r1 = a;
    std::vector<mpq_class> s0{mpq_class(0)}, s1{mpq_class(1)};

    while (poly_deg(r1) > 0) {
        // division step: r0 = q*r1 + r
        std::vector<mpq_class> rem = r0;
        std::vector<mpq_class> q(std::max<std::size_t>(rem.size(), 1), mpq_class(0));
        const int d1 = poly_deg(r1);
        const mpq_class lead = r1[d1];
        for (int k = poly_deg(rem); k >= d1; k = poly_deg(rem)) {
            mpq_class c = rem[k] / lead;
            q[k - d1] = c;
            for (int j = 0; j <= d1; ++j) rem[k - d1 + j] -= c * r1[j];
        }
        // s update: s = s0 - q*s1
        std::vector<mpq_class> s(std::max(s0.size(), q.size() + s1.size()), mpq_class(0));
        for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
        for (std::size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
        }
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    const int d = poly_deg(r1);
    if (d < 0) throw division_by_zero("Scalar::inverse: zero divisor");
    const mpq_class g = r1[0];
    for (auto& x : s1) x /= g;
    return s1;
}

} // namespace

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero("Scalar::inverse: division by zero");
    if (field_->mode() == FieldMode::Rational)
        return Scalar(field_, {mpq_class(1 / c_[0])});
    return Scalar::reduce(field_, poly_inverse_mod(c_, field_->modulus()));
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long k) const {
    if (k < 0) return inverse().pow(-k);
    Scalar base = *this;
    Scalar acc = field_->one();
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) return false;
    return a.c_ == b.c_;
}

std::string Scalar::to_string() const {
    if (field_->mode() == FieldMode::Rational) return c_[0].get_str();
    std::string out = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) out += ", ";
        out += c_[i].get_str();
    }
    out += "]";
    return out;
}

// ---- q helpers ----

Scalar q_generator(const ScalarField* field) {
    if (field->mode() != FieldMode::Cyclotomic)
        throw invalid_input("q_generator: canonical q requires a cyclotomic field");
    std::vector<mpq_class> x(field->degree(), mpq_class(0));
    if (field->degree() >= 2) {
        x[1] = 1;
        return Scalar::reduce(field, std::move(x));
    }
    // deg Phi_N = 1 only for N = 2: x == -1 mod (x + 1)
    x[0] = -1;
    return Scalar::reduce(field, std::move(x));
}

Scalar q_generator(const ScalarField* field, const mpq_class& value) {
    if (field->mode() != FieldMode::Rational)
        throw invalid_input("q_generator: a supplied value requires the rational field");
    if (value == 0 || value == 1)
        throw invalid_input("q_generator: rational q must not be 0 or 1");
    return field->from_rational(value);
}

Scalar q_integer(long n, const Scalar& q) {
    Scalar acc = q.field()->zero();
    Scalar p = q.field()->one();
    for (long i = 0; i < n; ++i) {
        acc = acc + p;
        p = p * q;
    }
    return acc;
}

Scalar q_factorial(long n, const Scalar& q) {
    Scalar acc = q.field()->one();
    for (long j = 2; j <= n; ++j) acc = acc * q_integer(j, q);
    return acc;
}

} // namespace qnil
