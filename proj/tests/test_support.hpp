#pragma once

#include <cstdint>
#include <vector>

#include "qnil/linalg.hpp"

namespace qnil::test {

// Deterministic PRNG for test data; avoids distribution objects so sequences
// are stable across standard libraries.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed * 6364136223846793005ULL + 1442695040888963407ULL) {}
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // uniform-ish integer in [lo, hi]
    long below(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

inline Scalar random_scalar(const ScalarField* f, Rng& rng) {
    std::vector<mpq_class> c(f->degree());
    for (auto& x : c) {
        x = mpq_class(rng.below(-4, 4), rng.below(1, 3));
        x.canonicalize();
    }
    return Scalar::reduce(f, std::move(c));
}

inline ExactMatrix random_matrix(const ScalarField* f, int rows, int cols, Rng& rng) {
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = f->from_int(rng.below(-3, 3));
    return m;
}

// ---- integer polynomial helpers (oracle-side) ----

using Poly = std::vector<mpz_class>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

// division with remainder by a monic divisor
inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (dn < dd) return {Poly{mpz_class(0)}, num};
    Poly quot(dn - dd + 1, mpz_class(0));
    for (int k = dn - dd; k >= 0; --k) {
        mpz_class c = num[k + dd];
        quot[k] = c;
        if (c == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= c * den[j];
    }
    num.resize(dd == 0 ? 1 : dd, mpz_class(0));
    return {quot, num};
}

inline Poly x_pow_minus_one(int n) {
    Poly p(n + 1, mpz_class(0));
    p[0] = -1;
    p[n] = 1;
    return p;
}

inline int totient(int n) {
    int out = 0;
    for (int k = 1; k <= n; ++k) {
        int a = k, b = n;
        while (b) {
            const int t = a % b;
            a = b;
            b = t;
        }
        if (a == 1) ++out;
    }
    return out;
}

} // namespace qnil::test
