// Wall-clock comparison of the OpenMP elimination/product kernels against
// their serial references.  Results must agree entry for entry; this binary
// aborts if they do not.

#include <chrono>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qnil/linalg.hpp"

using namespace qnil;

namespace {

struct Rng {
    std::uint64_t state = 0x243f6a8885a308d3ULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long below(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

ExactMatrix random_matrix(const ScalarField* f, int rows, int cols, Rng& rng) {
    ExactMatrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = f->from_int(rng.below(-6, 6));
    return m;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void bench_field(const ScalarField* f, const char* label, int n) {
    Rng rng;
    const ExactMatrix a = random_matrix(f, n, n, rng);
    const ExactMatrix b = random_matrix(f, n, n, rng);

    ExactMatrix prod_par, prod_ser;
    Rref rref_par, rref_ser;
    int rank_par = 0, rank_ser = 0;

    const double t_mul_par = time_ms([&] { prod_par = a * b; });
    const double t_mul_ser = time_ms([&] { prod_ser = multiply_serial(a, b); });
    const double t_rref_par = time_ms([&] { rref_par = rref(a); });
    const double t_rref_ser = time_ms([&] { rref_ser = rref_serial(a); });
    const double t_rank_par = time_ms([&] { rank_par = rank(a); });
    const double t_rank_ser = time_ms([&] { rank_ser = rank_serial(a); });

    if (prod_par != prod_ser || rref_par.mat != rref_ser.mat || rank_par != rank_ser) {
        std::fprintf(stderr, "kernel mismatch against the serial reference\n");
        std::abort();
    }

    std::printf("%-10s n=%3d  multiply %8.2f / %8.2f ms  rref %8.2f / %8.2f ms  "
                "rank %8.2f / %8.2f ms  (parallel / serial)\n",
                label, n, t_mul_par, t_mul_ser, t_rref_par, t_rref_ser, t_rank_par,
                t_rank_ser);
}

} // namespace

int main(int argc, char** argv) {
    int n = argc > 1 ? std::atoi(argv[1]) : 96;
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not enabled; both columns run serially\n");
#endif
    bench_field(ScalarField::rationals(), "Q", n);
    bench_field(ScalarField::cyclotomic(3), "Q(zeta_3)", n / 2);
    bench_field(ScalarField::cyclotomic(5), "Q(zeta_5)", n / 3);
    return 0;
}
