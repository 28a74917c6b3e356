#include "qnil/qdga.hpp"

#include <array>

namespace qnil {

namespace {
int mod(int a, int n) { return ((a % n) + n) % n; }
} // namespace

// ---- AlgebraSpec ----

void AlgebraSpec::validate() const {
    if (dim <= 0) throw invalid_input("AlgebraSpec: dimension must be positive");
    if (sc.size() != static_cast<std::size_t>(dim) * dim * dim)
        throw invalid_input("AlgebraSpec: structure constant tensor has wrong size");
    if (unit.size() != static_cast<std::size_t>(dim))
        throw invalid_input("AlgebraSpec: unit vector has wrong length");

    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            for (int k = 0; k < dim; ++k)
                for (int l = 0; l < dim; ++l) {
                    mpq_class lhs = 0, rhs = 0;
                    for (int m = 0; m < dim; ++m) {
                        lhs += c(i, j, m) * c(m, k, l);
                        rhs += c(j, k, m) * c(i, m, l);
                    }
                    if (lhs != rhs)
                        throw invalid_input(
                            "AlgebraSpec: associativity fails at triple (" + std::to_string(i) +
                            ", " + std::to_string(j) + ", " + std::to_string(k) + ")");
                }
    for (int j = 0; j < dim; ++j)
        for (int k = 0; k < dim; ++k) {
            mpq_class left = 0, right = 0;
            for (int i = 0; i < dim; ++i) {
                left += unit[i] * c(i, j, k);
                right += unit[i] * c(j, i, k);
            }
            const mpq_class expect = (j == k) ? 1 : 0;
            if (left != expect || right != expect)
                throw invalid_input("AlgebraSpec: unit axiom fails at basis index " +
                                    std::to_string(j));
        }
}

AlgebraSpec AlgebraSpec::ground_field() {
    AlgebraSpec a;
    a.dim = 1;
    a.sc = {mpq_class(1)};
    a.unit = {mpq_class(1)};
    return a;
}

AlgebraSpec AlgebraSpec::dual_numbers() {
    AlgebraSpec a;
    a.dim = 2;
    a.sc.assign(8, mpq_class(0));
    a.c(0, 0, 0) = 1; // 1*1 = 1
    a.c(0, 1, 1) = 1; // 1*x = x
    a.c(1, 0, 1) = 1; // x*1 = x
    // x*x = 0
    a.unit = {mpq_class(1), mpq_class(0)};
    return a;
}

AlgebraSpec AlgebraSpec::split_sum(int k) {
    AlgebraSpec a;
    a.dim = k;
    a.sc.assign(static_cast<std::size_t>(k) * k * k, mpq_class(0));
    for (int i = 0; i < k; ++i) a.c(i, i, i) = 1;
    a.unit.assign(k, mpq_class(1));
    return a;
}

// ---- QDGA ----

QDGA::QDGA(NComplex complex, Scalar q, ExactMatrix unit,
           std::map<std::pair<int, int>, ExactMatrix> products, bool products_mod_n)
    : complex_(std::move(complex)), q_(std::move(q)), unit_(std::move(unit)),
      products_(std::move(products)), products_mod_n_(products_mod_n) {}

std::pair<int, int> QDGA::key(int a, int b) const {
    if (!products_mod_n_) return {a, b};
    const int N = complex_.nilpotency_order();
    return {mod(a, N), mod(b, N)};
}

const ExactMatrix& QDGA::product(int a, int b) const {
    auto it = products_.find(key(a, b));
    if (it == products_.end())
        throw dimension_error("QDGA::product: no tensor for bidegree (" + std::to_string(a) +
                              ", " + std::to_string(b) + ")");
    return it->second;
}

ExactMatrix QDGA::multiply(int a, const ExactMatrix& x, int b, const ExactMatrix& y) const {
    const ExactMatrix& p = product(a, b);
    ExactMatrix xy(x.field(), x.rows() * y.rows(), 1);
    for (int i = 0; i < x.rows(); ++i)
        for (int j = 0; j < y.rows(); ++j) xy(i * y.rows() + j, 0) = x(i, 0) * y(j, 0);
    return p * xy;
}

LeibnizReport QDGA::leibniz_check() const {
    const NComplex& c = complex_;
    const int N = c.nilpotency_order();
    const bool wrap = c.grading() == Grading::ZModN;

    std::vector<std::pair<int, int>> bidegrees;
    if (wrap) {
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b) bidegrees.push_back({a, b});
    } else {
        for (int a = c.lo(); a <= c.hi() - 1; ++a)
            for (int b = c.lo(); a + b <= c.hi() - 1; ++b) bidegrees.push_back({a, b});
    }

    for (const auto& [a, b] : bidegrees) {
        const ExactMatrix ia = ExactMatrix::identity(c.field(), c.dim(a));
        const ExactMatrix ib = ExactMatrix::identity(c.field(), c.dim(b));
        const ExactMatrix lhs = c.d_matrix(a + b) * product(a, b);
        const ExactMatrix rhs = product(a + 1, b) * kronecker(c.d_matrix(a), ib) +
                                (product(a, b + 1) * kronecker(ia, c.d_matrix(b))).scaled(q_.pow(a));
        if (lhs == rhs) continue;
        // locate the first failing basis pair for the witness
        for (int col = 0; col < lhs.cols(); ++col)
            for (int row = 0; row < lhs.rows(); ++row)
                if (lhs(row, col) != rhs(row, col)) {
                    LeibnizReport rep;
                    rep.ok = false;
                    rep.a = a;
                    rep.b = b;
                    rep.i = col / std::max(c.dim(b), 1);
                    rep.j = col % std::max(c.dim(b), 1);
                    return rep;
                }
    }
    return {};
}

bool QDGA::check_associativity() const {
    const NComplex& c = complex_;
    const int N = c.nilpotency_order();
    const bool wrap = c.grading() == Grading::ZModN;
    std::vector<std::array<int, 3>> tridegrees;
    if (wrap) {
        for (int a = 0; a < N; ++a)
            for (int b = 0; b < N; ++b)
                for (int g = 0; g < N; ++g) tridegrees.push_back({a, b, g});
    } else {
        for (int a = c.lo(); a <= c.hi(); ++a)
            for (int b = c.lo(); a + b <= c.hi(); ++b)
                for (int g = c.lo(); a + b + g <= c.hi(); ++g) tridegrees.push_back({a, b, g});
    }
    for (const auto& [a, b, g] : tridegrees) {
        const ExactMatrix ia = ExactMatrix::identity(c.field(), c.dim(a));
        const ExactMatrix ig = ExactMatrix::identity(c.field(), c.dim(g));
        const ExactMatrix lhs = product(a + b, g) * kronecker(product(a, b), ig);
        const ExactMatrix rhs = product(a, b + g) * kronecker(ia, product(b, g));
        if (lhs != rhs) return false;
    }
    return true;
}

bool QDGA::check_unit() const {
    const NComplex& c = complex_;
    const int N = c.nilpotency_order();
    const int top = c.grading() == Grading::ZModN ? N - 1 : c.hi();
    const int bottom = c.grading() == Grading::ZModN ? 0 : c.lo();
    for (int a = bottom; a <= top; ++a) {
        const ExactMatrix ia = ExactMatrix::identity(c.field(), c.dim(a));
        if (product(0, a) * kronecker(unit_, ia) != ia) return false;
        if (product(a, 0) * kronecker(ia, unit_) != ia) return false;
    }
    return true;
}

// ---- Example 1: block-graded matrix algebras ----

namespace {

// shared assembly of the block-graded structure of M_S
struct BlockMatrixAlgebra {
    int n = 0, s = 0;
    const ScalarField* field = nullptr;
    std::vector<std::vector<std::pair<int, int>>> basis; // E_{rs} per degree
    std::vector<std::vector<int>> index;                 // (r, s) -> position
    std::vector<int> dims;
    std::vector<ExactMatrix> left, right; // multiplication by e, degree p -> p+1
    std::map<std::pair<int, int>, ExactMatrix> products;
    ExactMatrix unit;

    // d at Z_N-degree p with weight w on the right term: L - w R
    ExactMatrix d_at(int p, const Scalar& w) const { return left[p] - right[p].scaled(w); }
};

BlockMatrixAlgebra assemble_block_algebra(const std::vector<int>& block_sizes,
                                          const ExactMatrix& e, const Scalar& q) {
    BlockMatrixAlgebra out;
    out.n = static_cast<int>(block_sizes.size());
    const int N = out.n;
    if (N < 2) throw invalid_input("matrix_qdga: need at least two blocks");
    int S = 0;
    for (int b : block_sizes) {
        if (b < 1) throw invalid_input("matrix_qdga: block sizes must be >= 1");
        S += b;
    }
    out.s = S;
    const ScalarField* field = q.field();
    out.field = field;
    if (e.rows() != S || e.cols() != S || e.field() != field)
        throw invalid_input("matrix_qdga: e must be S x S over the field of q");

    std::vector<int> blk_of(S);
    {
        int r = 0;
        for (int b = 0; b < N; ++b)
            for (int i = 0; i < block_sizes[b]; ++i) blk_of[r++] = b;
    }
    auto deg_of = [&](int r, int s) { return mod(blk_of[s] - blk_of[r], N); };

    for (int r = 0; r < S; ++r)
        for (int s = 0; s < S; ++s)
            if (!e(r, s).is_zero() && deg_of(r, s) != 1)
                throw invalid_input("matrix_qdga: e has support outside degree 1");
    {
        const ExactMatrix eN = e.power(N);
        const Scalar lambda = eN(0, 0);
        if (eN != ExactMatrix::identity(field, S).scaled(lambda))
            throw invalid_input("matrix_qdga: e^N is not a multiple of the identity");
    }

    // basis of each degree: elementary matrices E_{rs}, lexicographic (r, s)
    out.basis.resize(N);
    out.index.assign(S, std::vector<int>(S, -1));
    for (int r = 0; r < S; ++r)
        for (int s = 0; s < S; ++s) {
            const int p = deg_of(r, s);
            out.index[r][s] = static_cast<int>(out.basis[p].size());
            out.basis[p].push_back({r, s});
        }
    out.dims.resize(N);
    for (int p = 0; p < N; ++p) out.dims[p] = static_cast<int>(out.basis[p].size());

    // e E_rs = sum_u e(u,r) E_us and E_rs e = sum_v e(s,v) E_rv
    for (int p = 0; p < N; ++p) {
        const int pn = mod(p + 1, N);
        ExactMatrix lm(field, out.dims[pn], out.dims[p]);
        ExactMatrix rm(field, out.dims[pn], out.dims[p]);
        for (int col = 0; col < out.dims[p]; ++col) {
            const auto [r, s] = out.basis[p][col];
            for (int u = 0; u < S; ++u)
                if (!e(u, r).is_zero())
                    lm(out.index[u][s], col) = lm(out.index[u][s], col) + e(u, r);
            for (int v = 0; v < S; ++v)
                if (!e(s, v).is_zero())
                    rm(out.index[r][v], col) = rm(out.index[r][v], col) + e(s, v);
        }
        out.left.push_back(std::move(lm));
        out.right.push_back(std::move(rm));
    }

    // products: E_rs E_uv = delta_{su} E_rv
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const int ab = mod(a + b, N);
            ExactMatrix p(field, out.dims[ab], out.dims[a] * out.dims[b]);
            for (int i = 0; i < out.dims[a]; ++i) {
                const auto [r, s] = out.basis[a][i];
                for (int j = 0; j < out.dims[b]; ++j) {
                    const auto [u, v] = out.basis[b][j];
                    if (s == u) p(out.index[r][v], i * out.dims[b] + j) = field->one();
                }
            }
            out.products.emplace(std::make_pair(a, b), std::move(p));
        }

    out.unit = ExactMatrix(field, out.dims[0], 1);
    for (int r = 0; r < S; ++r) out.unit(out.index[r][r], 0) = field->one();
    return out;
}

} // namespace

QDGA matrix_qdga(const std::vector<int>& block_sizes, const ExactMatrix& e, const Scalar& q) {
    BlockMatrixAlgebra alg = assemble_block_algebra(block_sizes, e, q);
    const int N = alg.n;
    std::vector<ExactMatrix> d;
    for (int p = 0; p < N; ++p) d.push_back(alg.d_at(p, q.pow(p)));
    NComplex complex = NComplex::z_mod_n(alg.field, N, alg.dims, std::move(d));
    if (alg.field->mode() == FieldMode::Cyclotomic && alg.field->order() == N) {
        const auto nil = verify_nilpotency(complex);
        if (!nil.ok)
            throw error("matrix_qdga: d^N != 0 at degree " +
                        std::to_string(nil.first_failing_degree));
    }
    return QDGA(std::move(complex), q, std::move(alg.unit), std::move(alg.products), true);
}

QDGA matrix_qdga_graded(const std::vector<int>& block_sizes, const ExactMatrix& e,
                        const Scalar& q, int hi) {
    if (hi < 1) throw invalid_input("matrix_qdga_graded: window top must be >= 1");
    BlockMatrixAlgebra alg = assemble_block_algebra(block_sizes, e, q);
    const int N = alg.n;
    std::vector<int> dims(hi + 1);
    for (int n = 0; n <= hi; ++n) dims[n] = alg.dims[mod(n, N)];
    std::vector<ExactMatrix> d;
    for (int n = 0; n < hi; ++n) d.push_back(alg.d_at(mod(n, N), q.pow(n)));
    NComplex complex = NComplex::z_graded(alg.field, N, 0, std::move(dims), std::move(d));
    return QDGA(std::move(complex), q, std::move(alg.unit), std::move(alg.products), true);
}

ExactMatrix cyclic_shift_matrix(const ScalarField* field, int n) {
    ExactMatrix e(field, n, n);
    for (int r = 0; r < n; ++r) e(r, (r + 1) % n) = field->one();
    return e;
}

ExactMatrix nilpotent_shift_matrix(const ScalarField* field, int n) {
    ExactMatrix e(field, n, n);
    for (int r = 0; r + 1 < n; ++r) e(r, r + 1) = field->one();
    return e;
}

QDGA pullback_grading(const QDGA& a, int hi) {
    const NComplex& src = a.complex();
    if (src.grading() != Grading::ZModN)
        throw invalid_input("pullback_grading: source must be ZModN");
    if (hi < 0) throw invalid_input("pullback_grading: window top must be >= 0");
    const int N = src.nilpotency_order();

    std::vector<int> dims(hi + 1);
    for (int n = 0; n <= hi; ++n) dims[n] = src.dim(mod(n, N));
    std::vector<ExactMatrix> d;
    for (int n = 0; n < hi; ++n) d.push_back(src.d_matrix(mod(n, N)));

    NComplex complex = NComplex::z_graded(src.field(), N, 0, std::move(dims), std::move(d));

    std::map<std::pair<int, int>, ExactMatrix> products;
    for (int p = 0; p < N; ++p)
        for (int r = 0; r < N; ++r) products.emplace(std::make_pair(p, r), a.product(p, r));
    return QDGA(std::move(complex), a.q(), a.unit(), std::move(products), true);
}

} // namespace qnil
