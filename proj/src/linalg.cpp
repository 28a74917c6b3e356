#include "qnil/linalg.hpp"

namespace qnil {

namespace {

template <bool Parallel>
Rref rref_impl(const ExactMatrix& in) {
    ExactMatrix m = in;
    const int rows = m.rows(), cols = m.cols();
    Rref out;
    out.pivot_cols.reserve(std::min(rows, cols));
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = m(r, col).inverse();
        for (int j = col; j < cols; ++j) m(r, j) = m(r, j) * inv;
        if constexpr (Parallel) {
            // threshold includes the field degree: small updates lose to
            // allocator churn, large cyclotomic ones win
            const long deg = m.field()->degree();
            const long work = static_cast<long>(rows) * (cols - col) * deg * deg;
#pragma omp parallel for schedule(dynamic) if (work > 32768)
            for (int i = 0; i < rows; ++i) {
                if (i == r || m(i, col).is_zero()) continue;
                const Scalar c = m(i, col);
                for (int j = col; j < cols; ++j) {
                    if (m(r, j).is_zero()) continue;
                    m(i, j) = m(i, j) - c * m(r, j);
                }
            }
        } else {
            for (int i = 0; i < rows; ++i) {
                if (i == r || m(i, col).is_zero()) continue;
                const Scalar c = m(i, col);
                for (int j = col; j < cols; ++j) {
                    if (m(r, j).is_zero()) continue;
                    m(i, j) = m(i, j) - c * m(r, j);
                }
            }
        }
        out.pivot_cols.push_back(col);
        ++r;
    }
    out.mat = std::move(m);
    out.rank = r;
    return out;
}

template <bool Parallel>
int rank_impl(const ExactMatrix& in) {
    // Bareiss fraction-free elimination; every division is exact.
    ExactMatrix m = in;
    const int rows = m.rows(), cols = m.cols();
    Scalar prev = m.field()->one();
    int r = 0;
    for (int col = 0; col < cols && r < rows; ++col) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!m(i, col).is_zero()) { p = i; break; }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
        const Scalar pivot = m(r, col);
        const Scalar prev_inv = prev.inverse();
        if constexpr (Parallel) {
            const long deg = m.field()->degree();
            const long work = static_cast<long>(rows - r) * (cols - col) * deg * deg;
#pragma omp parallel for schedule(dynamic) if (work > 32768)
            for (int i = r + 1; i < rows; ++i) {
                for (int j = col + 1; j < cols; ++j)
                    m(i, j) = (pivot * m(i, j) - m(i, col) * m(r, j)) * prev_inv;
                m(i, col) = m.field()->zero();
            }
        } else {
            for (int i = r + 1; i < rows; ++i) {
                for (int j = col + 1; j < cols; ++j)
                    m(i, j) = (pivot * m(i, j) - m(i, col) * m(r, j)) * prev_inv;
                m(i, col) = m.field()->zero();
            }
        }
        prev = pivot;
        ++r;
    }
    return r;
}

// Reduced column-echelon form of the column span: transpose of the RREF of
// the transpose, nonzero rows only.
SubspaceBasis column_echelon(const ExactMatrix& vectors) {
    Rref rr = rref(vectors.transpose());
    SubspaceBasis b;
    b.ambient = vectors.rows();
    b.vectors = ExactMatrix(vectors.field(), vectors.rows(), rr.rank);
    for (int c = 0; c < rr.rank; ++c)
        for (int i = 0; i < vectors.rows(); ++i) b.vectors(i, c) = rr.mat(c, i);
    b.pivot_rows = rr.pivot_cols;
    return b;
}

} // namespace

Rref rref(const ExactMatrix& m) { return rref_impl<true>(m); }
Rref rref_serial(const ExactMatrix& m) { return rref_impl<false>(m); }
int rank(const ExactMatrix& m) { return rank_impl<true>(m); }
int rank_serial(const ExactMatrix& m) { return rank_impl<false>(m); }

SubspaceBasis kernel_basis(const ExactMatrix& m) {
    const Rref rr = rref(m);
    const int n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (int c : rr.pivot_cols) is_pivot[c] = true;

    ExactMatrix vecs(m.field(), n, n - rr.rank);
    int out = 0;
    for (int f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        vecs(f, out) = m.field()->one();
        for (int p = 0; p < rr.rank; ++p)
            vecs(rr.pivot_cols[p], out) = -rr.mat(p, f);
        ++out;
    }
    SubspaceBasis b = column_echelon(vecs);
    if (b.dim() + rr.rank != n) // rank-nullity, checked on every call
        throw error("kernel_basis: rank-nullity violation");
    return b;
}

SubspaceBasis image_basis(const ExactMatrix& m) { return column_echelon(m); }

SubspaceBasis full_space(const ScalarField* field, int ambient) {
    SubspaceBasis b;
    b.ambient = ambient;
    b.vectors = ExactMatrix::identity(field, ambient);
    b.pivot_rows.resize(ambient);
    for (int i = 0; i < ambient; ++i) b.pivot_rows[i] = i;
    return b;
}

SubspaceBasis zero_space(const ScalarField* field, int ambient) {
    SubspaceBasis b;
    b.ambient = ambient;
    b.vectors = ExactMatrix(field, ambient, 0);
    return b;
}

bool contains_vector(const SubspaceBasis& space, const ExactMatrix& v) {
    if (v.rows() != space.ambient) throw dimension_error("contains_vector: ambient mismatch");
    // Pivot rows of an RCEF basis force the coefficients.
    ExactMatrix residue = v;
    for (int c = 0; c < space.dim(); ++c) {
        const Scalar coeff = residue(space.pivot_rows[c], 0);
        if (coeff.is_zero()) continue;
        for (int i = 0; i < space.ambient; ++i)
            residue(i, 0) = residue(i, 0) - coeff * space.vectors(i, c);
    }
    return residue.is_zero();
}

bool contains(const SubspaceBasis& space, const SubspaceBasis& other) {
    if (space.ambient != other.ambient)
        throw dimension_error("contains: ambient dimensions differ");
    for (int j = 0; j < other.dim(); ++j)
        if (!contains_vector(space, other.vectors.column(j))) return false;
    return true;
}

int quotient_dim(const SubspaceBasis& K, const SubspaceBasis& I) {
    if (!contains(K, I))
        throw inclusion_violation("quotient_dim: image not contained in kernel");
    return K.dim() - I.dim();
}

std::optional<ExactMatrix> solve_in_span(const ExactMatrix& B, const ExactMatrix& rhs) {
    if (B.rows() != rhs.rows()) throw dimension_error("solve_in_span: row mismatch");
    const Rref rr = rref(ExactMatrix::hstack(B, rhs));
    ExactMatrix sol(B.field(), B.cols(), rhs.cols());
    for (int p = 0; p < rr.rank; ++p) {
        const int pc = rr.pivot_cols[p];
        if (pc >= B.cols()) return std::nullopt; // pivot in the rhs block: inconsistent
        for (int j = 0; j < rhs.cols(); ++j) sol(pc, j) = rr.mat(p, B.cols() + j);
    }
    return sol;
}

std::vector<int> echelon_completion(const SubspaceBasis& K, const SubspaceBasis& I) {
    RankTracker tracker(K.vectors.field(), K.ambient);
    for (int j = 0; j < I.dim(); ++j) tracker.add_column(I.vectors, j);
    std::vector<int> chosen;
    for (int j = 0; j < K.dim() && tracker.rank() < K.dim(); ++j)
        if (tracker.add_column(K.vectors, j)) chosen.push_back(j);
    return chosen;
}

ExactMatrix induced_map(const ExactMatrix& f, const SubspaceBasis& src_K,
                        const SubspaceBasis& src_I, const SubspaceBasis& dst_K,
                        const SubspaceBasis& dst_I) {
    if (f.cols() != src_K.ambient || f.rows() != dst_K.ambient)
        throw dimension_error("induced_map: shape mismatch");
    if (!contains(src_K, src_I) || !contains(dst_K, dst_I))
        throw inclusion_violation("induced_map: I not contained in K");

    const ExactMatrix f_on_K = f * src_K.vectors;
    for (int j = 0; j < src_K.dim(); ++j)
        if (!contains_vector(dst_K, f_on_K.column(j)))
            throw not_well_defined("induced_map: f does not map src kernel into dst kernel");
    const ExactMatrix f_on_I = f * src_I.vectors;
    for (int j = 0; j < src_I.dim(); ++j)
        if (!contains_vector(dst_I, f_on_I.column(j)))
            throw not_well_defined("induced_map: f does not map src image into dst image");

    const std::vector<int> src_reps = echelon_completion(src_K, src_I);
    const std::vector<int> dst_reps = echelon_completion(dst_K, dst_I);

    // Coordinates modulo dst_I in the canonical completion: solve
    // [dst_I | dst_reps] c = f(rep) and keep the completion block.
    ExactMatrix reps_mat(f.field(), dst_K.ambient, static_cast<int>(dst_reps.size()));
    for (std::size_t c = 0; c < dst_reps.size(); ++c)
        for (int i = 0; i < dst_K.ambient; ++i)
            reps_mat(i, static_cast<int>(c)) = dst_K.vectors(i, dst_reps[c]);
    const ExactMatrix basis = ExactMatrix::hstack(dst_I.vectors, reps_mat);

    ExactMatrix images(f.field(), dst_K.ambient, static_cast<int>(src_reps.size()));
    for (std::size_t c = 0; c < src_reps.size(); ++c) {
        const ExactMatrix fx = f * src_K.vectors.column(src_reps[c]);
        for (int i = 0; i < dst_K.ambient; ++i) images(i, static_cast<int>(c)) = fx(i, 0);
    }
    auto sol = solve_in_span(basis, images);
    if (!sol) throw not_well_defined("induced_map: image not expressible in dst kernel");

    ExactMatrix out(f.field(), static_cast<int>(dst_reps.size()),
                    static_cast<int>(src_reps.size()));
    for (int i = 0; i < out.rows(); ++i)
        for (int j = 0; j < out.cols(); ++j) out(i, j) = (*sol)(dst_I.dim() + i, j);
    return out;
}

// ---- RankTracker ----

std::vector<Scalar> RankTracker::reduce(std::vector<Scalar> v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar& c = v[leads_[r]];
        if (c.is_zero()) continue;
        const Scalar coeff = c;
        for (int i = leads_[r]; i < ambient_; ++i) {
            if (rows_[r][i].is_zero()) continue;
            v[i] = v[i] - coeff * rows_[r][i];
        }
    }
    return v;
}

bool RankTracker::add(std::vector<Scalar> v) {
    if (static_cast<int>(v.size()) != ambient_)
        throw dimension_error("RankTracker::add: wrong length");
    v = reduce(std::move(v));
    int lead = -1;
    for (int i = 0; i < ambient_; ++i)
        if (!v[i].is_zero()) { lead = i; break; }
    if (lead < 0) return false;
    const Scalar inv = v[lead].inverse();
    for (int i = lead; i < ambient_; ++i) v[i] = v[i] * inv;
    // Back-substitute into earlier rows so membership reduction stays simple.
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const Scalar c = rows_[r][lead];
        if (c.is_zero()) continue;
        for (int i = lead; i < ambient_; ++i)
            rows_[r][i] = rows_[r][i] - c * v[i];
    }
    rows_.push_back(std::move(v));
    leads_.push_back(lead);
    return true;
}

bool RankTracker::add_column(const ExactMatrix& m, int col) {
    std::vector<Scalar> v(m.rows(), field_->zero());
    for (int i = 0; i < m.rows(); ++i) v[i] = m(i, col);
    return add(std::move(v));
}

bool RankTracker::spans(const std::vector<Scalar>& v) const {
    auto r = reduce(v);
    for (const auto& x : r)
        if (!x.is_zero()) return false;
    return true;
}

} // namespace qnil
