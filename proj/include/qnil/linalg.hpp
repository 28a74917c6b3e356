#pragma once

#include <optional>
#include <vector>

#include "qnil/matrix.hpp"

namespace qnil {

/// Canonical basis of a subspace: linearly independent columns in reduced
/// column-echelon form.  Two computations over the same span produce
/// identical objects.
struct SubspaceBasis {
    int ambient = 0;
    ExactMatrix vectors;          // ambient x dim
    std::vector<int> pivot_rows;  // strictly increasing, one per column

    int dim() const { return vectors.cols(); }
};

struct Rref {
    ExactMatrix mat;
    std::vector<int> pivot_cols;
    int rank = 0;
};

/// Reduced row-echelon form with the fixed pivot rule: first row with a
/// nonzero entry in the leftmost unresolved column.  OpenMP row updates;
/// output is bit-identical to rref_serial.
Rref rref(const ExactMatrix& m);
Rref rref_serial(const ExactMatrix& m);

/// Exact rank via fraction-free (Bareiss) elimination.
int rank(const ExactMatrix& m);
int rank_serial(const ExactMatrix& m);

/// Canonical basis of {v : Mv = 0}.
SubspaceBasis kernel_basis(const ExactMatrix& m);
/// Canonical basis of the column span of M.
SubspaceBasis image_basis(const ExactMatrix& m);
/// The full standard space / the zero subspace of the given ambient dimension.
SubspaceBasis full_space(const ScalarField* field, int ambient);
SubspaceBasis zero_space(const ScalarField* field, int ambient);

/// True iff every vector of `other` lies in span(`space`).
bool contains(const SubspaceBasis& space, const SubspaceBasis& other);
bool contains_vector(const SubspaceBasis& space, const ExactMatrix& v);

/// dim K - dim I; throws inclusion_violation unless I is contained in K.
int quotient_dim(const SubspaceBasis& K, const SubspaceBasis& I);

/// Solve B c = x for each column x of rhs; nullopt if some column lies
/// outside the column span of B.  B need not have full column rank; the
/// echelon solution (free coordinates zero) is returned.
std::optional<ExactMatrix> solve_in_span(const ExactMatrix& B, const ExactMatrix& rhs);

/// Indices of the columns of K that extend span(I) to span(K), chosen
/// greedily in column order.  The returned representatives define the
/// canonical quotient coordinates used by induced_map.
std::vector<int> echelon_completion(const SubspaceBasis& K, const SubspaceBasis& I);

/// Matrix of the map on quotients K/I induced by f, in the canonical
/// completion coordinates.  Throws not_well_defined when f fails to map
/// src_K into dst_K or src_I into dst_I.
ExactMatrix induced_map(const ExactMatrix& f, const SubspaceBasis& src_K,
                        const SubspaceBasis& src_I, const SubspaceBasis& dst_K,
                        const SubspaceBasis& dst_I);

/// Incremental Gaussian elimination over growing vector families; used for
/// span membership and closure computations.
class RankTracker {
public:
    explicit RankTracker(const ScalarField* field, int ambient)
        : field_(field), ambient_(ambient) {}

    /// Insert v; returns true iff v was independent of the current span.
    bool add(std::vector<Scalar> v);
    bool add_column(const ExactMatrix& m, int col);
    /// Membership test without insertion.
    bool spans(const std::vector<Scalar>& v) const;
    int rank() const { return static_cast<int>(rows_.size()); }
    int ambient() const { return ambient_; }

private:
    std::vector<Scalar> reduce(std::vector<Scalar> v) const;
    const ScalarField* field_;
    int ambient_;
    std::vector<std::vector<Scalar>> rows_; // echelon, unit leading entries
    std::vector<int> leads_;
};

} // namespace qnil
