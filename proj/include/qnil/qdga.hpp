#pragma once

#include <map>
#include <utility>

#include "qnil/ncomplex.hpp"

namespace qnil {

/// Finite-dimensional associative unital algebra by structure constants:
/// e_i e_j = sum_k sc[i][j][k] e_k.  Field-independent; instantiated into a
/// ScalarField when a complex is built.
struct AlgebraSpec {
    int dim = 0;
    std::vector<mpq_class> sc;   // flat [i][j][k], k fastest
    std::vector<mpq_class> unit; // coordinates of 1l

    const mpq_class& c(int i, int j, int k) const {
        return sc[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    mpq_class& c(int i, int j, int k) {
        return sc[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }

    /// Exact associativity and two-sided unit check; throws invalid_input
    /// with a witness triple on failure.
    void validate() const;

    static AlgebraSpec ground_field();            // C
    static AlgebraSpec dual_numbers();            // C[x]/(x^2)
    static AlgebraSpec split_sum(int k);          // C + ... + C, k summands
};

struct LeibnizReport {
    bool ok = true;
    // witness on failure: degrees (a, b) and basis indices (i, j)
    int a = 0, b = 0, i = 0, j = 0;
};

/// Graded q-differential algebra: an NComplex enriched with per-bidegree
/// product tensors and a unit.  Products are stored as matrices
/// dim(a+b) x dim(a)*dim(b); column index is i * dim(b) + j for basis pair
/// (e_i^a, e_j^b).  ZModN algebras (and ZGraded pullbacks) look tensors up
/// modulo N, so a pullback shares its parent's tensors.
class QDGA {
public:
    QDGA() = default;
    QDGA(NComplex complex, Scalar q, ExactMatrix unit,
         std::map<std::pair<int, int>, ExactMatrix> products, bool products_mod_n);

    const NComplex& complex() const { return complex_; }
    const Scalar& q() const { return q_; }
    const ExactMatrix& unit() const { return unit_; }
    bool products_mod_n() const { return products_mod_n_; }

    const ExactMatrix& product(int a, int b) const;
    /// Multiply coordinate vectors x in degree a and y in degree b.
    ExactMatrix multiply(int a, const ExactMatrix& x, int b, const ExactMatrix& y) const;

    /// d(alpha beta) = d(alpha) beta + q^a alpha d(beta) on all basis pairs
    /// within the window.
    LeibnizReport leibniz_check() const;
    /// Structural invariants: degree-additive associative product with a
    /// two-sided unit, on all basis triples/pairs in the window.
    bool check_associativity() const;
    bool check_unit() const;

private:
    std::pair<int, int> key(int a, int b) const;

    NComplex complex_;
    Scalar q_;
    ExactMatrix unit_;
    std::map<std::pair<int, int>, ExactMatrix> products_;
    bool products_mod_n_ = false;
};

/// The block-graded matrix algebra of Example 1: M_S with S = sum(blocks),
/// deg(block i -> j) = j - i mod N, d(A) = eA - q^a A e.  e must be
/// supported in degree 1 and satisfy e^N = lambda 1l; both are checked.
/// Nilpotency of d is verified when q is cyclotomic.
/// Basis contract: degree p lists the elementary matrices E_{rs} with
/// deg(r, s) = p in lexicographic (r, s) order.
QDGA matrix_qdga(const std::vector<int>& block_sizes, const ExactMatrix& e, const Scalar& q);

/// The N-graded lift of the matrix algebra on the window [0, hi] with true
/// integer powers, d_n(A) = eA - q^n A e.  For cyclotomic q this coincides
/// with pullback_grading of matrix_qdga; it is the object on which the
/// q-Leibniz rule holds for every q (the Z_N wrap needs q^N = 1).
QDGA matrix_qdga_graded(const std::vector<int>& block_sizes, const ExactMatrix& e,
                        const Scalar& q, int hi);

/// Degree-1 cyclic shift (e^N = 1l) for the all-ones block layout.
ExactMatrix cyclic_shift_matrix(const ScalarField* field, int n);
/// Degree-1 nilpotent shift (e^N = 0).
ExactMatrix nilpotent_shift_matrix(const ScalarField* field, int n);

/// Pull a ZModN algebra back along N -> Z_N to an N-graded algebra on the
/// window [0, hi]; product tensors are shared modulo N and the projection
/// intertwines d.
QDGA pullback_grading(const QDGA& a, int hi);

} // namespace qnil
