#pragma once

#include <string>

#include "qnil/qdga.hpp"

namespace qnil {

/// Graded family E^n with coface maps f_k : E^n -> E^{n+1}, k = 0..n+1,
/// subject to f_l f_k = f_k f_{l-1} for k < l.
struct CopresimplicialSpace {
    const ScalarField* field = ScalarField::rationals();
    std::vector<int> levels;                       // dims of E^0 .. E^top
    std::vector<std::vector<ExactMatrix>> cofaces; // cofaces[n][k], n < top

    int top() const { return static_cast<int>(levels.size()) - 1; }
    /// Exact check of the cosimplicial identity on every admissible (k, l, n);
    /// throws invalid_input with a witness on failure.
    void validate() const;
};

enum class CofaceVariant { Lower, Full };

/// The two coface differentials d_q = sum_{k<=n} q^k f_k - q^n f_{n+1} (Lower) or
/// d~_q = sum_{k<=n+1} q^k f_k (Full), assembled into an NComplex with the
/// given nilpotency order.
NComplex d_q_from_cofaces(const CopresimplicialSpace& s, const Scalar& q,
                          CofaceVariant variant, int N);

/// Finite simplicial complex: vertices plus facets; the set system is the
/// downward closure of the facets.
struct SimplicialComplexSpec {
    std::vector<std::string> vertices;
    std::vector<std::vector<int>> facets; // vertex indices
    void validate() const;
};

/// The algebra of simplicial q-forms up to degree n_max: basis indicators of
/// ordered n-simplices (vertex sequences with underlying set in the complex),
/// product by end-to-end concatenation, differential by vertex omission.
QDGA simplicial_forms(const SimplicialComplexSpec& k, const Scalar& q, int n_max, int N,
                      std::size_t cap);
/// The coface family underlying simplicial_forms (duals of the face maps).
CopresimplicialSpace simplicial_cofaces(const SimplicialComplexSpec& k,
                                        const ScalarField* field, int n_max,
                                        std::size_t cap);

/// Bimodule over an AlgebraSpec by action tensors:
/// e_i . m_j = sum_k left[i][j][k] m_k,  m_i . e_j = sum_k right[i][j][k] m_k.
struct BimoduleSpec {
    int dim = 0;
    std::vector<mpq_class> left;  // [dimA][dimM][dimM]
    std::vector<mpq_class> right; // [dimM][dimA][dimM]

    const mpq_class& l(int i, int j, int k, int dim_a) const {
        (void)dim_a;
        return left[(static_cast<std::size_t>(i) * dim + j) * dim + k];
    }
    const mpq_class& r(int i, int j, int k, int dim_a) const {
        return right[(static_cast<std::size_t>(i) * dim_a + j) * dim + k];
    }
    void validate(const AlgebraSpec& a) const;
    /// A as a bimodule over itself.
    static BimoduleSpec regular(const AlgebraSpec& a);
};

/// M-valued q-Hochschild complex: C^n = Lin(A^{tensor n}, M) with the
/// q-weighted coboundary delta_q.
NComplex hochschild_complex(const AlgebraSpec& a, const BimoduleSpec& m, const Scalar& q,
                            int n_max, int N, std::size_t cap);
/// A-valued case with the cup product, making it a QDGA.
QDGA hochschild_qdga(const AlgebraSpec& a, const Scalar& q, int n_max, int N,
                     std::size_t cap);
/// The coface family whose lower-variant d_q equals delta_q.
CopresimplicialSpace hochschild_cofaces(const AlgebraSpec& a, const BimoduleSpec& m,
                                        const ScalarField* field, int n_max,
                                        std::size_t cap);

struct DualProductComplex {
    NComplex complex;               // C^n = (A^{tensor n})^*, differential m*_q
    std::map<int, ExactMatrix> h;   // contracting homotopy, h[n]: C^n -> C^{n-1}
};

/// The dual-of-product differential with its contracting homotopy
/// h(omega) = omega(1l, -); m*_q kills C^0 and h kills C^1.
DualProductComplex dual_product_complex(const AlgebraSpec& a, const Scalar& q, int n_max,
                                        int N, std::size_t cap);
/// The merge-slot coface family; its full-variant d~_q at level n equals
/// m*_q at degree n + 2.
CopresimplicialSpace dual_product_cofaces(const AlgebraSpec& a, const ScalarField* field,
                                          int n_max, std::size_t cap);

} // namespace qnil
