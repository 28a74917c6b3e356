#pragma once

#include "qnil/qdga.hpp"

namespace qnil {

/// T^n(A) = (n+1)-fold tensor power of A with the concatenate-and-multiply
/// product and the insert-a-unit differential; tau = 1l (x) 1l generates
/// degree 1.
/// Basis of T^n: index tuples (i_0..i_n), big-endian flat order.
QDGA tensor_qdga(const AlgebraSpec& a, const Scalar& q, int n_max, std::size_t cap);

/// Coordinates of tau in degree 1 of tensor_qdga(a, ...).
ExactMatrix tau_vector(const AlgebraSpec& a, const ScalarField* field);

/// Per-degree subspaces of T(A) forming the universal q-differential
/// envelope Omega_q(A): the smallest family containing A in degree 0 that is
/// closed under d_q and products.
struct EnvelopeSubspace {
    std::vector<SubspaceBasis> levels; // levels[n] inside T^n

    int dim(int n) const { return levels[n].dim(); }
    int top() const { return static_cast<int>(levels.size()) - 1; }
};

/// Fixed-point closure inside tensor_qdga(a, q, n_max).
EnvelopeSubspace universal_envelope(const AlgebraSpec& a, const Scalar& q, int n_max,
                                    std::size_t cap);

/// The envelope as a QDGA in its own canonical coordinates (d and products
/// restricted from the ambient tensor algebra).
QDGA envelope_qdga(const QDGA& tensor, const EnvelopeSubspace& env);

/// Classical envelope dimension dim(A (x) Abar^{(x) n}); the q = -1 oracle.
long classical_envelope_dim(int dim_a, int n);

struct InducedHom {
    std::vector<ExactMatrix> maps; // maps[n]: envelope level n -> target degree n
    bool intertwines_d = false;
    bool intertwines_product = false;
};

/// The universal property of the envelope: the homomorphism
/// Omega_q(A) -> target extending a unital
/// algebra homomorphism phi : A -> target^0 (phi as a matrix on basis
/// coordinates).  Throws invalid_input if phi is not a unital homomorphism
/// and not_well_defined (with a witness) if a linear relation fails to map
/// to zero.
InducedHom induced_homomorphism(const AlgebraSpec& a, const ExactMatrix& phi,
                                const QDGA& target, const QDGA& tensor,
                                const EnvelopeSubspace& env);

/// E = C e_{-(N-1)} + ... + C e_{-1} + T(A) with d e_{-1} = 1l,
/// d e_{-k} = e_{-(k-1)}, plus the degree -1 contracting homotopy h built from a
/// linear form omega with omega(1l) = 1.  With restrict_to_envelope, the
/// positive part is Omega_q(A) instead (stability under d and h is checked).
struct ExtendedComplex {
    NComplex complex;             // window [-(N-1), n_max]
    std::map<int, ExactMatrix> h; // degree n -> degree n-1
};

ExtendedComplex extended_complex(const AlgebraSpec& a, const Scalar& q,
                                 const std::vector<mpq_class>& omega, int n_max,
                                 bool restrict_to_envelope, std::size_t cap);

/// omega defaulting rule: the dual coordinate of the first basis vector with
/// a nonzero unit coefficient, scaled so omega(1l) = 1.
std::vector<mpq_class> default_omega(const AlgebraSpec& a);

} // namespace qnil
