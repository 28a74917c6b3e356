#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qnil/linalg.hpp"

namespace qnil {

enum class Grading { ZGraded, ZModN };

/// Dimensions of H^(k,n) = ker(d^k) / Im(d^{N-k}) in degree n.
struct HomologyReport {
    int k = 0;
    int n = 0;
    int dim = 0;
    int kernel_dim = 0;
    int image_dim = 0;
};

struct NilpotencyReport {
    bool ok = true;
    int first_failing_degree = 0; // meaningful only when !ok
};

struct ExactnessNode {
    int level = 0;  // homology level k at the node
    int degree = 0; // degree of the node (0 in flattened Z_N checks)
    int dim = 0;
    int rank_in = 0;
    int rank_out = 0;
    bool composite_zero = true;
    bool exact = true;
};

struct ExactnessReport {
    bool ok = true;
    std::vector<ExactnessNode> nodes;
};

struct HomotopyReport {
    struct DegreeCheck {
        int n = 0;
        bool identity_ok = true; // h d - q d h = I
        bool sum_ok = true;      // sum_k d^{N-1-k} h^{N-1} d^k = [(N-1)!]_q I
        bool sum_checked = false;
    };
    std::vector<DegreeCheck> degrees;
    std::vector<HomologyReport> homology; // filled in cyclotomic mode only
    bool homology_checked = false;

    bool identity_all() const;
    bool sum_all() const;
    bool homology_vanishes() const; // every listed group has dim 0
};

/// Graded vector space with a degree-1 endomorphism d intended to satisfy
/// d^N = 0.  ZGraded complexes carry an explicit window [lo, hi]; degrees
/// outside it are zero-dimensional.  ZModN complexes wrap degrees mod N.
class NComplex {
public:
    NComplex() = default;
    static NComplex z_graded(const ScalarField* field, int N, int lo,
                             std::vector<int> dims, std::vector<ExactMatrix> d);
    static NComplex z_mod_n(const ScalarField* field, int N, std::vector<int> dims,
                            std::vector<ExactMatrix> d);

    int nilpotency_order() const { return N_; }
    Grading grading() const { return grading_; }
    int lo() const { return lo_; }
    int hi() const { return hi_; }
    const ScalarField* field() const { return field_; }

    int dim(int n) const;
    /// The matrix of d from degree n, materializing zero boundary maps.
    ExactMatrix d_matrix(int n) const;
    /// Matrix of d^k starting at degree n (k >= 0).
    ExactMatrix d_power(int n, int k) const;

    /// Whether H^(k,n) is fully determined inside the truncation window.
    bool is_determinate(int k, int n) const;

    /// ker(d^k) in degree n / Im(d^{N-k}) into degree n, as subspaces of E^n.
    SubspaceBasis kernel_at(int k, int n) const;
    SubspaceBasis image_at(int k, int n) const;

    /// Flatten a ZModN complex to one nilpotent matrix on the total space;
    /// offsets[p] is the coordinate offset of degree p.
    ExactMatrix flatten(std::vector<int>* offsets = nullptr) const;

private:
    int N_ = 2;
    Grading grading_ = Grading::ZGraded;
    int lo_ = 0, hi_ = 0;
    std::vector<int> dims_;
    std::vector<ExactMatrix> d_;
    const ScalarField* field_ = ScalarField::rationals();
};

NilpotencyReport verify_nilpotency(const NComplex& c);

/// Exact dimensions via kernel/image/quotient; throws indeterminate_error
/// outside the verifiable window and inclusion_violation if Im is not
/// contained in Ker (a broken complex).  k may be 0 or N, yielding dim 0.
HomologyReport homology(const NComplex& c, int k, int n);

/// The exact hexagon at (l, m) for a ZModN complex, checked at all six
/// nodes via composite vanishing plus the rank identity.
ExactnessReport hexagon_check(const NComplex& c, int l, int m);

/// The ZGraded splitting of the hexagon into long exact sequences, residue
/// class p; nodes whose neighbors fall outside the window are skipped.
ExactnessReport long_sequence_check(const NComplex& c, int l, int m, int p);

/// Contracting-homotopy checks for a degree -1 endomorphism h:
/// (a) h d - q d h = I per
/// degree, (b) the q-factorial summation identity, (c) vanishing of all
/// determinate homology.  Checks (b) and (c) run in cyclotomic mode only;
/// all checks are restricted to degrees >= lo_check.
HomotopyReport homotopy_vanishing_check(const NComplex& c,
                                        const std::map<int, ExactMatrix>& h,
                                        const Scalar& q, int lo_check);

struct StringSpec {
    int start_degree = 0;
    int length = 1;
};

/// Direct sum of Jordan strings (d v_i = v_{i+1}), optionally conjugated by
/// a seeded graded change of basis; seed 0 means no shuffle.  Homology is
/// analytically known, making these the oracle family for every exactness
/// check.
NComplex string_complex(const std::vector<StringSpec>& specs, int N, Grading grading,
                        const ScalarField* field, std::uint64_t shuffle_seed);

/// Analytic homology dimension of a string complex: a string of length j
/// starting at degree s contributes 1 to H^(k, s+i) exactly when
/// max(j-k, 0) <= i <= min(j, N-k) - 1.
int string_homology_dim(const std::vector<StringSpec>& specs, int N, Grading grading,
                        int k, int n);

} // namespace qnil
