#pragma once

#include <vector>

#include "qnil/scalar.hpp"

namespace qnil {

/// Dense matrix of Scalars over a single ScalarField, row-major.
/// Zero-row and zero-column shapes are valid and arise routinely at the
/// boundaries of truncated complexes.
class ExactMatrix {
public:
    ExactMatrix() : rows_(0), cols_(0), field_(ScalarField::rationals()) {}
    ExactMatrix(const ScalarField* field, int rows, int cols);
    static ExactMatrix identity(const ScalarField* field, int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const ScalarField* field() const { return field_; }

    Scalar& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Scalar& operator()(int i, int j) const {
        return a_[static_cast<std::size_t>(i) * cols_ + j];
    }

    bool is_zero() const;
    bool is_identity() const;

    ExactMatrix transpose() const;
    ExactMatrix scaled(const Scalar& s) const;
    /// k-th power of a square matrix, k >= 0.
    ExactMatrix power(int k) const;

    ExactMatrix column(int j) const;
    static ExactMatrix hstack(const ExactMatrix& a, const ExactMatrix& b);

    friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
    friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
    /// OpenMP-parallel product; bit-identical to multiply_serial.
    friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);
    friend bool operator!=(const ExactMatrix& a, const ExactMatrix& b) { return !(a == b); }

private:
    int rows_, cols_;
    const ScalarField* field_;
    std::vector<Scalar> a_;
};

/// Serial reference product, kept for kernel testing and benchmarking.
ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b);

/// Kronecker product; row index i1 * b.rows() + i2, matching the layout of
/// bilinear product tensors.
ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b);

} // namespace qnil
