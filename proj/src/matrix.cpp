#include "qnil/matrix.hpp"

namespace qnil {

ExactMatrix::ExactMatrix(const ScalarField* field, int rows, int cols)
    : rows_(rows), cols_(cols), field_(field),
      a_(static_cast<std::size_t>(rows) * cols, field->zero()) {
    if (rows < 0 || cols < 0) throw dimension_error("ExactMatrix: negative shape");
}

ExactMatrix ExactMatrix::identity(const ScalarField* field, int n) {
    ExactMatrix m(field, n, n);
    const Scalar one = field->one();
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
}

bool ExactMatrix::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

bool ExactMatrix::is_identity() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) {
            const Scalar& x = (*this)(i, j);
            if (i == j ? !x.is_one() : !x.is_zero()) return false;
        }
    return true;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ExactMatrix ExactMatrix::scaled(const Scalar& s) const {
    ExactMatrix m(field_, rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j) * s;
    return m;
}

ExactMatrix ExactMatrix::power(int k) const {
    if (rows_ != cols_) throw dimension_error("ExactMatrix::power: matrix not square");
    ExactMatrix acc = identity(field_, rows_);
    for (int i = 0; i < k; ++i) acc = (*this) * acc;
    return acc;
}

ExactMatrix ExactMatrix::column(int j) const {
    ExactMatrix c(field_, rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
}

ExactMatrix ExactMatrix::hstack(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.field_ != b.field_)
        throw dimension_error("ExactMatrix::hstack: incompatible shapes");
    ExactMatrix m(a.field_, a.rows_, a.cols_ + b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < a.cols_; ++j) m(i, j) = a(i, j);
        for (int j = 0; j < b.cols_; ++j) m(i, a.cols_ + j) = b(i, j);
    }
    return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
        throw dimension_error("ExactMatrix: shape mismatch in +");
    ExactMatrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] + b.a_[i];
    return m;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_)
        throw dimension_error("ExactMatrix: shape mismatch in -");
    ExactMatrix m(a.field_, a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) m.a_[i] = a.a_[i] - b.a_[i];
    return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
        throw dimension_error("ExactMatrix: shape mismatch in *");
    ExactMatrix m(a.field_, a.rows_, b.cols_);
    const long work = static_cast<long>(a.rows_) * b.cols_ * a.cols_;
#pragma omp parallel for schedule(dynamic) if (work > 4096)
    for (int i = 0; i < a.rows_; ++i) {
        for (int j = 0; j < b.cols_; ++j) {
            Scalar acc = a.field_->zero();
            for (int k = 0; k < a.cols_; ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc = acc + a(i, k) * b(k, j);
            }
            m(i, j) = acc;
        }
    }
    return m;
}

ExactMatrix multiply_serial(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows() || a.field() != b.field())
        throw dimension_error("multiply_serial: shape mismatch");
    ExactMatrix m(a.field(), a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) {
            Scalar acc = a.field()->zero();
            for (int k = 0; k < a.cols(); ++k) {
                if (a(i, k).is_zero() || b(k, j).is_zero()) continue;
                acc = acc + a(i, k) * b(k, j);
            }
            m(i, j) = acc;
        }
    return m;
}

ExactMatrix kronecker(const ExactMatrix& a, const ExactMatrix& b) {
    ExactMatrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1)
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            if (a(i1, j1).is_zero()) continue;
            for (int i2 = 0; i2 < b.rows(); ++i2)
                for (int j2 = 0; j2 < b.cols(); ++j2) {
                    if (b(i2, j2).is_zero()) continue;
                    m(i1 * b.rows() + i2, j1 * b.cols() + j2) = a(i1, j1) * b(i2, j2);
                }
        }
    return m;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || a.field_ != b.field_) return false;
    return a.a_ == b.a_;
}

} // namespace qnil
