#include "mbqc/complex_matrix.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mbqc {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("ComplexMatrix: entry count does not match rows*cols");
    }
    check_finite("ComplexMatrix");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) {
            throw std::invalid_argument("ComplexMatrix: ragged initializer");
        }
        entries_.insert(entries_.end(), r.begin(), r.end());
    }
    check_finite("ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::initializer_list<cplx> d) {
    ComplexMatrix m(d.size(), d.size());
    std::size_t i = 0;
    for (cplx v : d) {
        m.at(i, i) = v;
        ++i;
    }
    return m;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& rhs) const {
    if (cols_ != rhs.rows_) {
        throw std::invalid_argument("ComplexMatrix: product shape mismatch");
    }
    ComplexMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const cplx a = at(i, k);
            if (a == cplx{0.0, 0.0}) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) {
                out.at(i, j) += a * rhs.at(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("ComplexMatrix: sum shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
        throw std::invalid_argument("ComplexMatrix: difference shape mismatch");
    }
    ComplexMatrix out = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= rhs.entries_[i];
    return out;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries_) e *= s;
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = std::conj(at(i, j));
    return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix out = *this;
    for (auto& e : out.entries_) e = std::conj(e);
    return out;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    const std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i) t += at(i, i);
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& e : entries_) s += std::norm(e);
    return std::sqrt(s);
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& e : entries_) m = std::max(m, std::abs(e));
    return m;
}

bool ComplexMatrix::is_hermitian(double tol) const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = i; j < cols_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol) return false;
        }
    }
    return true;
}

bool ComplexMatrix::is_finite() const {
    for (const auto& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

void ComplexMatrix::check_finite(const char* context) const {
    if (!is_finite()) {
        throw std::invalid_argument(std::string(context) + ": non-finite entry");
    }
}

cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("frobenius_inner: shape mismatch");
    }
    cplx s = 0.0;
    const auto& ae = a.entries();
    const auto& be = b.entries();
    for (std::size_t i = 0; i < ae.size(); ++i) s += std::conj(ae[i]) * be[i];
    return s;
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t axis_cap) {
    if (a.rows() == 0 || b.rows() == 0) {
        throw std::invalid_argument("tensor_product: empty factor");
    }
    if (a.rows() * b.rows() > axis_cap || a.cols() * b.cols() > axis_cap) {
        throw std::invalid_argument("tensor_product: result exceeds axis cap");
    }
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const cplx av = a.at(i, j);
            if (av == cplx{0.0, 0.0}) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.at(i * b.rows() + k, j * b.cols() + l) = av * b.at(k, l);
                }
        }
    return out;
}

bool equal_up_to_scalar(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("equal_up_to_scalar: shape mismatch");
    }
    const double na2 = frobenius_inner(a, a).real();
    const double nb2 = frobenius_inner(b, b).real();
    if (na2 == 0.0 || nb2 == 0.0) {
        throw std::invalid_argument("equal_up_to_scalar: zero matrix");
    }
    const double overlap2 = std::norm(frobenius_inner(a, b));
    return overlap2 >= (1.0 - tol) * na2 * nb2;
}

}  // namespace mbqc
