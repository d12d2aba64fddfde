#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

namespace mbqc {

using cplx = std::complex<double>;

/// Dense complex matrix, row-major. The workhorse value type for gates,
/// Kraus operators and ZX tensors.
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(std::size_t rows, std::size_t cols);
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::initializer_list<cplx> d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return entries_.empty(); }

    cplx& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const cplx& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<cplx>& entries() const { return entries_; }
    std::vector<cplx>& entries() { return entries_; }

    ComplexMatrix operator*(const ComplexMatrix& rhs) const;
    ComplexMatrix operator+(const ComplexMatrix& rhs) const;
    ComplexMatrix operator-(const ComplexMatrix& rhs) const;
    ComplexMatrix operator*(cplx s) const;

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;

    cplx trace() const;
    double frobenius_norm() const;
    double max_abs() const;
    bool is_hermitian(double tol = 1e-10) const;
    bool is_finite() const;

    /// Throws std::invalid_argument if any entry is NaN/Inf.
    void check_finite(const char* context) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

/// Frobenius inner product <a, b> = sum conj(a_ij) b_ij.
cplx frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product; `a` indexes the high-order bits of the result.
/// Throws if either result axis would exceed `axis_cap` entries.
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t axis_cap = (std::size_t{1} << 16));

/// True iff a = z*b for some nonzero complex z, tested Cauchy-Schwarz style:
/// |<a,b>|^2 >= (1-tol) <a,a><b,b>. Throws on shape mismatch or zero input.
bool equal_up_to_scalar(const ComplexMatrix& a, const ComplexMatrix& b,
                        double tol = 1e-10);

}  // namespace mbqc
