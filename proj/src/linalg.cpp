#include "mbqc/linalg.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "mbqc/linear_map.hpp"

namespace mbqc {

namespace {

using EMatrix = Eigen::MatrixXcd;

EMatrix to_eigen(const ComplexMatrix& m) {
    EMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m.at(i, j);
    return out;
}

ComplexMatrix from_eigen(const EMatrix& m) {
    ComplexMatrix out(m.rows(), m.cols());
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j) out.at(i, j) = m(i, j);
    return out;
}

void check_coefficients(const std::vector<double>& mu) {
    double s = 0.0;
    for (double m : mu) {
        if (m < 0.0 || !std::isfinite(m)) {
            throw std::invalid_argument("entropy: coefficients must be finite and >= 0");
        }
        s += m * m;
    }
    if (std::abs(s - 1.0) > 1e-8) {
        throw std::invalid_argument("entropy: coefficients not normalized (sum mu^2 != 1)");
    }
}

}  // namespace

LinearMap::LinearMap(ComplexMatrix m, int n_in, int n_out)
    : matrix(std::move(m)), in_qubits(n_in), out_qubits(n_out) {
    if (matrix.rows() != (std::size_t{1} << n_out) || matrix.cols() != (std::size_t{1} << n_in)) {
        throw std::invalid_argument("LinearMap: matrix shape does not match qubit counts");
    }
}

StateVector LinearMap::apply(const StateVector& psi) const {
    if (psi.n_qubits() != in_qubits) {
        throw std::invalid_argument("LinearMap: input qubit count mismatch");
    }
    std::vector<cplx> out(matrix.rows(), cplx{0.0, 0.0});
    for (std::size_t r = 0; r < matrix.rows(); ++r) {
        cplx acc = 0.0;
        for (std::size_t c = 0; c < matrix.cols(); ++c) acc += matrix.at(r, c) * psi.amp(c);
        out[r] = acc;
    }
    return StateVector::unnormalized(out_qubits, std::move(out));
}

LinearMap operator*(const LinearMap& a, const LinearMap& b) {
    if (a.in_qubits != b.out_qubits) {
        throw std::invalid_argument("LinearMap: composition qubit mismatch");
    }
    return LinearMap(a.matrix * b.matrix, b.in_qubits, a.out_qubits);
}

SchmidtData schmidt(const StateVector& state, const std::vector<int>& left_qubits,
                    double cutoff) {
    const int n = state.n_qubits();
    std::uint64_t left_mask = 0;
    for (int q : left_qubits) {
        if (q < 0 || q >= n) throw std::invalid_argument("schmidt: qubit out of range");
        left_mask |= std::uint64_t{1} << q;
    }
    const int nl = static_cast<int>(left_qubits.size());
    if (nl == 0 || nl == n) {
        throw std::invalid_argument("schmidt: partition must be proper and nonempty");
    }
    const int nr = n - nl;

    // row bits = left qubits ascending, column bits = right qubits ascending
    std::vector<int> left_sorted, right_sorted;
    for (int q = 0; q < n; ++q) {
        if (left_mask & (std::uint64_t{1} << q)) left_sorted.push_back(q);
        else right_sorted.push_back(q);
    }
    EMatrix a(std::int64_t{1} << nl, std::int64_t{1} << nr);
    for (std::uint64_t idx = 0; idx < state.dim(); ++idx) {
        std::uint64_t row = 0, col = 0;
        for (int b = 0; b < nl; ++b)
            if (idx & (std::uint64_t{1} << left_sorted[b])) row |= std::uint64_t{1} << b;
        for (int b = 0; b < nr; ++b)
            if (idx & (std::uint64_t{1} << right_sorted[b])) col |= std::uint64_t{1} << b;
        a(row, col) = state.amp(idx);
    }

    Eigen::JacobiSVD<EMatrix> svd(a, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SchmidtData out;
    const auto& sv = svd.singularValues();
    for (Eigen::Index k = 0; k < sv.size(); ++k) {
        if (sv(k) < cutoff) break;  // non-increasing
        out.coefficients.push_back(sv(k));
        std::vector<cplx> lv(std::size_t{1} << nl), rv(std::size_t{1} << nr);
        for (Eigen::Index i = 0; i < svd.matrixU().rows(); ++i) lv[i] = svd.matrixU()(i, k);
        for (Eigen::Index i = 0; i < svd.matrixV().rows(); ++i) rv[i] = std::conj(svd.matrixV()(i, k));
        out.left_basis.push_back(StateVector::from_amplitudes(nl, std::move(lv)));
        out.right_basis.push_back(StateVector::from_amplitudes(nr, std::move(rv)));
    }
    return out;
}

std::vector<double> singular_values(const ComplexMatrix& m) {
    Eigen::JacobiSVD<EMatrix> svd(to_eigen(m));
    std::vector<double> out(svd.singularValues().data(),
                            svd.singularValues().data() + svd.singularValues().size());
    return out;
}

double vn_entropy(const std::vector<double>& coefficients) {
    check_coefficients(coefficients);
    double s = 0.0;
    for (double mu : coefficients) {
        const double p = mu * mu;
        if (p > 0.0) s -= p * std::log(p);
    }
    return s;
}

double renyi2_entropy(const std::vector<double>& coefficients) {
    check_coefficients(coefficients);
    double s = 0.0;
    for (double mu : coefficients) s += mu * mu * mu * mu;
    return -std::log(s);
}

ComplexMatrix matrix_sqrt_psd(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-10)) {
        throw std::invalid_argument("matrix_sqrt_psd: matrix not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(m));
    Eigen::VectorXd ev = es.eigenvalues();
    for (Eigen::Index i = 0; i < ev.size(); ++i) {
        if (ev(i) < -1e-8) {
            throw std::invalid_argument("matrix_sqrt_psd: matrix not PSD");
        }
        ev(i) = ev(i) > 0.0 ? std::sqrt(ev(i)) : 0.0;
    }
    EMatrix root = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
    return from_eigen(root);
}

double max_eigenvalue_psd(const ComplexMatrix& m) {
    if (!m.is_hermitian(1e-10)) {
        throw std::invalid_argument("max_eigenvalue_psd: matrix not Hermitian");
    }
    Eigen::SelfAdjointEigenSolver<EMatrix> es(to_eigen(m), Eigen::EigenvaluesOnly);
    return es.eigenvalues().maxCoeff();
}

}  // namespace mbqc
