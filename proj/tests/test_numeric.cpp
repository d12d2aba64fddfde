#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mbqc/complex_matrix.hpp"
#include "mbqc/engine.hpp"
#include "mbqc/gates.hpp"
#include "mbqc/linalg.hpp"
#include "mbqc/rng.hpp"
#include "mbqc/state_vector.hpp"
#include "test_util.hpp"

using namespace mbqc;
using testutil::max_abs_diff;
using testutil::random_state;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;
const cplx kI{0.0, 1.0};
}

TEST_CASE("tensor product basics") {
    const auto i2 = ComplexMatrix::identity(2);
    CHECK(max_abs_diff(tensor_product(i2, i2), ComplexMatrix::identity(4)) == 0.0);

    const auto zi = tensor_product(pauli_z(), i2);
    CHECK(max_abs_diff(zi, ComplexMatrix::diagonal({1.0, 1.0, -1.0, -1.0})) == 0.0);

    // X (x) X flips both qubits: |00> column -> |11> column
    const auto xx = tensor_product(pauli_x(), pauli_x());
    ComplexMatrix col00(4, 1), col11(4, 1);
    col00.at(0, 0) = 1.0;
    col11.at(3, 0) = 1.0;
    CHECK(max_abs_diff(xx * col00, col11) == 0.0);

    CHECK_THROWS_AS(tensor_product(ComplexMatrix::identity(1 << 9), ComplexMatrix::identity(1 << 8)),
                    std::invalid_argument);
}

TEST_CASE("apply_gate basics") {
    const auto zero2 = StateVector::basis_state(2, 0);
    const auto after = apply_gate(zero2, cz_gate(), {0, 1});
    CHECK(fidelity(after, zero2) == doctest::Approx(1.0).epsilon(1e-12));

    auto plus2 = StateVector::plus_states(2);
    auto czpp = apply_gate(plus2, cz_gate(), {0, 1});
    const auto expect = StateVector::from_amplitudes(2, {0.5, 0.5, 0.5, -0.5});
    CHECK(fidelity(czpp, expect) == doctest::Approx(1.0).epsilon(1e-12));

    const auto plus = apply_gate(StateVector::basis_state(1, 0), hadamard(), {0});
    CHECK(fidelity(plus, StateVector::plus_states(1)) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(apply_gate(plus2, cz_gate(), {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(apply_gate(plus2, hadamard(), {0, 1}), std::invalid_argument);
}

TEST_CASE("apply_gate acts on the addressed qubit only") {
    // X on qubit 1 of |00> gives |10> (index 2 with LSB = qubit 0)
    const auto s = apply_gate(StateVector::basis_state(2, 0), pauli_x(), {1});
    CHECK(std::abs(s.amp(2) - cplx{1.0, 0.0}) < 1e-15);
}

TEST_CASE("schmidt of Bell and product states") {
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = StateVector::from_amplitudes(2, {r, 0.0, 0.0, r});
    const auto sd = schmidt(bell, {0});
    REQUIRE(sd.coefficients.size() == 2);
    CHECK(sd.coefficients[0] == doctest::Approx(r).epsilon(1e-12));
    CHECK(sd.coefficients[1] == doctest::Approx(r).epsilon(1e-12));

    const auto pp = schmidt(StateVector::plus_states(2), {0});
    REQUIRE(pp.coefficients.size() == 1);
    CHECK(pp.coefficients[0] == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(schmidt(bell, {}), std::invalid_argument);
    CHECK_THROWS_AS(schmidt(bell, {0, 1}), std::invalid_argument);
}

TEST_CASE("schmidt of the measured 3-chain matches the closed form") {
    // brute-force projector application on the cluster, then SVD
    for (double theta : {0.2, 0.9, 1.5707963267948966}) {
        auto cluster = build_cluster_state(3, {{0, 1}, {1, 2}});
        auto [s, p, collapsed] = measure_qubit(cluster, 1, MeasurementBasis(theta, 0.0),
                                               OutcomePolicy::postselect({0}));
        (void)s;
        (void)p;
        const auto sd = schmidt(collapsed, {0});
        const double c2 = std::cos(theta / 2.0) * std::cos(theta / 2.0);
        REQUIRE(sd.coefficients.size() >= 1);
        const double mu0 = sd.coefficients[0] * sd.coefficients[0];
        const double mu1 = sd.coefficients.size() > 1
                               ? sd.coefficients[1] * sd.coefficients[1]
                               : 0.0;
        CHECK(std::max(mu0, mu1) == doctest::Approx(std::max(c2, 1.0 - c2)).epsilon(1e-10));
        CHECK(std::min(mu0, mu1) == doctest::Approx(std::min(c2, 1.0 - c2)).epsilon(1e-10));
    }
}

TEST_CASE("schmidt reconstruction invariant") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 2 + static_cast<int>(rng.uniform_below(9));  // up to 10 qubits
        const auto state = random_state(rng, n);
        std::vector<int> left;
        for (int q = 0; q < n; ++q) {
            if (rng.bit(0.5)) left.push_back(q);
        }
        if (left.empty()) left.push_back(0);
        if (static_cast<int>(left.size()) == n) left.pop_back();

        const auto sd = schmidt(state, left);
        std::vector<int> right;
        for (int q = 0; q < n; ++q) {
            bool in_left = false;
            for (int l : left) in_left |= (l == q);
            if (!in_left) right.push_back(q);
        }
        std::vector<cplx> rebuilt(state.dim(), cplx{0.0, 0.0});
        for (std::size_t a = 0; a < sd.coefficients.size(); ++a) {
            for (std::uint64_t li = 0; li < sd.left_basis[a].dim(); ++li) {
                for (std::uint64_t ri = 0; ri < sd.right_basis[a].dim(); ++ri) {
                    std::uint64_t idx = 0;
                    for (std::size_t b = 0; b < left.size(); ++b) {
                        if (li & (std::uint64_t{1} << b)) idx |= std::uint64_t{1} << left[b];
                    }
                    for (std::size_t b = 0; b < right.size(); ++b) {
                        if (ri & (std::uint64_t{1} << b)) idx |= std::uint64_t{1} << right[b];
                    }
                    rebuilt[idx] += sd.coefficients[a] * sd.left_basis[a].amp(li) *
                                    sd.right_basis[a].amp(ri);
                }
            }
        }
        double err = 0.0;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            err = std::max(err, std::abs(rebuilt[i] - state.amp(i)));
        }
        CHECK(err < 1e-10);
    }
}

TEST_CASE("schmidt bases are orthonormal") {
    Rng rng(5);
    const auto state = random_state(rng, 6);
    const auto sd = schmidt(state, {1, 3, 4});
    for (std::size_t a = 0; a < sd.coefficients.size(); ++a) {
        for (std::size_t b = 0; b < sd.coefficients.size(); ++b) {
            const double expect = a == b ? 1.0 : 0.0;
            CHECK(std::abs(inner(sd.left_basis[a], sd.left_basis[b]) - expect) < 1e-10);
            CHECK(std::abs(inner(sd.right_basis[a], sd.right_basis[b]) - expect) < 1e-10);
        }
    }
}

TEST_CASE("entropies") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(vn_entropy({r, r}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(vn_entropy({1.0}) == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(vn_entropy({std::sqrt(0.9), std::sqrt(0.1)}) ==
          doctest::Approx(0.3250829733914482).epsilon(1e-9));

    CHECK(renyi2_entropy({r, r}) == doctest::Approx(std::log(2.0)).epsilon(1e-12));
    CHECK(renyi2_entropy({1.0}) == doctest::Approx(0.0).epsilon(1e-12));

    CHECK_THROWS_AS(vn_entropy({0.5, 0.5}), std::invalid_argument);
}

TEST_CASE("vn >= renyi2 >= 0 for random coefficient lists") {
    Rng rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int k = 1 + static_cast<int>(rng.uniform_below(6));
        std::vector<double> mu(k);
        double norm2 = 0.0;
        for (double& m : mu) {
            m = rng.uniform01() + 1e-3;
            norm2 += m * m;
        }
        for (double& m : mu) m /= std::sqrt(norm2);
        const double vn = vn_entropy(mu);
        const double r2 = renyi2_entropy(mu);
        CHECK(vn >= r2 - 1e-12);
        CHECK(r2 >= -1e-12);
    }
}

TEST_CASE("equal_up_to_scalar") {
    const auto i2 = ComplexMatrix::identity(2);
    CHECK(equal_up_to_scalar(i2, i2 * std::polar(1.0, kPi / 7.0), 1e-10));
    CHECK(equal_up_to_scalar(i2, i2 * cplx{3.0, 0.0}, 1e-10));
    CHECK_FALSE(equal_up_to_scalar(i2, pauli_x(), 1e-10));
    CHECK_THROWS_AS(equal_up_to_scalar(i2, ComplexMatrix(2, 2), 1e-10), std::invalid_argument);

    // reflexive + symmetric on random nonzero matrices
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        ComplexMatrix m(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) m.at(i, j) = cplx{rng.normal(), rng.normal()};
        CHECK(equal_up_to_scalar(m, m, 1e-10));
        const auto scaled = m * cplx{0.0, -2.5};
        CHECK(equal_up_to_scalar(m, scaled, 1e-10));
        CHECK(equal_up_to_scalar(scaled, m, 1e-10));
    }
}

TEST_CASE("matrix_sqrt_psd") {
    CHECK(max_abs_diff(matrix_sqrt_psd(ComplexMatrix::diagonal({4.0, 9.0})),
                       ComplexMatrix::diagonal({2.0, 3.0})) < 1e-12);
    CHECK(max_abs_diff(matrix_sqrt_psd(ComplexMatrix::identity(2)),
                       ComplexMatrix::identity(2)) < 1e-12);

    // POVM complement at a = 1: I - M0^dag M0 = I/2
    const auto m0 = m_povm_from_a(1.0, 0).matrix;
    const auto complement = ComplexMatrix::identity(2) - m0.adjoint() * m0;
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(max_abs_diff(matrix_sqrt_psd(complement), ComplexMatrix::diagonal({r, r})) < 1e-12);

    CHECK_THROWS_AS(matrix_sqrt_psd(pauli_x() * kI), std::invalid_argument);
    CHECK_THROWS_AS(matrix_sqrt_psd(ComplexMatrix::diagonal({-1.0, 1.0})), std::invalid_argument);
}

TEST_CASE("matrix_sqrt_psd squares back for random PSD matrices") {
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        const int n = 2 + static_cast<int>(rng.uniform_below(4));
        ComplexMatrix a(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) a.at(i, j) = cplx{rng.normal(), rng.normal()};
        const auto psd = a.adjoint() * a;
        const auto root = matrix_sqrt_psd(psd);
        CHECK(max_abs_diff(root * root, psd) < 1e-9);
        CHECK(root.is_hermitian(1e-9));
    }
}

TEST_CASE("max_eigenvalue_psd") {
    CHECK(max_eigenvalue_psd(ComplexMatrix::diagonal({1.0, 4.0})) == doctest::Approx(4.0));
    CHECK(max_eigenvalue_psd(ComplexMatrix::identity(3)) == doctest::Approx(1.0));

    const auto m0 = m_povm_from_a(2.0, 0).matrix;
    CHECK(max_eigenvalue_psd(m0.adjoint() * m0) == doctest::Approx(0.8).epsilon(1e-12));

    CHECK_THROWS_AS(max_eigenvalue_psd(hadamard() * pauli_y()), std::invalid_argument);
}

TEST_CASE("state vector contracts") {
    CHECK_THROWS_AS(StateVector::from_amplitudes(1, {1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(StateVector::from_amplitudes(2, {1.0, 0.0}), std::invalid_argument);
    const auto u = StateVector::unnormalized(1, {2.0, 0.0});
    CHECK_FALSE(u.normalized_flag());
}
