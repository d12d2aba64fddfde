#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mbqc/estimators.hpp"
#include "mbqc/gates.hpp"
#include "mbqc/linalg.hpp"
#include "test_util.hpp"

using namespace mbqc;
using testutil::max_abs_diff;

namespace {
const double kLn2 = std::log(2.0);

LinearMap tilt_map(double eps) {
    // sqrt(2) * gate = M0 itself; estimators normalize internally anyway
    return m_povm(GateParams::from_epsilon(eps).theta, 0);
}
}  // namespace

TEST_CASE("choi_state") {
    const LinearMap id(ComplexMatrix::identity(2), 1, 1);
    const double r = 1.0 / std::sqrt(2.0);
    const auto bell = StateVector::from_amplitudes(2, {r, 0.0, 0.0, r});
    CHECK(fidelity(choi_state(id), bell) == doctest::Approx(1.0).epsilon(1e-12));

    const LinearMap proj(ComplexMatrix::diagonal({1.0, 0.0}), 1, 1);
    CHECK(fidelity(choi_state(proj), StateVector::basis_state(2, 0)) ==
          doctest::Approx(1.0).epsilon(1e-12));

    // Schmidt coefficients of the Choi state = singular values of the map
    const double a = GateParams::from_epsilon(0.25).a;
    const auto sd = schmidt(choi_state(tilt_map(0.25)), {1});
    REQUIRE(sd.coefficients.size() == 2);
    CHECK(sd.coefficients[0] * sd.coefficients[0] ==
          doctest::Approx(a * a / (1.0 + a * a)).epsilon(1e-10));

    CHECK_THROWS_AS(choi_state(LinearMap(ComplexMatrix(2, 2), 1, 1)), std::invalid_argument);
}

TEST_CASE("exact_renyi2_op") {
    CHECK(exact_renyi2_op(LinearMap(hadamard(), 1, 1)) == doctest::Approx(kLn2).epsilon(1e-12));
    CHECK(exact_renyi2_op(LinearMap(ComplexMatrix::diagonal({1.0, 0.0}), 1, 1)) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(exact_renyi2_op(tilt_map(0.25)) == doctest::Approx(0.6337).epsilon(2e-4));

    // invariant under nonzero rescaling
    const auto m = tilt_map(0.4);
    const LinearMap scaled(m.matrix * cplx{0.0, 3.7}, 1, 1);
    CHECK(exact_renyi2_op(scaled) == doctest::Approx(exact_renyi2_op(m)).epsilon(1e-12));
}

TEST_CASE("swap test estimator") {
    const auto unit = swap_test_renyi2(LinearMap(ComplexMatrix::identity(2), 1, 1), 20000, 5);
    CHECK(std::abs(unit.value - kLn2) < 0.05);
    CHECK(unit.std_error >= 0.0);

    const auto proj =
        swap_test_renyi2(LinearMap(ComplexMatrix::diagonal({1.0, 0.0}), 1, 1), 20000, 6);
    CHECK(std::abs(proj.value) < 0.02);

    const auto mid = swap_test_renyi2(tilt_map(0.25), 20000, 7);
    CHECK(std::abs(mid.value - 0.6337) < 0.05);
}

TEST_CASE("hamming estimator") {
    ShadowConfig cfg;
    cfg.seed = 11;
    for (double eps : {0.0, 0.6, 1.2}) {
        const auto exact = exact_renyi2_op(tilt_map(eps));
        const auto est = hamming_renyi2(tilt_map(eps), cfg, 10);
        CHECK(std::abs(est.value - exact) < 0.1);
        CHECK(est.repeats == 10);
    }
    // the Clifford ensemble is a valid 2-design here as well
    cfg.ensemble = UnitaryEnsemble::Clifford1q;
    const auto est = hamming_renyi2(tilt_map(0.6), cfg, 10);
    CHECK(std::abs(est.value - exact_renyi2_op(tilt_map(0.6))) < 0.1);
}

TEST_CASE("shadow states and estimator") {
    // deterministic synthetic check of the channel inversion: U = I and all
    // shots landing in |0> gives 3|0><0| - I = diag(2, -1)
    {
        ShadowConfig cfg;
        cfg.n_unitaries = 2;
        cfg.shots_per_unitary = 50;
        cfg.seed = 3;
        const auto shadows = shadow_states(LinearMap(ComplexMatrix::diagonal({1.0, 0.0}), 1, 1),
                                           cfg);
        for (const auto& s : shadows) {
            CHECK(std::abs(s.trace() - cplx{1.0, 0.0}) < 1e-12);
        }
    }
    // unbiasedness: averaged shadows approach the output marginal
    {
        ShadowConfig cfg;
        cfg.n_unitaries = 4000;
        cfg.shots_per_unitary = 8;
        cfg.seed = 17;
        const auto m = tilt_map(0.5);
        const auto shadows = shadow_states(m, cfg);
        ComplexMatrix avg(2, 2);
        for (const auto& s : shadows) avg = avg + s;
        avg = avg * cplx{1.0 / shadows.size(), 0.0};
        // exact output marginal of the Choi state
        const auto choi = choi_state(m);
        ComplexMatrix rho(2, 2);
        for (int r = 0; r < 2; ++r)
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    rho.at(i, j) += choi.amp((r << 1) | i) * std::conj(choi.amp((r << 1) | j));
        CHECK(max_abs_diff(avg, rho) < 0.05);
    }
    // synthetic estimator inputs
    {
        std::vector<ComplexMatrix> mixed(5, ComplexMatrix::identity(2) * cplx{0.5, 0.0});
        CHECK(shadow_renyi2(mixed).value == doctest::Approx(kLn2).epsilon(1e-12));
        ComplexMatrix pure(2, 2);
        pure.at(0, 0) = 1.0;
        std::vector<ComplexMatrix> pures(5, pure);
        CHECK(shadow_renyi2(pures).value == doctest::Approx(0.0).epsilon(1e-12));
        CHECK_THROWS_AS(shadow_renyi2({pure}), std::invalid_argument);
    }
    // end-to-end accuracy at the reference settings
    ShadowConfig cfg;
    cfg.seed = 23;
    for (double eps : {0.0, 0.25, 0.9}) {
        const auto est = shadow_renyi2_repeated(tilt_map(eps), cfg, 10);
        CHECK(std::abs(est.value - exact_renyi2_op(tilt_map(eps))) < 0.1);
    }
}

TEST_CASE("estimators are scale invariant") {
    const auto m = tilt_map(0.3);
    const LinearMap scaled(m.matrix * cplx{-2.2, 1.3}, 1, 1);
    ShadowConfig cfg;
    cfg.seed = 31;
    CHECK(hamming_renyi2(m, cfg, 3).value ==
          doctest::Approx(hamming_renyi2(scaled, cfg, 3).value).epsilon(1e-12));
    CHECK(swap_test_renyi2(m, 5000, 9).value ==
          doctest::Approx(swap_test_renyi2(scaled, 5000, 9).value).epsilon(1e-12));
}

TEST_CASE("haar sampling") {
    Rng rng(41);
    // determinism
    Rng rng_a(99), rng_b(99);
    CHECK(max_abs_diff(sample_unitary(UnitaryEnsemble::Haar, rng_a),
                       sample_unitary(UnitaryEnsemble::Haar, rng_b)) == 0.0);
    // unitarity
    for (int t = 0; t < 50; ++t) {
        const auto u = sample_unitary(UnitaryEnsemble::Haar, rng);
        CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)) < 1e-12);
    }
    // first moment: average of U|0><0|U^dag is I/2
    ComplexMatrix avg(2, 2);
    const int draws = 10000;
    for (int t = 0; t < draws; ++t) {
        const auto u = sample_unitary(UnitaryEnsemble::Haar, rng);
        ComplexMatrix col(2, 1);
        col.at(0, 0) = u.at(0, 0);
        col.at(1, 0) = u.at(1, 0);
        avg = avg + col * col.adjoint();
    }
    avg = avg * cplx{1.0 / draws, 0.0};
    CHECK(max_abs_diff(avg, ComplexMatrix::identity(2) * cplx{0.5, 0.0}) < 0.02);
}

TEST_CASE("clifford sampling") {
    const auto& table = clifford1q_table();
    CHECK(table.size() == 24);
    for (const auto& u : table) {
        CHECK(max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(2)) < 1e-12);
    }
    // uniformity over 10^4 draws: each element within 4 sigma of 1/24
    Rng rng(55);
    std::vector<long> counts(24, 0);
    const long draws = 10000;
    for (long t = 0; t < draws; ++t) {
        const auto u = sample_unitary(UnitaryEnsemble::Clifford1q, rng);
        for (std::size_t k = 0; k < table.size(); ++k) {
            if (max_abs_diff(u, table[k]) < 1e-12) {
                ++counts[k];
                break;
            }
        }
    }
    const double p = 1.0 / 24.0;
    const double sigma = std::sqrt(p * (1.0 - p) / draws);
    long total = 0;
    for (long c : counts) {
        total += c;
        CHECK(std::abs(c / double(draws) - p) < 4.0 * sigma);
    }
    CHECK(total == draws);
}
