#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "mbqc/engine.hpp"
#include "mbqc/fixtures.hpp"
#include "mbqc/gates.hpp"
#include "mbqc/linalg.hpp"
#include "test_util.hpp"

using namespace mbqc;
using testutil::max_abs_diff;
using testutil::oracle_run;
using testutil::random_pattern;
using testutil::random_state;

namespace {
constexpr double kPi = 3.141592653589793238462643383279;

double expectation_sign(const StateVector& s, const ComplexMatrix& op,
                        std::initializer_list<int> targets) {
    const auto applied = apply_gate(s, op, targets);
    return inner(s, applied).real();
}
}  // namespace

TEST_CASE("cluster states") {
    const auto plus = build_cluster_state(1, {});
    CHECK(fidelity(plus, StateVector::plus_states(1)) == doctest::Approx(1.0).epsilon(1e-12));

    // 2-chain: CZ|++> = (|0+> + |1->)/sqrt(2)
    const auto two = build_cluster_state(2, {{0, 1}});
    const double h = 0.5;
    const auto expect = StateVector::from_amplitudes(2, {h, h, h, -h});
    CHECK(fidelity(two, expect) == doctest::Approx(1.0).epsilon(1e-12));

    // 3-chain stabilizers X1 Z2, Z1 X2 Z3, Z2 X3 (node k at qubit k)
    const auto c3 = build_cluster_state(3, {{0, 1}, {1, 2}});
    const auto x = pauli_x();
    const auto z = pauli_z();
    auto s1 = apply_gate(apply_gate(c3, x, {0}), z, {1});
    CHECK(inner(c3, s1).real() == doctest::Approx(1.0).epsilon(1e-10));
    auto s2 = apply_gate(apply_gate(apply_gate(c3, z, {0}), x, {1}), z, {2});
    CHECK(inner(c3, s2).real() == doctest::Approx(1.0).epsilon(1e-10));
    auto s3 = apply_gate(apply_gate(c3, z, {1}), x, {2});
    CHECK(inner(c3, s3).real() == doctest::Approx(1.0).epsilon(1e-10));

    CHECK_THROWS_AS(build_cluster_state(20, {}), std::invalid_argument);
}

TEST_CASE("inject_input") {
    // degenerate single-node pattern: injection returns the input itself
    MeasurementPattern degenerate({NodeRole::Input}, {}, {{0, MeasurementBasis::x()}});
    Rng rng(2);
    const auto psi = random_state(rng, 1);
    CHECK(fidelity(inject_input(psi, degenerate), psi) == doctest::Approx(1.0).epsilon(1e-12));

    // |+> into the 3-chain gives the plain cluster state
    const auto chain = fig1d_pattern(0.0);
    const auto injected = inject_input(StateVector::plus_states(1), chain);
    const auto cluster = build_cluster_state(3, {{0, 1}, {1, 2}});
    CHECK(fidelity(injected, cluster) == doctest::Approx(1.0).epsilon(1e-12));

    // |0> into the 2-chain: CZ acts trivially on a |0> control
    MeasurementPattern two({NodeRole::Input, NodeRole::Output}, {{0, 1}},
                           {{0, MeasurementBasis::x()}});
    const auto inj = inject_input(StateVector::basis_state(1, 0), two);
    const auto expect = tensor_states(StateVector::basis_state(1, 0), StateVector::plus_states(1));
    CHECK(fidelity(inj, expect) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(inject_input(StateVector::plus_states(2), two), std::invalid_argument);
}

TEST_CASE("measure_qubit basics") {
    // |+> measured along X always gives s=0
    auto [s, p, rest] = measure_qubit(StateVector::plus_states(1), 0, MeasurementBasis::x(),
                                      OutcomePolicy::postselect({0}));
    CHECK(s == 0);
    CHECK(p == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(rest.n_qubits() == 0);

    // middle of the 3-chain along Z: p = 1/2, remainder |++>
    const auto c3 = build_cluster_state(3, {{0, 1}, {1, 2}});
    auto [sz, pz, plus2] =
        measure_qubit(c3, 1, MeasurementBasis::z(), OutcomePolicy::postselect({0}));
    CHECK(sz == 0);
    CHECK(pz == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(plus2, StateVector::plus_states(2)) == doctest::Approx(1.0).epsilon(1e-12));

    // middle along X: Bell state between the ends
    auto [sx, px, bell] =
        measure_qubit(c3, 1, MeasurementBasis::x(), OutcomePolicy::postselect({0}));
    (void)sx;
    (void)px;
    const double r = 1.0 / std::sqrt(2.0);
    const auto expect = StateVector::from_amplitudes(2, {r, 0.0, 0.0, r});
    CHECK(fidelity(bell, expect) == doctest::Approx(1.0).epsilon(1e-12));

    // impossible branch: |+> postselected onto the -1 eigenstate of X
    CHECK_THROWS_AS(measure_qubit(StateVector::plus_states(1), 0, MeasurementBasis::x(),
                                  OutcomePolicy::postselect({1})),
                    std::runtime_error);
}

TEST_CASE("entanglement of the measured 3-chain vs the binary-entropy law") {
    for (double theta : {0.1, 0.5, 1.0, kPi / 2, 2.2, 3.0}) {
        for (int s : {0, 1}) {
            const auto c3 = build_cluster_state(3, {{0, 1}, {1, 2}});
            auto [bit, p, rest] =
                measure_qubit(c3, 1, MeasurementBasis(theta, 0.7), OutcomePolicy::postselect({s}));
            (void)bit;
            (void)p;
            const auto sd = schmidt(rest, {0});
            const double prob = std::sin(theta / 2.0) * std::sin(theta / 2.0);
            const double expect =
                (prob > 0.0 && prob < 1.0)
                    ? -prob * std::log(prob) - (1.0 - prob) * std::log(1.0 - prob)
                    : 0.0;
            CHECK(vn_entropy(sd.coefficients) == doctest::Approx(expect).epsilon(1e-10));
        }
    }
}

TEST_CASE("teleportation identity through the 3-chain") {
    MeasurementPattern pattern(
        {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
        {{0, MeasurementBasis::x()}, {1, MeasurementBasis::x()}});
    Rng rng(4);
    for (int t = 0; t < 5; ++t) {
        const auto psi = random_state(rng, 1);
        const auto rec = run_pattern(pattern, psi, OutcomePolicy::postselect({0, 0}));
        CHECK(rec.joint_probability == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(fidelity(rec.output_state, psi) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("run_pattern matches the tilt gate on |+>") {
    const double eps = 0.25;
    const auto pattern = fig1d_pattern(eps);
    const auto rec =
        run_pattern(pattern, StateVector::plus_states(1), OutcomePolicy::postselect({0, 0}));
    const auto gate = gate_fig1d(eps, 0, 0);
    auto expected = gate.apply(StateVector::plus_states(1));
    double w = 0.0;
    for (const auto& a : expected.amplitudes()) w += std::norm(a);
    CHECK(rec.joint_probability == doctest::Approx(w).epsilon(1e-12));
    expected.renormalize();
    CHECK(fidelity(rec.output_state, expected) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("run_pattern is reproducible under a fixed seed") {
    const auto pattern = fig1c_pattern(0.4);
    Rng rng(9);
    const auto psi = random_state(rng, 1);
    const auto a = run_pattern(pattern, psi, OutcomePolicy::sample(1234));
    const auto b = run_pattern(pattern, psi, OutcomePolicy::sample(1234));
    CHECK(a.outcomes == b.outcomes);
    CHECK(a.joint_probability == b.joint_probability);
    CHECK(fidelity(a.output_state, b.output_state) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("run_pattern agrees with the full-projector oracle") {
    Rng rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const auto pattern = random_pattern(rng, 6);
        const auto psi = random_state(rng, pattern.n_inputs());
        const auto sampled = run_pattern(pattern, psi, OutcomePolicy::sample(rng.next_u64()));
        const auto oracle = oracle_run(pattern, psi, sampled.outcomes);
        CHECK(sampled.joint_probability == doctest::Approx(oracle.probability).epsilon(1e-9));
        auto oracle_state = StateVector::unnormalized(pattern.n_outputs(), oracle.output_amps);
        oracle_state.renormalize();
        CHECK(fidelity(sampled.output_state, oracle_state) ==
              doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("extract_kraus reproduces the closed-form gates") {
    for (double eps : {0.0, 0.3, 1.1}) {
        for (int s1 : {0, 1}) {
            for (int s2 : {0, 1}) {
                const auto kc = extract_kraus(fig1c_pattern(eps), {s1, s2});
                CHECK(equal_up_to_scalar(kc.matrix, gate_fig1c(eps, s1, s2).matrix, 1e-10));
                const auto kd = extract_kraus(fig1d_pattern(eps), {s1, s2});
                CHECK(equal_up_to_scalar(kd.matrix, gate_fig1d(eps, s1, s2).matrix, 1e-10));
            }
        }
    }
}

TEST_CASE("teleportation Kraus is the identity up to scalar") {
    MeasurementPattern pattern(
        {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
        {{0, MeasurementBasis::x()}, {1, MeasurementBasis::x()}});
    const auto k = extract_kraus(pattern, {0, 0});
    CHECK(equal_up_to_scalar(k.matrix, ComplexMatrix::identity(2), 1e-12));
    CHECK(max_abs_diff(k.matrix, ComplexMatrix::identity(2) * cplx{0.5, 0.0}) < 1e-12);
}

TEST_CASE("POVM completeness for random patterns") {
    Rng rng(33);
    for (int trial = 0; trial < 12; ++trial) {
        const auto pattern = random_pattern(rng, 7);
        const int m = pattern.n_measured();
        const std::size_t dim = std::size_t{1} << pattern.n_inputs();
        ComplexMatrix sum(dim, dim);
        for (int bits = 0; bits < (1 << m); ++bits) {
            std::vector<int> outcomes(m);
            for (int b = 0; b < m; ++b) outcomes[b] = (bits >> b) & 1;
            const auto k = extract_kraus(pattern, outcomes);
            sum = sum + k.matrix.adjoint() * k.matrix;
        }
        CHECK(max_abs_diff(sum, ComplexMatrix::identity(dim)) < 1e-10);
    }
}

TEST_CASE("sampled outcome frequencies match Born probabilities") {
    const auto pattern = fig1d_pattern(0.4);
    Rng rng(50);
    const auto psi = random_state(rng, 1);

    double expected[4];
    for (int bits = 0; bits < 4; ++bits) {
        const auto k = extract_kraus(pattern, {bits & 1, (bits >> 1) & 1});
        const auto applied = k.apply(psi);
        double w = 0.0;
        for (const auto& a : applied.amplitudes()) w += std::norm(a);
        expected[bits] = w;
    }

    const long runs = 100000;
    long counts[4] = {0, 0, 0, 0};
    for (long i = 0; i < runs; ++i) {
        const auto rec = run_pattern(pattern, psi, OutcomePolicy::sample(mix_seed(77, i)));
        counts[rec.outcomes[0] | (rec.outcomes[1] << 1)]++;
    }
    for (int bits = 0; bits < 4; ++bits) {
        const double p = expected[bits];
        const double sigma = std::sqrt(p * (1.0 - p) / runs);
        CHECK(std::abs(counts[bits] / double(runs) - p) < 4.0 * sigma + 1e-12);
    }
}

TEST_CASE("operator_from_choi agrees with extract_kraus") {
    Rng rng(60);
    int done = 0;
    while (done < 50) {
        const auto pattern = random_pattern(rng, 6);
        if (pattern.n_inputs() == 0) continue;
        const auto sampled = run_pattern(pattern, random_state(rng, pattern.n_inputs()),
                                         OutcomePolicy::sample(rng.next_u64()));
        const auto k = extract_kraus(pattern, sampled.outcomes);
        if (k.matrix.frobenius_norm() < 1e-7) continue;
        const auto [n, sd] = operator_from_choi(pattern, sampled.outcomes);
        CHECK(equal_up_to_scalar(n.matrix, k.matrix, 1e-9));
        CHECK(n.matrix.frobenius_norm() == doctest::Approx(1.0).epsilon(1e-10));
        // Schmidt coefficients match the singular values of the map
        const auto sv = singular_values(n.matrix);
        REQUIRE(sd.coefficients.size() <= sv.size());
        for (std::size_t i = 0; i < sd.coefficients.size(); ++i) {
            CHECK(sd.coefficients[i] == doctest::Approx(sv[i]).epsilon(1e-9));
        }
        ++done;
    }
}

TEST_CASE("choi route: tilt gate spectra and outcome independence") {
    // unitary at eps = 0
    {
        const auto [n, sd] = operator_from_choi(fig1d_pattern(0.0), {0, 0});
        CHECK(equal_up_to_scalar(n.matrix, ComplexMatrix::identity(2), 1e-10));
        REQUIRE(sd.coefficients.size() == 2);
        CHECK(sd.coefficients[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
    }
    // eps = 0.25: mu^2 = (a^2, 1)/(1+a^2)
    {
        const double a = GateParams::from_epsilon(0.25).a;
        CHECK(a == doctest::Approx(1.287424).epsilon(1e-6));
        const auto [n, sd] = operator_from_choi(fig1d_pattern(0.25), {0, 0});
        (void)n;
        REQUIRE(sd.coefficients.size() == 2);
        CHECK(sd.coefficients[0] * sd.coefficients[0] ==
              doctest::Approx(a * a / (1.0 + a * a)).epsilon(1e-10));
    }
    // operator entanglement is outcome independent: H(sin^2(theta/2))
    for (double theta : {0.3, 1.2}) {
        MeasurementPattern chain(
            {NodeRole::Input, NodeRole::Middle, NodeRole::Output}, {{0, 1}, {1, 2}},
            {{0, MeasurementBasis::x()}, {1, MeasurementBasis(theta, 0.0)}});
        const double p = std::sin(theta / 2.0) * std::sin(theta / 2.0);
        const double expect = -p * std::log(p) - (1.0 - p) * std::log(1.0 - p);
        for (int s1 : {0, 1}) {
            for (int s2 : {0, 1}) {
                const auto [n, sd] = operator_from_choi(chain, {s1, s2});
                (void)n;
                CHECK(vn_entropy(sd.coefficients) == doctest::Approx(expect).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("duality: pattern output equals the induced map applied to the input") {
    Rng rng(71);
    int done = 0;
    while (done < 40) {
        const auto pattern = random_pattern(rng, 6);
        if (pattern.n_inputs() == 0) continue;
        const auto psi = random_state(rng, pattern.n_inputs());
        const auto rec = run_pattern(pattern, psi, OutcomePolicy::sample(rng.next_u64()));
        const auto [n, sd] = operator_from_choi(pattern, rec.outcomes);
        (void)sd;
        auto mapped = n.apply(psi);
        if (mapped.norm() < 1e-7) continue;
        mapped.renormalize();
        CHECK(fidelity(rec.output_state, mapped) >= 1.0 - 1e-10);
        ++done;
    }
}

TEST_CASE("measurement order does not change the Kraus operator") {
    const auto base = fig1c_pattern(0.6);
    const auto reversed = base.with_order({1, 0});
    for (int bits = 0; bits < 4; ++bits) {
        // outcome strings are order-aligned, so permute them alongside
        const int s0 = bits & 1, s1 = (bits >> 1) & 1;
        const auto k1 = extract_kraus(base, {s0, s1});
        const auto k2 = extract_kraus(reversed, {s1, s0});
        if (k1.matrix.frobenius_norm() < 1e-12) continue;
        CHECK(equal_up_to_scalar(k1.matrix, k2.matrix, 1e-10));
    }
}

TEST_CASE("flipping the measured qubit does not undo an undesired outcome") {
    // the two postselected branches of the tilted middle measurement are
    // genuinely different logical states
    const auto c3 = build_cluster_state(3, {{0, 1}, {1, 2}});
    const MeasurementBasis basis(kPi / 4.0, 0.0);
    auto [s0, p0, branch0] = measure_qubit(c3, 1, basis, OutcomePolicy::postselect({0}));
    auto [s1, p1, branch1] = measure_qubit(c3, 1, basis, OutcomePolicy::postselect({1}));
    (void)s0;
    (void)p0;
    (void)s1;
    (void)p1;
    CHECK(fidelity(branch0, branch1) < 1.0 - 1e-3);
}

TEST_CASE("zero-probability postselection is reported") {
    // disconnected input stays |+>, so its X measurement cannot give 1
    MeasurementPattern pattern({NodeRole::Input, NodeRole::Output}, {},
                               {{0, MeasurementBasis::x()}});
    CHECK_THROWS_AS(
        run_pattern(pattern, StateVector::plus_states(1), OutcomePolicy::postselect({1})),
        std::runtime_error);
}
