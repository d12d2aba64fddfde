#include "mbqc/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "mbqc/gates.hpp"
#include "mbqc/linalg.hpp"

namespace mbqc {

namespace {

double mean_of(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

double sample_stddev(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = mean_of(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return std::sqrt(s / static_cast<double>(xs.size() - 1));
}

void require_single_qubit(const LinearMap& n, const char* who) {
    if (n.in_qubits != 1 || n.out_qubits != 1) {
        throw std::invalid_argument(std::string(who) + ": single-qubit map expected");
    }
}

// Reduced density matrix of the Choi state's output qubit (qubit 0).
ComplexMatrix output_marginal(const LinearMap& n) {
    const StateVector choi = choi_state(n);
    const int n_ref = n.in_qubits;
    ComplexMatrix rho(2, 2);
    for (std::uint64_t r = 0; r < (std::uint64_t{1} << n_ref); ++r) {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                rho.at(i, j) += choi.amp((r << 1) | i) * std::conj(choi.amp((r << 1) | j));
            }
    }
    return rho;
}

// P(s=0) after rotating the marginal by U: <0|U rho U^dag|0>.
double prob_zero_rotated(const ComplexMatrix& rho, const ComplexMatrix& u) {
    const ComplexMatrix rotated = u * rho * u.adjoint();
    return rotated.at(0, 0).real();
}

}  // namespace

StateVector choi_state(const LinearMap& n) {
    if (n.matrix.rows() != n.matrix.cols()) {
        throw std::invalid_argument("choi_state: map must be square");
    }
    const double fn = n.matrix.frobenius_norm();
    if (fn == 0.0) throw std::invalid_argument("choi_state: zero map");
    const int nq = n.in_qubits;
    const std::uint64_t d = std::uint64_t{1} << nq;
    std::vector<cplx> amps(d * d);
    for (std::uint64_t r = 0; r < d; ++r) {
        for (std::uint64_t o = 0; o < d; ++o) {
            amps[(r << nq) | o] = n.matrix.at(o, r) / fn;
        }
    }
    return StateVector::from_amplitudes(2 * nq, std::move(amps));
}

double exact_renyi2_op(const LinearMap& n) {
    const double fn = n.matrix.frobenius_norm();
    if (fn == 0.0) throw std::invalid_argument("exact_renyi2_op: zero map");
    auto sv = singular_values(n.matrix);
    for (double& s : sv) s /= fn;
    return renyi2_entropy(sv);
}

EstimateReport swap_test_renyi2(const LinearMap& n, long shots, std::uint64_t seed) {
    require_single_qubit(n, "swap_test_renyi2");
    if (shots < 10) throw std::invalid_argument("swap_test_renyi2: too few shots");

    // Bell measurement across the two copies' output qubits: the singlet
    // outcome carries SWAP eigenvalue -1, so Tr rho^2 = 1 - 2 P(singlet).
    const ComplexMatrix rho = output_marginal(n);
    const ComplexMatrix rho2 = tensor_product(rho, rho);
    // singlet |01>-|10> maps to |11> under CNOT(control=qubit1) then H(qubit1)
    const ComplexMatrix bell_rotation =
        tensor_product(hadamard(), ComplexMatrix::identity(2)) * cnot_gate();
    const ComplexMatrix rotated = bell_rotation * rho2 * bell_rotation.adjoint();
    const double p_singlet = std::clamp(rotated.at(3, 3).real(), 0.0, 1.0);

    Rng rng(seed);
    const int batches = 10;
    const long per_batch = shots / batches;
    std::vector<double> batch_purity;
    long singlet_total = 0;
    for (int b = 0; b < batches; ++b) {
        long count = 0;
        for (long i = 0; i < per_batch; ++i) count += rng.bit(p_singlet) ? 1 : 0;
        singlet_total += count;
        batch_purity.push_back(1.0 - 2.0 * static_cast<double>(count) /
                                         static_cast<double>(per_batch));
    }
    const double purity = 1.0 - 2.0 * static_cast<double>(singlet_total) /
                                    static_cast<double>(per_batch * batches);
    if (purity <= 0.0) {
        throw NumericalError("swap_test_renyi2: non-positive purity estimate; use more shots");
    }
    EstimateReport rep;
    rep.method = "swap_test";
    rep.value = -std::log(purity);
    // propagate the batch spread through the log
    rep.std_error = sample_stddev(batch_purity) / (purity * std::sqrt(double(batches)));
    rep.repeats = 1;
    return rep;
}

namespace {

double hamming_once(const ComplexMatrix& rho, const ShadowConfig& cfg, Rng& rng) {
    const int m_count = cfg.n_unitaries;
    const int k_count = cfg.shots_per_unitary;
    double acc = 0.0;
    for (int m = 0; m < m_count; ++m) {
        const ComplexMatrix u = sample_unitary(cfg.ensemble, rng);
        const double p0 = std::clamp(prob_zero_rotated(rho, u), 0.0, 1.0);
        long zeros = 0;
        for (int k = 0; k < k_count; ++k) zeros += rng.bit(p0) ? 1 : 0;
        const double f0 = static_cast<double>(zeros) / k_count;
        const double f1 = 1.0 - f0;
        // sum_{s,s'} (-2)^{-D(s,s')} P(s)P(s') for this unitary
        acc += f0 * f0 + f1 * f1 - f0 * f1;
    }
    const double purity = 2.0 * acc / m_count;
    if (purity <= 0.0) {
        throw NumericalError("hamming_renyi2: non-positive purity estimate");
    }
    return -std::log(purity);
}

}  // namespace

EstimateReport hamming_renyi2(const LinearMap& n, const ShadowConfig& cfg, int repeats) {
    require_single_qubit(n, "hamming_renyi2");
    if (cfg.n_unitaries < 1 || cfg.shots_per_unitary < 1 || repeats < 1) {
        throw std::invalid_argument("hamming_renyi2: bad configuration");
    }
    const ComplexMatrix rho = output_marginal(n);
    std::vector<double> values;
    for (int r = 0; r < repeats; ++r) {
        Rng rng = Rng::substream(cfg.seed, static_cast<std::uint64_t>(r));
        values.push_back(hamming_once(rho, cfg, rng));
    }
    EstimateReport rep;
    rep.method = "hamming";
    rep.value = mean_of(values);
    rep.std_error = sample_stddev(values);
    rep.repeats = repeats;
    return rep;
}

std::vector<ComplexMatrix> shadow_states(const LinearMap& n, const ShadowConfig& cfg) {
    require_single_qubit(n, "shadow_states");
    if (cfg.n_unitaries < 2) {
        throw std::invalid_argument("shadow_states: need at least two unitaries");
    }
    const ComplexMatrix rho = output_marginal(n);
    Rng rng(cfg.seed);
    std::vector<ComplexMatrix> shadows;
    shadows.reserve(cfg.n_unitaries);
    for (int m = 0; m < cfg.n_unitaries; ++m) {
        const ComplexMatrix u = sample_unitary(cfg.ensemble, rng);
        const double p0 = std::clamp(prob_zero_rotated(rho, u), 0.0, 1.0);
        long zeros = 0;
        for (int k = 0; k < cfg.shots_per_unitary; ++k) zeros += rng.bit(p0) ? 1 : 0;
        const double f0 = static_cast<double>(zeros) / cfg.shots_per_unitary;
        ComplexMatrix empirical(2, 2);
        empirical.at(0, 0) = f0;
        empirical.at(1, 1) = 1.0 - f0;
        shadows.push_back(u.adjoint() * empirical * u * cplx{3.0, 0.0} -
                          ComplexMatrix::identity(2));
    }
    return shadows;
}

EstimateReport shadow_renyi2(const std::vector<ComplexMatrix>& shadows) {
    const int m_count = static_cast<int>(shadows.size());
    if (m_count < 2) {
        throw std::invalid_argument("shadow_renyi2: need at least two shadows");
    }
    cplx acc = 0.0;
    for (int a = 0; a < m_count; ++a) {
        for (int b = 0; b < m_count; ++b) {
            if (a == b) continue;
            acc += (shadows[a] * shadows[b]).trace();
        }
    }
    const double purity = acc.real() / (static_cast<double>(m_count) * (m_count - 1));
    if (purity <= 0.0) {
        throw NumericalError("shadow_renyi2: non-positive purity estimate");
    }
    EstimateReport rep;
    rep.method = "shadow";
    rep.value = -std::log(purity);
    rep.std_error = 0.0;
    rep.repeats = 1;
    return rep;
}

EstimateReport shadow_renyi2_repeated(const LinearMap& n, const ShadowConfig& cfg, int repeats) {
    std::vector<double> values;
    for (int r = 0; r < repeats; ++r) {
        ShadowConfig sub = cfg;
        sub.seed = mix_seed(cfg.seed, static_cast<std::uint64_t>(r));
        values.push_back(shadow_renyi2(shadow_states(n, sub)).value);
    }
    EstimateReport rep;
    rep.method = "shadow";
    rep.value = mean_of(values);
    rep.std_error = sample_stddev(values);
    rep.repeats = repeats;
    return rep;
}

namespace {

ComplexMatrix haar_2x2(Rng& rng) {
    // QR of a complex Gaussian with phase-fixed R diagonal (Mezzadri)
    const cplx z00{rng.normal(), rng.normal()};
    const cplx z01{rng.normal(), rng.normal()};
    const cplx z10{rng.normal(), rng.normal()};
    const cplx z11{rng.normal(), rng.normal()};
    // Gram-Schmidt on the two columns
    const double n0 = std::sqrt(std::norm(z00) + std::norm(z10));
    cplx q00 = z00 / n0, q10 = z10 / n0;
    const cplx overlap = std::conj(q00) * z01 + std::conj(q10) * z11;
    cplx v01 = z01 - overlap * q00;
    cplx v11 = z11 - overlap * q10;
    const double n1 = std::sqrt(std::norm(v01) + std::norm(v11));
    cplx q01 = v01 / n1, q11 = v11 / n1;
    // R diagonal phases: r00 = <q_0, z_0> real positive already (n0); fix the
    // second column by the phase of r11 = <q_1, z_1>.
    const cplx r11 = std::conj(q01) * z01 + std::conj(q11) * z11;
    const cplx ph = r11 / std::abs(r11);
    q01 *= ph;
    q11 *= ph;
    return ComplexMatrix{{q00, q01}, {q10, q11}};
}

}  // namespace

const std::vector<ComplexMatrix>& clifford1q_table() {
    static const std::vector<ComplexMatrix> table = [] {
        auto canonical_key = [](const ComplexMatrix& m) {
            // fix global phase: first entry with |.| > 0.1 made real positive
            cplx ph{1.0, 0.0};
            for (const auto& e : m.entries()) {
                if (std::abs(e) > 0.1) {
                    ph = std::conj(e) / std::abs(e);
                    break;
                }
            }
            std::string key;
            for (const auto& e : m.entries()) {
                const cplx v = e * ph;
                key += std::to_string(std::lround(v.real() * 1e6)) + "," +
                       std::to_string(std::lround(v.imag() * 1e6)) + ";";
            }
            return key;
        };
        const ComplexMatrix s_gate{{1.0, 0.0}, {0.0, cplx{0.0, 1.0}}};
        std::map<std::string, ComplexMatrix> seen;
        std::vector<ComplexMatrix> frontier{ComplexMatrix::identity(2)};
        seen[canonical_key(frontier[0])] = frontier[0];
        while (!frontier.empty()) {
            std::vector<ComplexMatrix> next;
            for (const auto& g : frontier) {
                for (const ComplexMatrix* step : {&hadamard(), &s_gate}) {
                    ComplexMatrix cand = *step * g;
                    const std::string key = canonical_key(cand);
                    if (!seen.count(key)) {
                        seen[key] = cand;
                        next.push_back(std::move(cand));
                    }
                }
            }
            frontier = std::move(next);
        }
        std::vector<ComplexMatrix> out;
        for (auto& [key, m] : seen) out.push_back(m);
        if (out.size() != 24) {
            throw std::logic_error("clifford1q_table: closure is not 24 elements");
        }
        return out;
    }();
    return table;
}

ComplexMatrix sample_unitary(UnitaryEnsemble ensemble, Rng& rng) {
    if (ensemble == UnitaryEnsemble::Haar) return haar_2x2(rng);
    const auto& table = clifford1q_table();
    return table[rng.uniform_below(table.size())];
}

}  // namespace mbqc
