// Copyright 2026 The qfid authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qfid/simulator.hpp"

#include <random>

namespace qfid {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

constexpr uint32_t kMaxQubits = 12;
constexpr double kBranchCutoff = 1e-14;

void check_cap(uint32_t n) {
    if (n > kMaxQubits) {
        throw std::invalid_argument("dense simulation capped at n <= " +
                                    std::to_string(kMaxQubits) + " qubits");
    }
}

}  // namespace

Eigen::VectorXcd codeword(const StabilizerCode& code, const StateSpec& spec) {
    check_cap(code.n());
    const Eigen::Index dim = Eigen::Index{1} << code.n();
    VectorXcd v(dim);
    if (std::holds_alternative<BasisState>(spec)) {
        uint64_t idx = std::get<BasisState>(spec).index;
        if (idx >= static_cast<uint64_t>(dim)) {
            throw std::invalid_argument("basis index out of range");
        }
        v.setZero();
        v(static_cast<Eigen::Index>(idx)) = 1.0;
    } else {
        std::mt19937_64 rng(std::get<RandomState>(spec).seed);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (Eigen::Index i = 0; i < dim; ++i) {
            double re = gauss(rng);
            double im = gauss(rng);
            v(i) = std::complex<double>(re, im);
        }
    }
    // Project onto the joint +1 eigenspace: Prod_j (I + g_j)/2.
    for (const PauliOperator& g : code.generators()) {
        v = (v + pauli_matrix(g) * v) / 2.0;
    }
    double norm = v.norm();
    if (norm < 1e-8) {
        throw std::invalid_argument("seed vector is orthogonal to the code space; "
                                    "pick another basis index or seed");
    }
    return v / norm;
}

Eigen::MatrixXcd apply_single_qubit_channel(const Eigen::MatrixXcd& rho, const Channel& ch,
                                            uint32_t pos, uint32_t n) {
    check_cap(n);
    if (ch.q != 2) throw std::invalid_argument("simulator requires q = 2 channels");
    if (pos >= n) throw std::invalid_argument("qubit position out of range");
    const Eigen::Index dim = Eigen::Index{1} << n;
    if (rho.rows() != dim || rho.cols() != dim) {
        throw std::invalid_argument("density matrix dimension mismatch");
    }
    const Eigen::Index bit = Eigen::Index{1} << pos;
    MatrixXcd out = MatrixXcd::Zero(dim, dim);
    MatrixXcd left(dim, dim);
    for (const MatrixXcd& k : ch.kraus) {
        // left = (I (x) K (x) I) rho, mixing row pairs that differ in the pos bit
        for (Eigen::Index r = 0; r < dim; ++r) {
            if (r & bit) continue;
            Eigen::Index r0 = r;
            Eigen::Index r1 = r | bit;
            left.row(r0) = k(0, 0) * rho.row(r0) + k(0, 1) * rho.row(r1);
            left.row(r1) = k(1, 0) * rho.row(r0) + k(1, 1) * rho.row(r1);
        }
        // out += left * K^dag on the column index's pos bit
        for (Eigen::Index c = 0; c < dim; ++c) {
            if (c & bit) continue;
            Eigen::Index c0 = c;
            Eigen::Index c1 = c | bit;
            out.col(c0) += left.col(c0) * std::conj(k(0, 0)) + left.col(c1) * std::conj(k(0, 1));
            out.col(c1) += left.col(c0) * std::conj(k(1, 0)) + left.col(c1) * std::conj(k(1, 1));
        }
    }
    return out;
}

Eigen::MatrixXcd apply_product_channel(const Eigen::MatrixXcd& rho,
                                       const std::vector<Channel>& channels) {
    const uint32_t n = static_cast<uint32_t>(channels.size());
    check_cap(n);
    MatrixXcd out = rho;
    for (uint32_t pos = 0; pos < n; ++pos) {
        ValidationReport rep = validate(channels[pos]);
        if (!rep.ok) {
            throw std::invalid_argument("channel at position " + std::to_string(pos) +
                                        " is not trace preserving");
        }
        out = apply_single_qubit_channel(out, channels[pos], pos, n);
    }
    return out;
}

std::vector<Eigen::MatrixXcd> syndrome_projectors(const StabilizerCode& code) {
    check_cap(code.n());
    const uint32_t r = code.n() - code.k();
    if (r > kMaxQubits) throw std::invalid_argument("too many syndromes for dense projectors");
    const Eigen::Index dim = Eigen::Index{1} << code.n();
    std::vector<MatrixXcd> gens;
    gens.reserve(r);
    for (const PauliOperator& g : code.generators()) gens.push_back(pauli_matrix(g));
    std::vector<MatrixXcd> out;
    out.reserve(size_t{1} << r);
    for (uint32_t s = 0; s < (uint32_t{1} << r); ++s) {
        MatrixXcd pi = MatrixXcd::Identity(dim, dim);
        for (uint32_t j = 0; j < r; ++j) {
            double sign = (s >> j) & 1 ? -1.0 : 1.0;
            pi = (pi + sign * (pi * gens[j])) / 2.0;
        }
        out.push_back(std::move(pi));
    }
    return out;
}

double fidelity(const Eigen::VectorXcd& phi, const Eigen::MatrixXcd& rho) {
    if (rho.rows() != phi.size() || rho.cols() != phi.size()) {
        throw std::invalid_argument("fidelity: dimension mismatch");
    }
    return (phi.adjoint() * rho * phi).value().real();
}

SimulatorContext::SimulatorContext(StabilizerCode code)
    : code_(std::move(code)), table_(decoding_table(code_)) {
    projectors_ = syndrome_projectors(code_);
    recovery_.reserve(table_.entries.size());
    for (const DecodingEntry& e : table_.entries) {
        recovery_.push_back(pauli_matrix(inverse(e.leader)));
    }
    t_ = code_params(code_, code_.n()).t;
}

SimulationReport SimulatorContext::run(const std::vector<Channel>& channels,
                                       const StateSpec& spec,
                                       const RecoveryMode& mode) const {
    if (channels.size() != code_.n()) {
        throw std::invalid_argument("need exactly one channel per qubit");
    }
    VectorXcd phi = codeword(code_, spec);
    MatrixXcd rho = phi * phi.adjoint();
    rho = apply_product_channel(rho, channels);

    SimulationReport report;
    report.n = code_.n();
    uint32_t t_used = mode.bounded ? mode.t_prime : t_;
    report.t_used = t_used;

    double avg = 0.0;
    for (size_t s = 0; s < projectors_.size(); ++s) {
        BranchRecord rec;
        rec.syndrome = static_cast<uint32_t>(s);
        rec.leader_weight = weight(table_.entries[s].leader);
        rec.ambiguous = table_.entries[s].ambiguous;
        rec.beyond_radius = mode.bounded && rec.leader_weight > mode.t_prime;
        MatrixXcd projected = projectors_[s] * rho * projectors_[s];
        rec.probability = projected.trace().real();
        if (rec.probability >= kBranchCutoff) {
            MatrixXcd recovered =
                recovery_[s] * projected * recovery_[s].adjoint() / rec.probability;
            rec.fidelity = fidelity(phi, recovered);
            rec.fidelity_defined = true;
            avg += rec.probability * rec.fidelity;
        }
        report.branches.push_back(std::move(rec));
    }
    report.average_fidelity = avg;

    // Bound comparison from the channels' Pauli masses.
    std::vector<std::pair<double, double>> ells;
    ells.reserve(channels.size());
    double p_max = 0.0;
    for (const Channel& ch : channels) {
        PauliMass pm = pauli_mass(ch);
        ells.emplace_back(pm.ell0(), pm.p());
        p_max = std::max(p_max, pm.p());
    }
    report.p_max = p_max;
    report.paper_epsilon = paper_bound(code_.n(), t_, std::min(p_max, 1.0)).epsilon;
    report.product_epsilon = product_bound(ells, t_);
    bool ok = report.average_fidelity >= 1.0 - report.product_epsilon - 1e-9 &&
              report.average_fidelity >= 1.0 - report.paper_epsilon - 1e-9;
    if (mode.bounded) {
        report.bounded_epsilon =
            bounded_distance_bound(code_.n(), mode.t_prime, std::min(p_max, 1.0)).epsilon;
        ok = report.average_fidelity >= 1.0 - *report.bounded_epsilon - 1e-9;
    }
    report.dominance_ok = ok;
    return report;
}

SimulationReport average_fidelity(const StabilizerCode& code,
                                  const std::vector<Channel>& channels,
                                  const StateSpec& spec, const RecoveryMode& mode) {
    return SimulatorContext(code).run(channels, spec, mode);
}

}  // namespace qfid
