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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "qfid/bound.hpp"
#include "qfid/channel.hpp"
#include "qfid/stabilizer.hpp"

namespace qfid {

/// Codeword selector: project a computational basis vector or a seeded random
/// vector into the code space.
struct BasisState {
    uint64_t index = 0;
};
struct RandomState {
    uint64_t seed = 0;
};
using StateSpec = std::variant<BasisState, RandomState>;

/// Recovery mode: full table lookup, or bounded-distance with radius t'.
/// In bounded mode branches whose leader weight exceeds t' still apply the
/// leader but are flagged.
struct RecoveryMode {
    bool bounded = false;
    uint32_t t_prime = 0;

    static RecoveryMode full() { return {}; }
    static RecoveryMode bounded_distance(uint32_t tp) { return {true, tp}; }
};

struct BranchRecord {
    uint32_t syndrome = 0;
    double probability = 0.0;
    double fidelity = 0.0;  // meaningful only when fidelity_defined
    bool fidelity_defined = false;
    uint32_t leader_weight = 0;
    bool ambiguous = false;
    bool beyond_radius = false;  // bounded mode: leader weight > t'
};

struct SimulationReport {
    uint32_t n = 0;
    std::vector<BranchRecord> branches;
    double average_fidelity = 0.0;
    // Bound comparisons evaluated from the channels' Pauli masses.
    double p_max = 0.0;       // max per-position non-identity mass
    double paper_epsilon = 0.0;
    double product_epsilon = 0.0;
    std::optional<double> bounded_epsilon;  // set in bounded mode
    uint32_t t_used = 0;
    /// True iff average_fidelity >= 1 - eps (slack >= -1e-9) for every
    /// applicable bound. The paper proves this, so false signals a bug.
    bool dominance_ok = false;
};

/// Project the selected seed vector by Prod_j (I + g_j)/2 and normalize.
/// Throws std::invalid_argument when the projection is numerically zero.
Eigen::VectorXcd codeword(const StabilizerCode& code, const StateSpec& spec);

/// Kraus-sum application of a single-qubit channel to qubit `pos` of an
/// n-qubit density matrix (qubit 0 is the least significant index bit).
Eigen::MatrixXcd apply_single_qubit_channel(const Eigen::MatrixXcd& rho, const Channel& ch,
                                            uint32_t pos, uint32_t n);

/// Apply one validated q=2 channel per qubit, in qubit order.
Eigen::MatrixXcd apply_product_channel(const Eigen::MatrixXcd& rho,
                                       const std::vector<Channel>& channels);

/// Complete orthogonal projector family Pi_s = Prod_j (I + (-1)^{s_j} g_j)/2,
/// indexed by syndrome value.
std::vector<Eigen::MatrixXcd> syndrome_projectors(const StabilizerCode& code);

/// F(|phi>, rho) = <phi| rho |phi>.
double fidelity(const Eigen::VectorXcd& phi, const Eigen::MatrixXcd& rho);

/// Precomputed per-code state shared across simulations: the decoding table,
/// the projector family and each leader's recovery matrix.
class SimulatorContext {
  public:
    explicit SimulatorContext(StabilizerCode code);

    const StabilizerCode& code() const { return code_; }
    const DecodingTable& table() const { return table_; }

    /// Encode -> product channel -> syndrome measurement -> recovery ->
    /// per-branch and average fidelity, with bound comparisons attached.
    SimulationReport run(const std::vector<Channel>& channels, const StateSpec& spec,
                         const RecoveryMode& mode = RecoveryMode::full()) const;

  private:
    StabilizerCode code_;
    DecodingTable table_;
    std::vector<Eigen::MatrixXcd> projectors_;
    std::vector<Eigen::MatrixXcd> recovery_;  // leader inverse per syndrome
    uint32_t t_ = 0;
};

/// One-shot convenience wrapper around SimulatorContext.
SimulationReport average_fidelity(const StabilizerCode& code,
                                  const std::vector<Channel>& channels,
                                  const StateSpec& spec,
                                  const RecoveryMode& mode = RecoveryMode::full());

}  // namespace qfid
