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
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qfid {

/// An n-qubit Pauli operator in symplectic form:
///
///   operator = i^phase_exp * X(x_bits) * Z(z_bits)
///
/// with X factors to the left of Z factors. Bit i of x_bits/z_bits refers to
/// qubit i (qubit 0 is the leftmost letter of the string form). Supports up
/// to 64 qubits.
struct PauliOperator {
    uint32_t n = 0;
    uint64_t x_bits = 0;
    uint64_t z_bits = 0;
    uint8_t phase_exp = 0;  // mod 4

    static PauliOperator identity(uint32_t n) { return PauliOperator{n, 0, 0, 0}; }

    bool operator==(const PauliOperator&) const = default;
};

struct PauliParseError : std::runtime_error {
    size_t column;  // 0-based offset of the offending character
    PauliParseError(const std::string& msg, size_t col)
        : std::runtime_error(msg), column(col) {}
};

/// Parse a signed Pauli string: optional +/- followed by letters from {I,X,Y,Z}.
/// Y is stored as the x=z=1 pattern with one factor of i folded into the phase.
PauliOperator pauli_from_string(const std::string& s);

/// Inverse of pauli_from_string. The emitted string always carries an explicit
/// sign and uses Y for the x=z=1 pattern. Throws std::domain_error if the
/// overall phase after folding out the Y factors is +/-i.
std::string pauli_to_string(const PauliOperator& p);

/// Group product. Phase bookkeeping follows Z(b)X(c) = (-1)^(b.c) X(c)Z(b).
PauliOperator mul(const PauliOperator& p, const PauliOperator& q);

/// Inverse element (a Pauli is unitary, so this is the adjoint).
PauliOperator inverse(const PauliOperator& p);

/// True iff the symplectic product x_p.z_q + z_p.x_q vanishes mod 2.
bool commutes(const PauliOperator& p, const PauliOperator& q);

/// Number of positions acted on non-trivially.
uint32_t weight(const PauliOperator& p);

/// Numeric enumeration key: the 2n-bit integer (x << n) | z. Together with
/// weight this fixes the canonical enumeration order used for tie-breaking.
inline unsigned __int128 pauli_key(const PauliOperator& p) {
    return ((unsigned __int128)p.x_bits << p.n) | p.z_bits;
}

/// All phase-0 operators of the given weight, sorted by pauli_key ascending.
std::vector<PauliOperator> pauli_weight_level(uint32_t n, uint32_t w);

/// Every phase-0 operator of weight <= w exactly once, ordered by
/// (weight, pauli_key). Total count is sum_{i<=w} C(n,i)*3^i.
std::vector<PauliOperator> enumerate_up_to_weight(uint32_t n, uint32_t w);

/// Dense 2^n x 2^n matrix of i^phase X(x)Z(z). Intended for small n.
Eigen::MatrixXcd pauli_matrix(const PauliOperator& p);

}  // namespace qfid
