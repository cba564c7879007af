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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qfid {

/// Default numerical tolerance for channel validation and mass identities.
inline constexpr double kChannelTolerance = 1e-10;

/// A quantum channel on a q-dimensional system, as a Kraus set.
struct Channel {
    int q = 2;
    std::vector<Eigen::MatrixXcd> kraus;
};

struct ValidationReport {
    bool ok = false;
    double deviation = 0.0;  // max-norm of sum K^dag K - I
};

/// Trace-preservation check: ||sum_m K_m^dag K_m - I||_max <= tol.
/// Throws std::invalid_argument on dimension mismatches.
ValidationReport validate(const Channel& ch, double tol = kChannelTolerance);

/// Squared masses of the channel along the generalized Pauli basis
/// B_{ij} = C_q^i D_lambda^j, lambda = exp(2 pi i / q). For q = 2 the basis
/// is {I, sigma_x, sigma_z, sigma_x sigma_z}.
struct PauliMass {
    int q = 2;
    Eigen::MatrixXd masses;  // masses(i, j) = sum_m |Tr(B_ij^dag K_m)|^2 / q^2

    double ell0() const { return masses(0, 0); }
    double p() const { return masses.sum() - masses(0, 0); }
};

/// Hilbert-Schmidt decomposition of the Kraus set into generalized-Pauli
/// masses. Representation independent. Requires a validated channel.
PauliMass pauli_mass(const Channel& ch, double tol = kChannelTolerance);

/// The generalized Pauli C_q^i D_lambda^j.
Eigen::MatrixXcd weyl_operator(int q, int i, int j);

// Standard single-qubit fixtures.
Channel identity_channel();
Channel depolarizing_channel(double lambda);     // lambda in [0, 4/3]
Channel bit_flip_channel(double f);              // f in [0, 1]
Channel phase_damping_channel(double gamma);     // gamma in [0, 1]
Channel amplitude_damping_channel(double gamma); // gamma in [0, 1]
Channel x_rotation_channel(double theta);        // single unitary Kraus

/// Deterministic random CPTP channel with r Kraus operators on dimension q,
/// from a seeded Gaussian matrix put through a QR orthonormalization.
Channel random_channel(uint64_t seed, int r, int q = 2);

/// Deterministic Pauli conjugation channel: the single Kraus operator is the
/// 2x2 letter ('I','X','Y','Z').
Channel pauli_conjugation_channel(char letter);

/// K'_m = sum_n V(m, n) K_n for an isometry V (columns orthonormal within tol).
Channel remix(const Channel& ch, const Eigen::MatrixXcd& v, double tol = kChannelTolerance);

/// Unitary dilation on dimension q * dim_E with dim_E = max(r, 2):
/// U(|psi> (x) |0_E>) = sum_m K_m |psi> (x) |m>. Row index is s * dim_E + e.
Eigen::MatrixXcd dilation(const Channel& ch, double tol = kChannelTolerance);

/// Masses extracted from a dilation unitary: ||L_ij |0_E>||^2 for each (i,j).
/// Agrees with pauli_mass within tolerance.
Eigen::MatrixXd dilation_masses(const Channel& ch, double tol = kChannelTolerance);

// Channel JSON format: {"q": int, "kraus": [matrix...]}, each matrix a
// row-major array of [re, im] pairs. Writer uses 17 significant digits.
Channel parse_channel_json(const std::string& text);
Channel load_channel_file(const std::string& path);
std::string channel_to_json(const Channel& ch);

}  // namespace qfid
