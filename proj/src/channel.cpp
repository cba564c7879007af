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

#include "qfid/channel.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qfid {

namespace {

using Eigen::MatrixXcd;
using std::complex;

void check_dimensions(const Channel& ch) {
    if (ch.q < 2) throw std::invalid_argument("channel dimension q must be >= 2");
    if (ch.kraus.empty()) throw std::invalid_argument("channel has no Kraus operators");
    for (size_t m = 0; m < ch.kraus.size(); ++m) {
        if (ch.kraus[m].rows() != ch.q || ch.kraus[m].cols() != ch.q) {
            throw std::invalid_argument("Kraus operator " + std::to_string(m) +
                                        " is not " + std::to_string(ch.q) + "x" +
                                        std::to_string(ch.q));
        }
    }
}

MatrixXcd sigma_x2() {
    MatrixXcd m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

MatrixXcd sigma_y2() {
    MatrixXcd m(2, 2);
    m << 0, complex<double>(0, -1), complex<double>(0, 1), 0;
    return m;
}

MatrixXcd sigma_z2() {
    MatrixXcd m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

}  // namespace

ValidationReport validate(const Channel& ch, double tol) {
    check_dimensions(ch);
    MatrixXcd acc = MatrixXcd::Zero(ch.q, ch.q);
    for (const auto& k : ch.kraus) acc += k.adjoint() * k;
    acc -= MatrixXcd::Identity(ch.q, ch.q);
    double dev = acc.cwiseAbs().maxCoeff();
    return ValidationReport{dev <= tol, dev};
}

Eigen::MatrixXcd weyl_operator(int q, int i, int j) {
    using std::numbers::pi;
    MatrixXcd m = MatrixXcd::Zero(q, q);
    // C^i D^j |a> = lambda^(j a) |a + i mod q>
    for (int a = 0; a < q; ++a) {
        m((a + i) % q, a) = std::polar(1.0, 2.0 * pi * j * a / q);
    }
    return m;
}

PauliMass pauli_mass(const Channel& ch, double tol) {
    ValidationReport rep = validate(ch, tol);
    if (!rep.ok) {
        throw std::invalid_argument("pauli_mass requires a trace-preserving channel "
                                    "(deviation " + std::to_string(rep.deviation) + ")");
    }
    PauliMass pm;
    pm.q = ch.q;
    pm.masses = Eigen::MatrixXd::Zero(ch.q, ch.q);
    for (int i = 0; i < ch.q; ++i) {
        for (int j = 0; j < ch.q; ++j) {
            MatrixXcd b = weyl_operator(ch.q, i, j).adjoint();
            for (const auto& k : ch.kraus) {
                complex<double> c = (b * k).trace() / static_cast<double>(ch.q);
                pm.masses(i, j) += std::norm(c);
            }
        }
    }
    return pm;
}

Channel identity_channel() {
    return Channel{2, {MatrixXcd::Identity(2, 2)}};
}

Channel depolarizing_channel(double lambda) {
    if (lambda < 0 || lambda > 4.0 / 3.0) {
        throw std::invalid_argument("depolarizing parameter outside [0, 4/3]");
    }
    return Channel{2,
                   {std::sqrt(1 - 3 * lambda / 4) * MatrixXcd::Identity(2, 2),
                    std::sqrt(lambda / 4) * sigma_x2(),
                    std::sqrt(lambda / 4) * sigma_y2(),
                    std::sqrt(lambda / 4) * sigma_z2()}};
}

Channel bit_flip_channel(double f) {
    if (f < 0 || f > 1) throw std::invalid_argument("bit-flip parameter outside [0, 1]");
    return Channel{2,
                   {std::sqrt(1 - f) * MatrixXcd::Identity(2, 2),
                    std::sqrt(f) * sigma_x2()}};
}

Channel phase_damping_channel(double gamma) {
    if (gamma < 0 || gamma > 1) throw std::invalid_argument("phase damping gamma outside [0, 1]");
    MatrixXcd k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, 0, 0, std::sqrt(gamma);
    return Channel{2, {k0, k1}};
}

Channel amplitude_damping_channel(double gamma) {
    if (gamma < 0 || gamma > 1) throw std::invalid_argument("amplitude damping gamma outside [0, 1]");
    MatrixXcd k0(2, 2), k1(2, 2);
    k0 << 1, 0, 0, std::sqrt(1 - gamma);
    k1 << 0, std::sqrt(gamma), 0, 0;
    return Channel{2, {k0, k1}};
}

Channel x_rotation_channel(double theta) {
    MatrixXcd k = std::cos(theta) * MatrixXcd::Identity(2, 2) +
                  complex<double>(0, 1) * std::sin(theta) * sigma_x2();
    return Channel{2, {k}};
}

Channel random_channel(uint64_t seed, int r, int q) {
    if (r < 1) throw std::invalid_argument("random channel needs r >= 1 Kraus operators");
    if (q < 2) throw std::invalid_argument("random channel needs q >= 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    MatrixXcd a(q * r, q);
    for (int row = 0; row < q * r; ++row) {
        for (int col = 0; col < q; ++col) {
            double re = gauss(rng);
            double im = gauss(rng);
            a(row, col) = complex<double>(re, im);
        }
    }
    // Thin QR: the first q columns of Q form a random isometry H_q -> H_q (x) H_r.
    Eigen::HouseholderQR<MatrixXcd> qr(a);
    MatrixXcd iso = qr.householderQ() * MatrixXcd::Identity(q * r, q);
    Channel ch;
    ch.q = q;
    for (int m = 0; m < r; ++m) ch.kraus.push_back(iso.middleRows(m * q, q));
    return ch;
}

Channel pauli_conjugation_channel(char letter) {
    switch (letter) {
        case 'I': return identity_channel();
        case 'X': return Channel{2, {sigma_x2()}};
        case 'Y': return Channel{2, {sigma_y2()}};
        case 'Z': return Channel{2, {sigma_z2()}};
        default: throw std::invalid_argument(std::string("unknown Pauli letter '") + letter + "'");
    }
}

Channel remix(const Channel& ch, const Eigen::MatrixXcd& v, double tol) {
    check_dimensions(ch);
    if (v.cols() != static_cast<Eigen::Index>(ch.kraus.size())) {
        throw std::invalid_argument("remix: isometry column count must equal Kraus count");
    }
    MatrixXcd gram = v.adjoint() * v - MatrixXcd::Identity(v.cols(), v.cols());
    if (gram.cwiseAbs().maxCoeff() > tol) {
        throw std::invalid_argument("remix: columns of V are not orthonormal");
    }
    Channel out;
    out.q = ch.q;
    for (Eigen::Index m = 0; m < v.rows(); ++m) {
        MatrixXcd k = MatrixXcd::Zero(ch.q, ch.q);
        for (Eigen::Index n = 0; n < v.cols(); ++n) k += v(m, n) * ch.kraus[n];
        out.kraus.push_back(std::move(k));
    }
    return out;
}

Eigen::MatrixXcd dilation(const Channel& ch, double tol) {
    ValidationReport rep = validate(ch, tol);
    if (!rep.ok) {
        throw std::invalid_argument("dilation requires a trace-preserving channel");
    }
    const int q = ch.q;
    const int dim_e = std::max<int>(static_cast<int>(ch.kraus.size()), 2);
    const int dim = q * dim_e;
    MatrixXcd u = MatrixXcd::Zero(dim, dim);
    // Column (s, e=0): U(|s> (x) |0_E>) = sum_m K_m |s> (x) |m>.
    for (int s = 0; s < q; ++s) {
        for (size_t m = 0; m < ch.kraus.size(); ++m) {
            for (int sp = 0; sp < q; ++sp) {
                u(sp * dim_e + static_cast<int>(m), s * dim_e) = ch.kraus[m](sp, s);
            }
        }
    }
    // Complete the remaining columns by Gram-Schmidt against standard basis
    // candidates; the q seeded columns are already orthonormal.
    std::vector<int> free_cols;
    for (int s = 0; s < q; ++s) {
        for (int e = 1; e < dim_e; ++e) free_cols.push_back(s * dim_e + e);
    }
    std::vector<int> done_cols;
    for (int s = 0; s < q; ++s) done_cols.push_back(s * dim_e);
    size_t next_free = 0;
    for (int cand = 0; cand < dim && next_free < free_cols.size(); ++cand) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(dim);
        v(cand) = 1.0;
        for (int c : done_cols) v -= u.col(c).dot(v) * u.col(c);
        // second pass stabilizes near-dependent candidates
        for (int c : done_cols) v -= u.col(c).dot(v) * u.col(c);
        double norm = v.norm();
        if (norm < 1e-6) continue;
        int col = free_cols[next_free++];
        u.col(col) = v / norm;
        done_cols.push_back(col);
    }
    if (next_free != free_cols.size()) {
        throw std::logic_error("dilation completion failed");
    }
    return u;
}

Eigen::MatrixXd dilation_masses(const Channel& ch, double tol) {
    const int q = ch.q;
    MatrixXcd u = dilation(ch, tol);
    const int dim_e = static_cast<int>(u.rows()) / q;
    Eigen::MatrixXd masses = Eigen::MatrixXd::Zero(q, q);
    for (int i = 0; i < q; ++i) {
        for (int j = 0; j < q; ++j) {
            MatrixXcd b = weyl_operator(q, i, j);
            // L_ij(e, f) = (1/q) sum_{s,s'} conj(B(s', s)) U[(s', e), (s, f)]
            Eigen::VectorXcd l_col0 = Eigen::VectorXcd::Zero(dim_e);
            for (int e = 0; e < dim_e; ++e) {
                complex<double> acc = 0;
                for (int s = 0; s < q; ++s) {
                    for (int sp = 0; sp < q; ++sp) {
                        acc += std::conj(b(sp, s)) * u(sp * dim_e + e, s * dim_e);
                    }
                }
                l_col0(e) = acc / static_cast<double>(q);
            }
            masses(i, j) = l_col0.squaredNorm();
        }
    }
    return masses;
}

Channel parse_channel_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("channel JSON parse error: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("kraus")) {
        throw std::invalid_argument("channel JSON must contain \"q\" and \"kraus\"");
    }
    Channel ch;
    ch.q = j.at("q").get<int>();
    if (ch.q < 2) throw std::invalid_argument("channel JSON: q must be >= 2");
    for (const auto& mat : j.at("kraus")) {
        if (!mat.is_array() || mat.size() != static_cast<size_t>(ch.q) * ch.q) {
            throw std::invalid_argument("channel JSON: each Kraus matrix must be a "
                                        "row-major array of q*q [re, im] pairs");
        }
        MatrixXcd k(ch.q, ch.q);
        for (int r = 0; r < ch.q; ++r) {
            for (int c = 0; c < ch.q; ++c) {
                const auto& entry = mat.at(r * ch.q + c);
                if (!entry.is_array() || entry.size() != 2) {
                    throw std::invalid_argument("channel JSON: matrix entries must be [re, im]");
                }
                k(r, c) = complex<double>(entry.at(0).get<double>(), entry.at(1).get<double>());
            }
        }
        ch.kraus.push_back(std::move(k));
    }
    check_dimensions(ch);
    return ch;
}

Channel load_channel_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open channel file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_channel_json(buf.str());
}

std::string channel_to_json(const Channel& ch) {
    check_dimensions(ch);
    // nlohmann serializes doubles with full round-trip precision (17 digits).
    nlohmann::json j;
    j["q"] = ch.q;
    j["kraus"] = nlohmann::json::array();
    for (const auto& k : ch.kraus) {
        nlohmann::json mat = nlohmann::json::array();
        for (int r = 0; r < ch.q; ++r) {
            for (int c = 0; c < ch.q; ++c) {
                mat.push_back({k(r, c).real(), k(r, c).imag()});
            }
        }
        j["kraus"].push_back(std::move(mat));
    }
    return j.dump(2);
}

}  // namespace qfid
