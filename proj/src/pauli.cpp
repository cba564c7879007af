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

#include "qfid/pauli.hpp"

#include <algorithm>
#include <bit>
#include <complex>

namespace qfid {

namespace {

void check_same_length(const PauliOperator& p, const PauliOperator& q) {
    if (p.n != q.n) {
        throw std::invalid_argument("Pauli length mismatch: " + std::to_string(p.n) +
                                    " vs " + std::to_string(q.n));
    }
}

int parity(uint64_t v) { return std::popcount(v) & 1; }

}  // namespace

PauliOperator pauli_from_string(const std::string& s) {
    size_t pos = 0;
    uint8_t phase = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        if (s[pos] == '-') phase = 2;
        ++pos;
    }
    if (pos == s.size()) {
        throw PauliParseError("empty Pauli string", pos);
    }
    if (s.size() - pos > 64) {
        throw PauliParseError("Pauli string longer than 64 qubits", pos);
    }
    PauliOperator p;
    p.n = static_cast<uint32_t>(s.size() - pos);
    p.phase_exp = phase;
    for (uint32_t i = 0; pos < s.size(); ++pos, ++i) {
        uint64_t bit = uint64_t{1} << i;
        switch (s[pos]) {
            case 'I':
                break;
            case 'X':
                p.x_bits |= bit;
                break;
            case 'Z':
                p.z_bits |= bit;
                break;
            case 'Y':  // sigma_y = i sigma_x sigma_z
                p.x_bits |= bit;
                p.z_bits |= bit;
                p.phase_exp = (p.phase_exp + 1) & 3;
                break;
            default:
                throw PauliParseError(std::string("illegal character '") + s[pos] +
                                          "' at column " + std::to_string(pos),
                                      pos);
        }
    }
    return p;
}

std::string pauli_to_string(const PauliOperator& p) {
    std::string body;
    body.reserve(p.n);
    int y_count = 0;
    for (uint32_t i = 0; i < p.n; ++i) {
        bool x = (p.x_bits >> i) & 1;
        bool z = (p.z_bits >> i) & 1;
        if (x && z) {
            body += 'Y';
            ++y_count;
        } else if (x) {
            body += 'X';
        } else if (z) {
            body += 'Z';
        } else {
            body += 'I';
        }
    }
    int residual = (static_cast<int>(p.phase_exp) - y_count) & 3;
    if (residual == 0) return "+" + body;
    if (residual == 2) return "-" + body;
    throw std::domain_error("Pauli operator has overall phase +/-i, not representable "
                            "as a signed IXYZ string");
}

PauliOperator mul(const PauliOperator& p, const PauliOperator& q) {
    check_same_length(p, q);
    PauliOperator r;
    r.n = p.n;
    r.x_bits = p.x_bits ^ q.x_bits;
    r.z_bits = p.z_bits ^ q.z_bits;
    // X(x_q) commuted through Z(z_p) picks up (-1)^(z_p . x_q).
    r.phase_exp = static_cast<uint8_t>((p.phase_exp + q.phase_exp + 2 * parity(p.z_bits & q.x_bits)) & 3);
    return r;
}

PauliOperator inverse(const PauliOperator& p) {
    // p * p has phase 2*phase + 2*(z.x); the inverse negates that.
    PauliOperator r = p;
    r.phase_exp = static_cast<uint8_t>((-static_cast<int>(p.phase_exp) - 2 * parity(p.x_bits & p.z_bits)) & 3);
    return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
    check_same_length(p, q);
    return (parity(p.x_bits & q.z_bits) ^ parity(p.z_bits & q.x_bits)) == 0;
}

uint32_t weight(const PauliOperator& p) {
    return static_cast<uint32_t>(std::popcount(p.x_bits | p.z_bits));
}

std::vector<PauliOperator> pauli_weight_level(uint32_t n, uint32_t w) {
    if (w > n) throw std::invalid_argument("weight exceeds length");
    std::vector<PauliOperator> out;
    // Walk subsets of positions of size w, then the 3 non-identity letters
    // per position; sort by key afterwards.
    std::vector<uint32_t> idx(w);
    for (uint32_t i = 0; i < w; ++i) idx[i] = i;
    auto emit_patterns = [&](const std::vector<uint32_t>& positions) {
        size_t combos = 1;
        for (uint32_t i = 0; i < w; ++i) combos *= 3;
        for (size_t c = 0; c < combos; ++c) {
            PauliOperator p = PauliOperator::identity(n);
            size_t rest = c;
            for (uint32_t i = 0; i < w; ++i) {
                uint64_t bit = uint64_t{1} << positions[i];
                switch (rest % 3) {
                    case 0: p.x_bits |= bit; break;                       // X
                    case 1: p.x_bits |= bit; p.z_bits |= bit; break;     // XZ pattern
                    case 2: p.z_bits |= bit; break;                      // Z
                }
                rest /= 3;
            }
            out.push_back(p);
        }
    };
    if (w == 0) {
        out.push_back(PauliOperator::identity(n));
    } else {
        while (true) {
            emit_patterns(idx);
            // next combination
            int i = static_cast<int>(w) - 1;
            while (i >= 0 && idx[i] == n - w + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (uint32_t j = i + 1; j < w; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const PauliOperator& a, const PauliOperator& b) {
        return pauli_key(a) < pauli_key(b);
    });
    return out;
}

std::vector<PauliOperator> enumerate_up_to_weight(uint32_t n, uint32_t w) {
    std::vector<PauliOperator> out;
    for (uint32_t lvl = 0; lvl <= w; ++lvl) {
        auto level = pauli_weight_level(n, lvl);
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

Eigen::MatrixXcd pauli_matrix(const PauliOperator& p) {
    if (p.n > 14) throw std::invalid_argument("pauli_matrix: n too large for dense form");
    const size_t dim = size_t{1} << p.n;
    static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
    // X(x)Z(z)|b> = (-1)^(z.b) |b ^ x>; qubit i is bit i of the basis index.
    for (size_t b = 0; b < dim; ++b) {
        int sign = parity(p.z_bits & b) ? -1 : 1;
        m(b ^ p.x_bits, b) = i_pow[p.phase_exp] * static_cast<double>(sign);
    }
    return m;
}

}  // namespace qfid
