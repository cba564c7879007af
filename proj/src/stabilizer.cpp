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

#include "qfid/stabilizer.hpp"

#include <bit>
#include <fstream>
#include <sstream>

namespace qfid {

namespace {

using u128 = unsigned __int128;

u128 symplectic_row(const PauliOperator& p) {
    return ((u128)p.x_bits << p.n) | p.z_bits;
}

int high_bit(u128 v) {
    int hb = -1;
    while (v) {
        ++hb;
        v >>= 1;
    }
    return hb;
}

// The basis is kept fully reduced (no row contains another row's pivot), so a
// single pass in any order reduces completely.
u128 reduce(u128 r, const std::vector<u128>& basis) {
    for (u128 row : basis) {
        if ((r >> high_bit(row)) & 1) r ^= row;
    }
    return r;
}

// Insert an already-reduced nonzero row, restoring full reduction.
void insert_row(u128 r, std::vector<u128>& basis) {
    int pivot = high_bit(r);
    for (u128& row : basis) {
        if ((row >> pivot) & 1) row ^= r;
    }
    basis.push_back(r);
}

}  // namespace

StabilizerCode StabilizerCode::build(std::vector<PauliOperator> generators) {
    if (generators.empty()) throw std::invalid_argument("no generators given");
    const uint32_t n = generators[0].n;
    if (generators.size() > n) {
        throw std::invalid_argument("more generators than qubits");
    }
    for (size_t i = 0; i < generators.size(); ++i) {
        if (generators[i].n != n) {
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " has mismatched length");
        }
        if (generators[i].phase_exp != 0 && generators[i].phase_exp != 2) {
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " is non-Hermitian (phase +/-i)");
        }
    }
    for (size_t i = 0; i < generators.size(); ++i) {
        for (size_t j = i + 1; j < generators.size(); ++j) {
            if (!commutes(generators[i], generators[j])) {
                throw std::invalid_argument("generators " + std::to_string(i) + " and " +
                                            std::to_string(j) + " do not commute");
            }
        }
    }
    StabilizerCode code;
    code.n_ = n;
    code.k_ = n - static_cast<uint32_t>(generators.size());
    for (size_t i = 0; i < generators.size(); ++i) {
        u128 r = reduce(symplectic_row(generators[i]), code.echelon_);
        if (r == 0) {
            throw std::invalid_argument("generator " + std::to_string(i) +
                                        " is GF(2)-dependent on earlier generators");
        }
        insert_row(r, code.echelon_);
    }
    code.generators_ = std::move(generators);
    return code;
}

uint32_t StabilizerCode::syndrome(const PauliOperator& p) const {
    if (p.n != n_) throw std::invalid_argument("syndrome: length mismatch");
    uint32_t s = 0;
    for (size_t j = 0; j < generators_.size(); ++j) {
        if (!commutes(p, generators_[j])) s |= uint32_t{1} << j;
    }
    return s;
}

bool StabilizerCode::in_stabilizer_mod_phase(const PauliOperator& p) const {
    if (p.n != n_) throw std::invalid_argument("in_stabilizer_mod_phase: length mismatch");
    return reduce(symplectic_row(p), echelon_) == 0;
}

bool StabilizerCode::in_normalizer(const PauliOperator& p) const {
    return syndrome(p) == 0;
}

CodeParams code_params(const StabilizerCode& code, uint32_t weight_budget) {
    if (weight_budget > code.n()) throw std::invalid_argument("weight budget exceeds n");
    if (code.k() == 0) {
        throw std::domain_error("distance undefined for zero-dimensional logical space");
    }
    std::optional<uint32_t> d, d_prime;
    for (uint32_t w = 1; w <= weight_budget && !d; ++w) {
        for (const PauliOperator& p : pauli_weight_level(code.n(), w)) {
            if (!code.in_normalizer(p)) continue;
            if (!d_prime) d_prime = w;
            if (!code.in_stabilizer_mod_phase(p)) {
                d = w;
                break;
            }
        }
    }
    CodeParams params;
    params.complete = d.has_value() && d_prime.has_value();
    params.d = d.value_or(weight_budget + 1);
    params.d_prime = d_prime.value_or(weight_budget + 1);
    params.t = (params.d - 1) / 2;
    params.pure = params.d == params.d_prime;
    return params;
}

namespace {

// Leaders are stored with the phase of the Hermitian letter product (Y on
// every X-and-Z position), so they always print with a leading '+'. The
// phase is irrelevant to syndromes, coset membership, and conjugation.
PauliOperator hermitian_form(PauliOperator p) {
    p.phase_exp = static_cast<uint8_t>(std::popcount(p.x_bits & p.z_bits) & 3);
    return p;
}

// Single enumeration pass filling leaders and ambiguity flags. Runs until
// every syndrome slot is filled and the weight level of the last fill has
// been fully scanned (ambiguity needs the whole level).
DecodingTable build_table(const StabilizerCode& code) {
    const uint32_t r = code.n() - code.k();
    const size_t slots = size_t{1} << r;
    DecodingTable table;
    table.entries.resize(slots);
    std::vector<bool> filled(slots, false);
    size_t remaining = slots;
    for (uint32_t w = 0; w <= code.n(); ++w) {
        for (const PauliOperator& p : pauli_weight_level(code.n(), w)) {
            uint32_t s = code.syndrome(p);
            if (!filled[s]) {
                table.entries[s] = DecodingEntry{hermitian_form(p), false};
                filled[s] = true;
                --remaining;
            } else {
                DecodingEntry& e = table.entries[s];
                if (!e.ambiguous && weight(e.leader) == w &&
                    !code.in_stabilizer_mod_phase(mul(inverse(e.leader), p))) {
                    e.ambiguous = true;
                }
            }
        }
        if (remaining == 0) break;  // level w fully scanned before breaking
    }
    if (remaining != 0) {
        throw std::logic_error("decoding table incomplete; invalid code state");
    }
    return table;
}

}  // namespace

DecodingEntry coset_leader(const StabilizerCode& code, uint32_t syndrome) {
    const uint32_t r = code.n() - code.k();
    if (syndrome >= (uint32_t{1} << r)) {
        throw std::invalid_argument("syndrome out of range");
    }
    std::optional<DecodingEntry> found;
    for (uint32_t w = 0; w <= code.n(); ++w) {
        for (const PauliOperator& p : pauli_weight_level(code.n(), w)) {
            if (code.syndrome(p) != syndrome) continue;
            if (!found) {
                found = DecodingEntry{hermitian_form(p), false};
            } else if (!found->ambiguous &&
                       !code.in_stabilizer_mod_phase(mul(inverse(found->leader), p))) {
                found->ambiguous = true;
            }
        }
        if (found) return *found;  // the whole level was scanned
    }
    throw std::logic_error("no coset leader found; invalid code state");
}

DecodingTable decoding_table(const StabilizerCode& code) {
    if (code.n() - code.k() > 20) {
        throw std::invalid_argument("decoding table cap exceeded (n-k > 20)");
    }
    return build_table(code);
}

bool verify_proposition1(const StabilizerCode& code, const CodeParams& params,
                         const DecodingTable& table) {
    if (!params.complete) {
        throw std::invalid_argument("verify_proposition1 needs exact code parameters");
    }
    for (const PauliOperator& p : enumerate_up_to_weight(code.n(), params.t)) {
        const PauliOperator& leader = table.entries[code.syndrome(p)].leader;
        if (!code.in_stabilizer_mod_phase(mul(inverse(leader), p))) return false;
    }
    return true;
}

StabilizerCode parse_code_file(const std::string& text) {
    std::vector<PauliOperator> gens;
    std::istringstream in(text);
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        // trim
        auto begin = line.find_first_not_of(" \t\r");
        if (begin == std::string::npos) continue;
        auto end = line.find_last_not_of(" \t\r");
        std::string token = line.substr(begin, end - begin + 1);
        try {
            gens.push_back(pauli_from_string(token));
        } catch (const PauliParseError& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ", column " +
                                        std::to_string(e.column + 1) + ": " + e.what());
        }
        if (gens.size() > 1 && gens.back().n != gens.front().n) {
            throw std::invalid_argument("line " + std::to_string(lineno) +
                                        ": generator length differs from first generator");
        }
    }
    return StabilizerCode::build(std::move(gens));
}

StabilizerCode load_code_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::invalid_argument("cannot open code file: " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    return parse_code_file(buf.str());
}

}  // namespace qfid
