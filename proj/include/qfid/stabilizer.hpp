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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qfid/pauli.hpp"

namespace qfid {

/// A validated [[n,k]] stabilizer code. Generators carry signs (phase 0 or 2);
/// the code space is the joint +1 eigenspace of the signed generators.
class StabilizerCode {
  public:
    /// Validates commutativity, GF(2) independence of the (x||z) rows and
    /// Hermiticity of each generator. Throws std::invalid_argument on failure.
    static StabilizerCode build(std::vector<PauliOperator> generators);

    uint32_t n() const { return n_; }
    uint32_t k() const { return k_; }
    const std::vector<PauliOperator>& generators() const { return generators_; }

    /// Commutation bits against each generator; bit j set iff p anticommutes
    /// with generator j. Labels the eigenspace p maps the code space into.
    uint32_t syndrome(const PauliOperator& p) const;

    /// True iff the (x||z) bits of p lie in the GF(2) row space of the
    /// generators, i.e. p is in S up to phase.
    bool in_stabilizer_mod_phase(const PauliOperator& p) const;

    /// True iff p commutes with every generator (p in the normalizer S').
    bool in_normalizer(const PauliOperator& p) const;

  private:
    StabilizerCode() = default;
    uint32_t n_ = 0;
    uint32_t k_ = 0;
    std::vector<PauliOperator> generators_;
    // Row-echelon basis of the symplectic row space, rows as (x << n) | z.
    std::vector<unsigned __int128> echelon_;
};

struct CodeParams {
    uint32_t d = 0;        // min weight over S' \ (+-S)
    uint32_t d_prime = 0;  // min weight over S' \ {+-I}
    uint32_t t = 0;        // floor((d-1)/2)
    bool pure = false;     // d == d_prime
    bool complete = true;  // false when the weight budget truncated the search;
                           // then d/d_prime are lower bounds (budget + 1).
};

/// Brute-force distance search over operators of weight <= weight_budget.
/// Throws std::domain_error for k = 0 codes (S' \ +-S is empty).
CodeParams code_params(const StabilizerCode& code, uint32_t weight_budget);

struct DecodingEntry {
    PauliOperator leader;
    bool ambiguous = false;  // another minimum-weight leader exists outside +-leader*S
};

struct DecodingTable {
    std::vector<DecodingEntry> entries;  // indexed by syndrome value, size 2^(n-k)
};

/// First operator in canonical enumeration order with the given syndrome,
/// plus the ambiguity flag.
DecodingEntry coset_leader(const StabilizerCode& code, uint32_t syndrome);

/// Complete minimum-weight coset-leader table over all 2^(n-k) syndromes.
/// Throws std::invalid_argument when n-k > 20.
DecodingTable decoding_table(const StabilizerCode& code);

/// Exhaustively checks that every weight <= t operator with syndrome s lies in
/// +-(leader_s * S). This is a theorem for valid codes with exact params.
bool verify_proposition1(const StabilizerCode& code, const CodeParams& params,
                         const DecodingTable& table);

/// Parse the text code format: '#' comments, one signed Pauli string per
/// line, all lines equal length. Errors carry 1-based line numbers.
StabilizerCode parse_code_file(const std::string& text);
StabilizerCode load_code_file(const std::string& path);

}  // namespace qfid
