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
#include <utility>
#include <vector>

namespace qfid {

/// Fidelity lower-bound report. epsilon is the infidelity tail
/// sum_{i=t+1}^n C(n,i) p^i, evaluated with exact integer binomials and
/// extended-precision summation. epsilon is the primary quantity; 1-epsilon
/// can be negative for large p (the bound is then vacuous), hence the
/// clamped companion.
struct BoundReport {
    uint32_t n = 0;
    uint32_t t_used = 0;
    double p = 0.0;
    double epsilon = 0.0;
    double fidelity_lb = 0.0;          // 1 - epsilon, may be negative
    double fidelity_lb_clamped = 0.0;  // max(0, 1 - epsilon)
};

/// The main binomial-tail bound for a t-error correcting length-n code over
/// a channel with non-identity mass p.
BoundReport paper_bound(uint32_t n, uint32_t t, double p);

/// Tighter product form: epsilon = sum over weight > t patterns of the
/// product of per-position masses. ell_lists[i] = (ell_i(0), ell_i(1)) with
/// ell_i(0) + ell_i(1) = 1. Dynamic programming over the non-identity count,
/// O(n^2). For identical positions this is the binomial tail with the exact
/// (1-p)^{n-i} factors.
double product_bound(const std::vector<std::pair<double, double>>& ell_lists, uint32_t t);

/// The coarse asymptotic envelope p^{t+1} * 2^n, evaluated in the log domain.
double asymptotic_bound(uint32_t n, uint32_t t, double p);

struct SweepPoint {
    uint32_t n = 0;
    uint32_t t = 0;  // floor(alpha * n)
    double epsilon = 0.0;
    bool feasible = false;  // 2 p^alpha < 1
};

/// Evaluate the bound along a code-length sweep at rate alpha (t = floor(alpha n)).
std::vector<SweepPoint> sweep_asymptotic(double alpha, double p,
                                         const std::vector<uint32_t>& n_list);

/// Bounded-distance decoding variant: same tail with t replaced by t'.
BoundReport bounded_distance_bound(uint32_t n, uint32_t t_prime, double p);

}  // namespace qfid
