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

#include "qfid/bound.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace qfid {

namespace {

using float50 = boost::multiprecision::cpp_bin_float_50;
using boost::multiprecision::cpp_int;

void check_args(uint32_t n, uint32_t t, double p) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (t > n) throw std::invalid_argument("t must be <= n");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
}

float50 tail_sum(uint32_t n, uint32_t t, double p) {
    if (t >= n || p == 0.0) return 0;
    float50 pf(p);
    float50 sum = 0;
    cpp_int binom = 1;  // C(n, 0)
    float50 power = 1;  // p^0
    for (uint32_t i = 1; i <= n; ++i) {
        binom = binom * (n - i + 1) / i;  // exact: product of i consecutive ints / i!
        power *= pf;
        if (i > t) sum += float50(binom) * power;
    }
    return sum;
}

BoundReport make_report(uint32_t n, uint32_t t, double p) {
    check_args(n, t, p);
    float50 eps = tail_sum(n, t, p);
    BoundReport r;
    r.n = n;
    r.t_used = t;
    r.p = p;
    r.epsilon = eps.convert_to<double>();
    r.fidelity_lb = (float50(1) - eps).convert_to<double>();
    r.fidelity_lb_clamped = std::max(0.0, r.fidelity_lb);
    return r;
}

}  // namespace

BoundReport paper_bound(uint32_t n, uint32_t t, double p) {
    return make_report(n, t, p);
}

double product_bound(const std::vector<std::pair<double, double>>& ell_lists, uint32_t t) {
    const size_t n = ell_lists.size();
    if (n == 0) throw std::invalid_argument("product_bound: empty mass list");
    for (size_t i = 0; i < n; ++i) {
        auto [l0, l1] = ell_lists[i];
        if (l0 < 0 || l1 < 0 || std::abs(l0 + l1 - 1.0) > 1e-10) {
            throw std::invalid_argument("product_bound: masses at position " +
                                        std::to_string(i) + " must be nonnegative and sum to 1");
        }
    }
    // dp[j] = total mass of patterns with j non-identity positions so far.
    std::vector<float50> dp(n + 1, 0);
    dp[0] = 1;
    for (size_t i = 0; i < n; ++i) {
        float50 l0(ell_lists[i].first), l1(ell_lists[i].second);
        for (size_t j = i + 1; j > 0; --j) dp[j] = dp[j] * l0 + dp[j - 1] * l1;
        dp[0] *= l0;
    }
    float50 eps = 0;
    for (size_t j = t + 1; j <= n; ++j) eps += dp[j];
    return eps.convert_to<double>();
}

double asymptotic_bound(uint32_t n, uint32_t t, double p) {
    check_args(n, t, p);
    if (p == 0.0) return 0.0;
    return std::exp((t + 1.0) * std::log(p) + n * std::log(2.0));
}

std::vector<SweepPoint> sweep_asymptotic(double alpha, double p,
                                         const std::vector<uint32_t>& n_list) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must be in (0, 1)");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must be in [0, 1]");
    bool feasible = p == 0.0 || 2.0 * std::pow(p, alpha) < 1.0;
    std::vector<SweepPoint> out;
    out.reserve(n_list.size());
    for (uint32_t n : n_list) {
        uint32_t t = std::min<uint32_t>(n, static_cast<uint32_t>(std::floor(alpha * n)));
        out.push_back(SweepPoint{n, t, paper_bound(n, t, p).epsilon, feasible});
    }
    return out;
}

BoundReport bounded_distance_bound(uint32_t n, uint32_t t_prime, double p) {
    return make_report(n, t_prime, p);
}

}  // namespace qfid
