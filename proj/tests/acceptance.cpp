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
//
// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "qfid/bound.hpp"
#include "qfid/channel.hpp"
#include "qfid/simulator.hpp"
#include "qfid/stabilizer.hpp"

using namespace qfid;

namespace {

int failures = 0;

void report(int idx, const char* name, bool ok, double seconds) {
    std::printf("[%s] criterion %2d: %-55s (%.2fs)\n", ok ? "PASS" : "FAIL", idx, name,
                seconds);
    if (!ok) ++failures;
}

double now() {
    using clock = std::chrono::steady_clock;
    static const auto start = clock::now();
    return std::chrono::duration<double>(clock::now() - start).count();
}

StabilizerCode load(const char* name) {
    return load_code_file(std::string(QFID_DATA_DIR) + "/" + name);
}

// Four codewords per configuration: two basis projections, two random seeds.
std::vector<StateSpec> codewords() {
    return {BasisState{0}, BasisState{1}, RandomState{101}, RandomState{202}};
}

bool dominance_suite(const SimulatorContext& ctx, const std::vector<Channel>& grid) {
    bool ok = true;
    for (const Channel& ch : grid) {
        std::vector<Channel> chans(ctx.code().n(), ch);
        for (const StateSpec& spec : codewords()) {
            SimulationReport rep;
            try {
                rep = ctx.run(chans, spec);
            } catch (const std::invalid_argument&) {
                continue;  // basis vector orthogonal to the code space
            }
            if (rep.average_fidelity < 1.0 - rep.paper_epsilon - 1e-9) ok = false;
            if (rep.average_fidelity < 1.0 - rep.product_epsilon - 1e-9) ok = false;
        }
    }
    return ok;
}

}  // namespace

int main() {
    // 1. Reference bound values, each evaluated in well under a millisecond.
    {
        double t0 = now();
        auto bench_start = std::chrono::steady_clock::now();
        BoundReport r1 = paper_bound(25, 3, 0.01);
        BoundReport r2 = paper_bound(25, 3, 0.001);
        double elapsed =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - bench_start)
                .count();
        bool ok = std::abs(r1.epsilon - 1.32e-4) / 1.32e-4 <= 0.01 &&
                  std::abs(r2.epsilon - 1.27e-8) / 1.27e-8 <= 0.01 &&
                  elapsed / 2 < 1e-3;
        report(1, "reference tail values at (25, 3, p)", ok, now() - t0);
    }

    SimulatorContext five(load("five_qubit.stab"));
    SimulatorContext steane(load("steane.stab"));

    // 2. Bound dominance on the [[5,1,3]] code over the channel grid.
    {
        double t0 = now();
        std::vector<Channel> grid;
        for (double lam : {0.004, 0.01, 0.04, 0.1}) grid.push_back(depolarizing_channel(lam));
        for (double f : {0.01, 0.05}) grid.push_back(bit_flip_channel(f));
        for (double g : {0.01, 0.1}) grid.push_back(amplitude_damping_channel(g));
        for (double g : {0.01, 0.1}) grid.push_back(phase_damping_channel(g));
        for (double th : {0.05, 0.1, 0.3}) grid.push_back(x_rotation_channel(th));
        for (uint64_t seed = 1; seed <= 20; ++seed) {
            grid.push_back(random_channel(seed, 1 + static_cast<int>(seed % 4)));
        }
        bool ok = dominance_suite(five, grid);
        double dt = now() - t0;
        report(2, "[[5,1,3]] dominance over channel grid", ok && dt < 60, dt);
    }

    // 3. Same on the Steane code for the depolarizing and x-rotation grids.
    {
        double t0 = now();
        std::vector<Channel> grid;
        for (double lam : {0.004, 0.01, 0.04, 0.1}) grid.push_back(depolarizing_channel(lam));
        for (double th : {0.05, 0.1, 0.3}) grid.push_back(x_rotation_channel(th));
        bool ok = dominance_suite(steane, grid);
        double dt = now() - t0;
        report(3, "Steane dominance over depolarizing + x-rotation", ok && dt < 300, dt);
    }

    // 4. Mass conservation and remix invariance.
    {
        double t0 = now();
        bool ok = true;
        for (uint64_t seed = 0; seed < 100; ++seed) {
            PauliMass pm = pauli_mass(random_channel(seed, 1 + static_cast<int>(seed % 4)));
            if (std::abs(pm.masses.sum() - 1.0) > 1e-10) ok = false;
            if (pm.ell0() > 1.0 + 1e-10) ok = false;
        }
        for (uint64_t seed = 0; seed < 20; ++seed) {
            PauliMass pm = pauli_mass(random_channel(seed, 2 + static_cast<int>(seed % 3), 3));
            if (std::abs(pm.masses.sum() - 1.0) > 1e-10) ok = false;
        }
        std::mt19937_64 rng(12);
        std::normal_distribution<double> gauss(0.0, 1.0);
        for (int trial = 0; trial < 100; ++trial) {
            Channel base = random_channel(trial % 10, 3);
            Eigen::MatrixXcd a(3, 3);
            for (int r = 0; r < 3; ++r)
                for (int c = 0; c < 3; ++c) a(r, c) = std::complex<double>(gauss(rng), gauss(rng));
            Eigen::HouseholderQR<Eigen::MatrixXcd> qr(a);
            Eigen::MatrixXcd u = qr.householderQ() * Eigen::MatrixXcd::Identity(3, 3);
            Channel mixed = remix(base, u);
            if ((pauli_mass(mixed).masses - pauli_mass(base).masses).cwiseAbs().maxCoeff() >
                1e-10) {
                ok = false;
            }
        }
        report(4, "mass conservation + remix invariance", ok, now() - t0);
    }

    // 5. Brute-force code parameters and the perfect-code table.
    {
        double t0 = now();
        CodeParams p5 = code_params(five.code(), 5);
        CodeParams p7 = code_params(steane.code(), 7);
        StabilizerCode c422 = load("four_two_two.stab");
        CodeParams p422 = code_params(c422, 4);
        bool ok = p5.d == 3 && p5.d_prime == 3 && p7.d == 3 && p7.d_prime == 3 &&
                  p422.d == 2 && p422.d_prime == 2;
        const DecodingTable& table = five.table();
        ok = ok && table.entries.size() == 16 && weight(table.entries[0].leader) == 0;
        for (size_t s = 1; s < table.entries.size(); ++s) {
            if (weight(table.entries[s].leader) != 1) ok = false;
        }
        double dt = now() - t0;
        report(5, "code parameters + five-qubit decoding table", ok && dt < 10, dt);
    }

    // 6. Exhaustive minimum-weight coset check.
    {
        double t0 = now();
        StabilizerCode c422 = load("four_two_two.stab");
        bool ok =
            verify_proposition1(five.code(), code_params(five.code(), 5), five.table()) &&
            verify_proposition1(steane.code(), code_params(steane.code(), 7),
                                steane.table()) &&
            verify_proposition1(c422, code_params(c422, 4), decoding_table(c422));
        report(6, "minimum-weight coset property (exhaustive)", ok, now() - t0);
    }

    // 7. Dominance chain on 1000 random triples.
    {
        double t0 = now();
        std::mt19937_64 rng(777);
        std::uniform_int_distribution<uint32_t> n_dist(1, 30);
        std::uniform_real_distribution<double> p_dist(0.0, 1.0);
        bool ok = true;
        for (int trial = 0; trial < 1000; ++trial) {
            uint32_t n = n_dist(rng);
            uint32_t t = std::uniform_int_distribution<uint32_t>(0, n)(rng);
            double p = p_dist(rng);
            double paper = paper_bound(n, t, p).epsilon;
            std::vector<std::pair<double, double>> iid(n, {1.0 - p, p});
            double product = product_bound(iid, t);
            double asym = asymptotic_bound(n, t, p);
            if (product > paper + 1e-12 * std::max(1.0, paper)) ok = false;
            if (paper > asym + 1e-12 * std::max(1.0, asym)) ok = false;
        }
        report(7, "product <= tail <= asymptotic on 1000 triples", ok, now() - t0);
    }

    // 8. Asymptotic decay along the alpha sweep.
    {
        double t0 = now();
        const double alpha = 0.2, p = 0.01;
        std::vector<uint32_t> ns;
        for (uint32_t n = 10; n <= 200; n += 10) ns.push_back(n);
        auto pts = sweep_asymptotic(alpha, p, ns);
        bool ok = true;
        double eps_at_100 = 1.0;
        for (const auto& pt : pts) {
            if (!pt.feasible) ok = false;
            if (pt.t >= alpha * pt.n) {
                double envelope = p * std::pow(2.0 * std::pow(p, alpha), pt.n);
                if (pt.epsilon > envelope * (1 + 1e-9)) ok = false;
            }
            if (pt.n == 100) eps_at_100 = pt.epsilon;
        }
        ok = ok && eps_at_100 < 1e-6;
        report(8, "alpha-sweep envelope and decay by n = 100", ok, now() - t0);
    }

    // 9. Bounded-distance recovery bound.
    {
        double t0 = now();
        std::vector<Channel> chans(5, depolarizing_channel(0.04));
        bool ok = true;
        for (uint32_t tp : {0u, 1u}) {
            for (const StateSpec& spec : codewords()) {
                SimulationReport rep;
                try {
                    rep = five.run(chans, spec, RecoveryMode::bounded_distance(tp));
                } catch (const std::invalid_argument&) {
                    continue;
                }
                double eps = bounded_distance_bound(5, tp, 0.03).epsilon;
                if (rep.average_fidelity < 1.0 - eps - 1e-9) ok = false;
            }
        }
        report(9, "bounded-distance mode bound at t' in {0, 1}", ok, now() - t0);
    }

    // 10. Exact correctability of deterministic weight <= t Pauli errors.
    {
        double t0 = now();
        bool ok = true;
        for (SimulatorContext* ctx : {&five, &steane}) {
            uint32_t n = ctx->code().n();
            for (char letter : {'X', 'Y', 'Z'}) {
                for (uint32_t pos = 0; pos < n; ++pos) {
                    std::vector<Channel> chans(n, identity_channel());
                    chans[pos] = pauli_conjugation_channel(letter);
                    SimulationReport rep = ctx->run(chans, BasisState{0});
                    if (std::abs(rep.average_fidelity - 1.0) > 1e-9) ok = false;
                }
            }
        }
        report(10, "deterministic weight-1 errors recover exactly", ok, now() - t0);
    }

    std::printf("%s: %d criterion(s) failed\n", failures == 0 ? "OK" : "FAILED", failures);
    return failures == 0 ? 0 : 1;
}
