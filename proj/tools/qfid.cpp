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

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qfid/bound.hpp"
#include "qfid/channel.hpp"
#include "qfid/simulator.hpp"
#include "qfid/stabilizer.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using nlohmann::json;

json base_report(const std::string& command, json inputs, double tolerance) {
    json j;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    j["results"] = json::object();
    j["tolerances"] = {{"numeric", tolerance}};
    j["version"] = kVersion;
    return j;
}

void emit(const json& report, const std::string& format) {
    if (format == "json") {
        std::cout << report.dump(2) << "\n";
        return;
    }
    // text mode: flat key: value lines
    std::cout << report["command"].get<std::string>() << " (qfid " << kVersion << ")\n";
    for (auto& [key, val] : report["results"].items()) {
        std::cout << "  " << key << ": " << val.dump() << "\n";
    }
}

json bound_json(const qfid::BoundReport& r) {
    return json{{"n", r.n},
                {"t", r.t_used},
                {"p", r.p},
                {"epsilon", r.epsilon},
                {"fidelity_lb", r.fidelity_lb},
                {"fidelity_lb_clamped", r.fidelity_lb_clamped}};
}

// Channel argument: a JSON file path, or an inline maker spec such as
// "depolarizing:0.04", "bit_flip:0.2", "x_rotation:0.1", "identity",
// "random:SEED:R".
qfid::Channel resolve_channel(const std::string& arg) {
    if (std::filesystem::exists(arg)) return qfid::load_channel_file(arg);
    auto next = [](const std::string& s, size_t& pos) {
        size_t colon = s.find(':', pos);
        std::string tok = s.substr(pos, colon == std::string::npos ? colon : colon - pos);
        pos = colon == std::string::npos ? s.size() : colon + 1;
        return tok;
    };
    size_t pos = 0;
    std::string kind = next(arg, pos);
    auto num = [&] {
        if (pos >= arg.size()) throw std::invalid_argument("channel spec '" + arg + "' needs a parameter");
        return std::stod(next(arg, pos));
    };
    if (kind == "identity") return qfid::identity_channel();
    if (kind == "depolarizing") return qfid::depolarizing_channel(num());
    if (kind == "bit_flip") return qfid::bit_flip_channel(num());
    if (kind == "phase_damping") return qfid::phase_damping_channel(num());
    if (kind == "amplitude_damping") return qfid::amplitude_damping_channel(num());
    if (kind == "x_rotation") return qfid::x_rotation_channel(num());
    if (kind == "random") {
        auto seed = static_cast<uint64_t>(num());
        int r = static_cast<int>(num());
        return qfid::random_channel(seed, r);
    }
    throw std::invalid_argument("unknown channel spec or missing file: " + arg);
}

qfid::StateSpec parse_state(const std::string& s) {
    if (s.rfind("basis:", 0) == 0) return qfid::BasisState{std::stoull(s.substr(6))};
    if (s.rfind("random:", 0) == 0) return qfid::RandomState{std::stoull(s.substr(7))};
    throw std::invalid_argument("state must be basis:<i> or random:<seed>");
}

qfid::RecoveryMode parse_mode(const std::string& s) {
    if (s == "full") return qfid::RecoveryMode::full();
    if (s.rfind("bounded:", 0) == 0) {
        return qfid::RecoveryMode::bounded_distance(
            static_cast<uint32_t>(std::stoul(s.substr(8))));
    }
    throw std::invalid_argument("mode must be full or bounded:<t'>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fidelity lower bounds and exact verification for stabilizer codes"};
    app.require_subcommand(1);

    std::string format = "text";
    double tolerance = 1e-10;
    app.add_option("--format", format, "Output format: text | json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--tolerance", tolerance, "Numeric tolerance override");

    // bound
    auto* cmd_bound = app.add_subcommand("bound", "Evaluate the fidelity bounds");
    uint32_t b_n = 0, b_t = 0;
    std::optional<uint32_t> b_tprime;
    double b_p = 0.0;
    std::optional<std::string> b_channel;
    cmd_bound->add_option("--n", b_n, "Code length")->required();
    cmd_bound->add_option("--t", b_t, "Correction radius")->required();
    cmd_bound->add_option("--p", b_p, "Non-identity error mass");
    cmd_bound->add_option("--tprime", b_tprime, "Bounded-distance radius");
    cmd_bound->add_option("--channel", b_channel, "Channel file or spec; p from its Pauli mass");

    // code-info
    auto* cmd_code = app.add_subcommand("code-info", "Code parameters from a .stab file");
    std::string c_path;
    uint32_t c_budget = 0;
    cmd_code->add_option("file", c_path, "Code file")->required();
    cmd_code->add_option("--weight-budget", c_budget, "Max enumerated weight (default n)");

    // decode-table
    auto* cmd_table = app.add_subcommand("decode-table", "Coset-leader decoding table");
    std::string t_path;
    cmd_table->add_option("file", t_path, "Code file")->required();

    // channel-info
    auto* cmd_chan = app.add_subcommand("channel-info", "Pauli masses of a channel");
    std::string ch_arg;
    cmd_chan->add_option("channel", ch_arg, "Channel file or spec")->required();

    // simulate
    auto* cmd_sim = app.add_subcommand("simulate", "Exact density-matrix verification");
    std::string s_code, s_channel, s_state = "basis:0", s_mode = "full";
    cmd_sim->add_option("--code", s_code, "Code file")->required();
    cmd_sim->add_option("--channel", s_channel, "Channel file or spec")->required();
    cmd_sim->add_option("--state", s_state, "basis:<i> | random:<seed>");
    cmd_sim->add_option("--mode", s_mode, "full | bounded:<t'>");

    // sweep
    auto* cmd_sweep = app.add_subcommand("sweep", "Bound along a code-length sweep");
    double w_alpha = 0.0, w_p = 0.0;
    std::vector<uint32_t> w_ns;
    cmd_sweep->add_option("--alpha", w_alpha, "Rate t/n")->required();
    cmd_sweep->add_option("--p", w_p, "Error mass")->required();
    cmd_sweep->add_option("--n", w_ns, "Code lengths")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_bound) {
            double p = b_p;
            json inputs = {{"n", b_n}, {"t", b_t}};
            if (b_channel) {
                qfid::PauliMass pm = qfid::pauli_mass(resolve_channel(*b_channel), tolerance);
                p = pm.p();
                inputs["channel"] = *b_channel;
            }
            inputs["p"] = p;
            json rep = base_report("bound", inputs, tolerance);
            rep["results"]["paper"] = bound_json(qfid::paper_bound(b_n, b_t, p));
            rep["results"]["asymptotic"] = qfid::asymptotic_bound(b_n, b_t, p);
            std::vector<std::pair<double, double>> ells(b_n, {1.0 - p, p});
            rep["results"]["product_exact"] = {
                {"epsilon", qfid::product_bound(ells, b_t)},
                {"note", "exact i.i.d. product form; tighter than the headline tail"}};
            if (b_tprime) {
                rep["results"]["bounded_distance"] =
                    bound_json(qfid::bounded_distance_bound(b_n, *b_tprime, p));
            }
            emit(rep, format);
        } else if (*cmd_code) {
            qfid::StabilizerCode code = qfid::load_code_file(c_path);
            uint32_t budget = c_budget == 0 ? code.n() : c_budget;
            qfid::CodeParams params = qfid::code_params(code, budget);
            json rep = base_report("code-info", {{"file", c_path}, {"weight_budget", budget}},
                                   tolerance);
            rep["results"] = {{"n", code.n()},     {"k", code.k()},
                              {"d", params.d},     {"d_prime", params.d_prime},
                              {"t", params.t},     {"pure", params.pure},
                              {"complete", params.complete}};
            if (!params.complete) rep["results"]["note"] = "d, d_prime are lower bounds (budget exhausted)";
            emit(rep, format);
        } else if (*cmd_table) {
            qfid::StabilizerCode code = qfid::load_code_file(t_path);
            qfid::DecodingTable table = qfid::decoding_table(code);
            json rep = base_report("decode-table", {{"file", t_path}}, tolerance);
            json entries = json::array();
            for (size_t s = 0; s < table.entries.size(); ++s) {
                entries.push_back({{"syndrome", s},
                                   {"leader", qfid::pauli_to_string(table.entries[s].leader)},
                                   {"weight", qfid::weight(table.entries[s].leader)},
                                   {"ambiguous", table.entries[s].ambiguous}});
            }
            rep["results"]["entries"] = std::move(entries);
            emit(rep, format);
        } else if (*cmd_chan) {
            qfid::Channel ch = resolve_channel(ch_arg);
            qfid::ValidationReport v = qfid::validate(ch, tolerance);
            json rep = base_report("channel-info", {{"channel", ch_arg}}, tolerance);
            rep["results"]["valid"] = v.ok;
            rep["results"]["deviation"] = v.deviation;
            if (v.ok) {
                qfid::PauliMass pm = qfid::pauli_mass(ch, tolerance);
                json masses = json::array();
                for (int i = 0; i < pm.q; ++i) {
                    json row = json::array();
                    for (int j = 0; j < pm.q; ++j) row.push_back(pm.masses(i, j));
                    masses.push_back(std::move(row));
                }
                rep["results"]["masses"] = std::move(masses);
                rep["results"]["ell0"] = pm.ell0();
                rep["results"]["p"] = pm.p();
            }
            emit(rep, format);
        } else if (*cmd_sim) {
            qfid::StabilizerCode code = qfid::load_code_file(s_code);
            qfid::Channel ch = resolve_channel(s_channel);
            std::vector<qfid::Channel> channels(code.n(), ch);
            qfid::SimulationReport sim = qfid::average_fidelity(
                code, channels, parse_state(s_state), parse_mode(s_mode));
            json rep = base_report("simulate",
                                   {{"code", s_code},
                                    {"channel", s_channel},
                                    {"state", s_state},
                                    {"mode", s_mode}},
                                   tolerance);
            json branches = json::array();
            for (const auto& b : sim.branches) {
                json jb = {{"syndrome", b.syndrome},
                           {"probability", b.probability},
                           {"leader_weight", b.leader_weight},
                           {"ambiguous", b.ambiguous}};
                if (b.fidelity_defined) jb["fidelity"] = b.fidelity;
                if (b.beyond_radius) jb["beyond_radius"] = true;
                branches.push_back(std::move(jb));
            }
            auto& res = rep["results"];
            res["branches"] = std::move(branches);
            res["average_fidelity"] = sim.average_fidelity;
            res["p_max"] = sim.p_max;
            res["paper_epsilon"] = sim.paper_epsilon;
            res["product_epsilon"] = sim.product_epsilon;
            res["fidelity_lb"] = 1.0 - sim.paper_epsilon;
            res["fidelity_lb_clamped"] = std::max(0.0, 1.0 - sim.paper_epsilon);
            if (sim.bounded_epsilon) res["bounded_epsilon"] = *sim.bounded_epsilon;
            res["dominance_ok"] = sim.dominance_ok;
            emit(rep, format);
            // A failed dominance check contradicts a theorem; flag loudly.
            if (!sim.dominance_ok) return 2;
        } else if (*cmd_sweep) {
            auto points = qfid::sweep_asymptotic(w_alpha, w_p, w_ns);
            json rep = base_report("sweep", {{"alpha", w_alpha}, {"p", w_p}}, tolerance);
            json arr = json::array();
            for (const auto& pt : points) {
                arr.push_back({{"n", pt.n},
                               {"t", pt.t},
                               {"epsilon", pt.epsilon},
                               {"feasible", pt.feasible}});
            }
            rep["results"]["points"] = std::move(arr);
            rep["results"]["feasible"] = points.empty() || points.front().feasible;
            emit(rep, format);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
