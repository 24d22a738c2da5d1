// Copyright 2026 The Tritangle Authors
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

// tritangle: classify three-qubit pure states into their SLOCC classes from
// four mapped observable measurements, with optional shot noise, tomography
// cross-checks and batch table generation.
//
// Exit codes: 0 success, 2 usage error, 3 validation error, 4 runtime error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tritangle/classifier.hpp"
#include "tritangle/entanglement.hpp"
#include "tritangle/errors.hpp"
#include "tritangle/mapping.hpp"
#include "tritangle/measurement.hpp"
#include "tritangle/rng.hpp"
#include "tritangle/states.hpp"

namespace tri = tritangle;
using nlohmann::json;

namespace {

struct StateChoice {
    std::string named;
    std::string canonical;
    std::string state_doc;
    int random_count = 0;
};

struct RunOptions {
    StateChoice choice;
    std::uint64_t seed = 1;
    long shots = 10000;
    bool exact = false;
    double depolarizing = 0.0;
    double readout_sigma = 0.0;
    double epsilon = 0.15;
    int reps = 1;
    std::string format = "json";
    std::string out;
};

struct SelectedState {
    std::string name;
    tri::Vector psi;
    std::optional<tri::CanonicalParams> params;
};

void add_state_options(CLI::App *cmd, StateChoice &choice, bool allow_random) {
    auto *group = cmd->add_option_group("state source");
    group->add_option("--named", choice.named, "named state: GHZ, W, WWbar, BS1, BS2, BS3 or Sep");
    group->add_option("--canonical", choice.canonical, "canonical parameters a0,a1,a2,a3,a4,theta");
    group->add_option("--state", choice.state_doc, "state document: JSON file path or inline JSON");
    if (allow_random) {
        group->add_option("--random", choice.random_count, "generate N random generic states")
            ->check(CLI::PositiveNumber);
    }
    group->require_option(1);
}

void add_run_options(CLI::App *cmd, RunOptions &opt, bool with_classifier) {
    cmd->add_option("--seed", opt.seed, "master seed for all derived RNG streams");
    cmd->add_option("--shots", opt.shots, "shots per measured observable")->check(CLI::PositiveNumber);
    cmd->add_flag("--exact", opt.exact, "use exact expectations instead of shot sampling");
    cmd->add_option("--depolarizing", opt.depolarizing, "depolarizing preparation noise p in [0,1]");
    cmd->add_option("--readout-sigma", opt.readout_sigma, "Gaussian readout noise per estimate");
    if (with_classifier) {
        cmd->add_option("--epsilon", opt.epsilon, "nonzero-decision threshold (> 0)");
        cmd->add_option("--reps", opt.reps, "independent repetitions for error bars")
            ->check(CLI::PositiveNumber);
    }
    cmd->add_option("--format", opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
}

tri::CanonicalParams parse_canonical_list(const std::string &text) {
    std::vector<double> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        try {
            std::size_t used = 0;
            values.push_back(std::stod(item, &used));
            if (used != item.size()) {
                throw std::invalid_argument(item);
            }
        } catch (const std::exception &) {
            throw tri::ValidationError("canonical: cannot parse number '" + item + "'");
        }
    }
    if (values.size() != 6) {
        throw tri::ValidationError("canonical: expected six values a0,a1,a2,a3,a4,theta");
    }
    return tri::CanonicalParams{values[0], values[1], values[2], values[3], values[4], values[5]};
}

json load_state_doc(const std::string &arg) {
    std::string text;
    if (!arg.empty() && arg.front() == '{') {
        text = arg;
    } else {
        std::ifstream in(arg);
        if (!in) {
            throw tri::ValidationError("cannot open state document '" + arg + "'");
        }
        std::stringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw tri::ValidationError(std::string("state document is not valid JSON: ") + e.what());
    }
}

std::vector<SelectedState> resolve_states(const StateChoice &choice, std::uint64_t seed) {
    std::vector<SelectedState> states;
    if (!choice.named.empty()) {
        const auto n = tri::named_state_from_label(choice.named);
        if (!n) {
            throw tri::ValidationError("unknown named state '" + choice.named +
                                       "' (expect GHZ, W, WWbar, BS1, BS2, BS3 or Sep)");
        }
        states.push_back({choice.named, tri::named_state(*n), std::nullopt});
    } else if (!choice.canonical.empty()) {
        const tri::CanonicalParams p = parse_canonical_list(choice.canonical);
        states.push_back({"canonical", tri::from_canonical(p), p});
    } else if (!choice.state_doc.empty()) {
        states.push_back({"state", tri::state_from_json(load_state_doc(choice.state_doc)), std::nullopt});
    } else {
        for (int i = 1; i <= choice.random_count; ++i) {
            const tri::CanonicalParams p = tri::random_canonical(tri::derive_seed(seed, i));
            states.push_back({"R" + std::to_string(i), tri::from_canonical(p), p});
        }
    }
    return states;
}

void write_output(const RunOptions &opt, const std::string &payload) {
    if (opt.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream out(opt.out);
    if (!out) {
        throw std::runtime_error("cannot write output file '" + opt.out + "'");
    }
    out << payload << "\n";
}

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(12);
    s << v;
    return s.str();
}

json config_json(const RunOptions &opt, std::size_t n_states) {
    return json{
        {"mode", opt.exact ? "exact" : "shots"},
        {"shots", opt.shots},
        {"seed", opt.seed},
        {"noise", {{"depolarizing_p", opt.depolarizing}, {"readout_sigma", opt.readout_sigma}}},
        {"epsilon", opt.epsilon},
        {"reps", opt.reps},
        {"states", n_states},
    };
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(const RunOptions &opt) {
    const tri::NoiseModel nm{opt.depolarizing, opt.readout_sigma};
    nm.validate();
    const std::vector<SelectedState> states = resolve_states(opt.choice, opt.seed);

    json rows = json::array();
    std::vector<std::string> csv_lines;
    csv_lines.push_back("state,label,O,O1,O2,O3,std_O,std_O1,std_O2,std_O3,tau,negativity,fidelity");

    for (std::size_t i = 0; i < states.size(); ++i) {
        const SelectedState &s = states[i];
        const std::uint64_t state_seed = tri::derive_seed(opt.seed, i);

        std::array<double, 4> values{};
        std::array<double, 4> stds{};
        bool have_stds = false;

        tri::MeasurementConfig cfg;
        if (opt.exact) {
            cfg.mode = tri::MeasurementConfig::Mode::Exact;
            values = tri::protocol_expectations(s.psi);
        } else {
            cfg.mode = tri::MeasurementConfig::Mode::Sampled;
            cfg.shots = opt.shots;
            cfg.seed = state_seed;
            cfg.noise = nm;
            if (opt.reps >= 2) {
                const tri::Matrix rho = tri::apply_noise(s.psi, nm);
                const tri::RunStats stats = tri::repeated_runs(
                    [&](std::uint64_t rep_seed) {
                        std::vector<double> vals(4);
                        for (int j = 0; j < 4; ++j) {
                            const int idx = tri::kProtocolIndices[j];
                            vals[j] = tri::sample_expectation(rho, idx, opt.shots,
                                                              tri::derive_seed(rep_seed, idx), nm)
                                          .mean;
                        }
                        return vals;
                    },
                    opt.reps, state_seed);
                for (int j = 0; j < 4; ++j) {
                    values[j] = stats.mean[j];
                    stds[j] = stats.stddev[j];
                }
                have_stds = true;
            } else {
                values = tri::classify_state(s.psi, opt.epsilon, cfg).result.values;
            }
        }

        const tri::ClassificationResult result = tri::classify(values, opt.epsilon);
        const double tau = tri::three_tangle(s.psi).tau;
        const double negativity = tri::negativity_min(s.psi);
        const double prep_fidelity =
            opt.exact ? 1.0 : tri::fidelity(tri::apply_noise(s.psi, nm), tri::to_density(s.psi));

        json row = tri::classification_to_json({result, cfg});
        row["name"] = s.name;
        row["state"] = tri::state_to_json(s.psi);
        if (s.params) {
            row["canonical"] = tri::canonical_to_json(*s.params)["canonical"];
        }
        if (have_stds) {
            row["std"] = {{"O", stds[0]}, {"O1", stds[1]}, {"O2", stds[2]}, {"O3", stds[3]}};
        }
        row["tau"] = tau;
        row["negativity"] = negativity;
        row["fidelity"] = prep_fidelity;
        rows.push_back(std::move(row));

        std::ostringstream line;
        line << s.name << ',' << tri::to_label(result.label);
        for (int j = 0; j < 4; ++j) {
            line << ',' << fmt(values[j]);
        }
        for (int j = 0; j < 4; ++j) {
            line << ',' << fmt(have_stds ? stds[j] : 0.0);
        }
        line << ',' << fmt(tau) << ',' << fmt(negativity) << ',' << fmt(prep_fidelity);
        csv_lines.push_back(line.str());
    }

    if (opt.format == "csv") {
        std::string payload;
        for (std::size_t i = 0; i < csv_lines.size(); ++i) {
            payload += csv_lines[i];
            if (i + 1 < csv_lines.size()) {
                payload += '\n';
            }
        }
        write_output(opt, payload);
    } else {
        const json doc{{"config", config_json(opt, states.size())}, {"states", rows}};
        write_output(opt, doc.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// verify-mappings

int cmd_verify_mappings(const RunOptions &opt) {
    const json report = tri::verification_report();
    if (opt.format == "csv") {
        std::string payload =
            "index,pauli,circuit,measured_qubit,sign,max_deviation,provenance,published_circuit,"
            "published_produces";
        for (const auto &row : report.at("rows")) {
            std::ostringstream line;
            line << '\n'
                 << row.at("index").get<int>() << ',' << row.at("pauli").get<std::string>() << ",\""
                 << row.at("circuit").get<std::string>() << "\"," << row.at("measured_qubit").get<int>()
                 << ',' << row.at("sign").get<int>() << ',' << fmt(row.at("max_deviation").get<double>())
                 << ',' << row.at("provenance").get<std::string>() << ",\""
                 << (row.contains("published_circuit") ? row.at("published_circuit").get<std::string>()
                                                       : "")
                 << "\","
                 << (row.contains("published_produces") ? row.at("published_produces").get<std::string>()
                                                        : "");
            payload += line.str();
        }
        write_output(opt, payload);
    } else {
        write_output(opt, report.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tables

int cmd_tables(const RunOptions &opt) {
    const tri::NoiseModel nm{opt.depolarizing, opt.readout_sigma};
    nm.validate();

    std::vector<SelectedState> states;
    for (tri::NamedState n : {tri::NamedState::GHZ, tri::NamedState::WWbar, tri::NamedState::W,
                              tri::NamedState::BS1, tri::NamedState::BS2, tri::NamedState::BS3,
                              tri::NamedState::Sep}) {
        states.push_back({tri::to_label(n), tri::named_state(n), std::nullopt});
    }
    for (int i = 1; i <= opt.choice.random_count; ++i) {
        const tri::CanonicalParams p = tri::random_canonical(tri::derive_seed(opt.seed, i));
        states.push_back({"R" + std::to_string(i), tri::from_canonical(p), p});
    }

    std::ostringstream table2;
    table2 << "state,source,fidelity";
    for (const char *obs : {"O", "O1", "O2", "O3"}) {
        table2 << ',' << obs << "_the," << obs << "_dir," << obs << "_qst";
    }
    std::ostringstream table3;
    table3 << "state,source,negativity_the,negativity_qst,negativity_qst_std";

    for (std::size_t i = 0; i < states.size(); ++i) {
        const SelectedState &s = states[i];
        const char *source = s.params ? "generated" : "named";
        const std::uint64_t state_seed = tri::derive_seed(opt.seed, 1000 + i);
        const tri::Matrix rho_noisy = tri::apply_noise(s.psi, nm);

        const std::array<double, 4> the = tri::protocol_expectations(s.psi);

        // Dir.: shot-sampled expectations on the noisy state. QST: the same
        // observables read off the tomography-reconstructed state, plus its
        // negativity. One derived stream per repetition.
        std::vector<double> neg_qst;
        std::array<double, 4> dir{};
        std::array<double, 4> qst{};
        for (int r = 0; r < opt.reps; ++r) {
            const std::uint64_t rep_seed = tri::derive_seed(state_seed, r);
            const std::uint64_t dir_seed = tri::derive_seed(rep_seed, 1);
            const std::uint64_t qst_seed = tri::derive_seed(rep_seed, 2);
            for (int j = 0; j < 4; ++j) {
                const int idx = tri::kProtocolIndices[j];
                dir[j] += tri::sample_expectation(rho_noisy, idx, opt.shots,
                                                  tri::derive_seed(dir_seed, idx), nm)
                              .mean;
            }
            const tri::Matrix rho_hat =
                tri::tomography(tri::sampled_provider(rho_noisy, nm), opt.shots, qst_seed);
            const std::array<double, 4> vals = tri::protocol_expectations(rho_hat);
            for (int j = 0; j < 4; ++j) {
                qst[j] += vals[j];
            }
            neg_qst.push_back(tri::negativity_min(rho_hat));
        }
        for (int j = 0; j < 4; ++j) {
            dir[j] /= opt.reps;
            qst[j] /= opt.reps;
        }
        double neg_mean = 0.0;
        for (double v : neg_qst) {
            neg_mean += v;
        }
        neg_mean /= neg_qst.size();
        double neg_var = 0.0;
        for (double v : neg_qst) {
            neg_var += (v - neg_mean) * (v - neg_mean);
        }
        const double neg_std = neg_qst.size() > 1 ? std::sqrt(neg_var / (neg_qst.size() - 1)) : 0.0;

        const double prep_fidelity = tri::fidelity(rho_noisy, tri::to_density(s.psi));

        table2 << '\n' << s.name << ',' << source << ',' << fmt(prep_fidelity);
        for (int j = 0; j < 4; ++j) {
            table2 << ',' << fmt(the[j]) << ',' << fmt(dir[j]) << ',' << fmt(qst[j]);
        }
        table3 << '\n'
               << s.name << ',' << source << ',' << fmt(tri::negativity_min(s.psi)) << ','
               << fmt(neg_mean) << ',' << fmt(neg_std);
    }

    if (opt.out.empty()) {
        throw tri::ValidationError("tables requires --out DIRECTORY");
    }
    std::filesystem::create_directories(opt.out);
    const std::filesystem::path dir(opt.out);
    for (const auto &[name, content] :
         {std::pair{"table2.csv", table2.str()}, {"table3.csv", table3.str()}}) {
        std::ofstream out(dir / name);
        if (!out) {
            throw std::runtime_error("cannot write output file '" + (dir / name).string() + "'");
        }
        out << content << "\n";
        std::cout << "wrote " << (dir / name).string() << "\n";
    }
    return 0;
}

// ---------------------------------------------------------------------------
// tomography

int cmd_tomography(const RunOptions &opt) {
    const tri::NoiseModel nm{opt.depolarizing, opt.readout_sigma};
    nm.validate();
    const SelectedState s = resolve_states(opt.choice, opt.seed).front();

    const tri::Matrix ideal = tri::to_density(s.psi);
    const tri::Matrix rho_noisy = tri::apply_noise(s.psi, nm);
    const tri::Matrix rho_hat =
        opt.exact ? tri::tomography(tri::exact_provider(rho_noisy), opt.shots, opt.seed)
                  : tri::tomography(tri::sampled_provider(rho_noisy, nm), opt.shots, opt.seed);

    const std::array<double, 4> vals = tri::protocol_expectations(rho_hat);
    const double fid = tri::fidelity(rho_hat, ideal);
    const double neg = tri::negativity_min(rho_hat);

    if (opt.format == "csv") {
        std::ostringstream line;
        line << "state,provider,shots,fidelity,O,O1,O2,O3,negativity\n"
             << s.name << ',' << (opt.exact ? "exact" : "sampled") << ',' << opt.shots << ','
             << fmt(fid);
        for (double v : vals) {
            line << ',' << fmt(v);
        }
        line << ',' << fmt(neg);
        write_output(opt, line.str());
    } else {
        json rho_doc = json::array();
        for (int r = 0; r < tri::kDim; ++r) {
            json row = json::array();
            for (int c = 0; c < tri::kDim; ++c) {
                row.push_back({rho_hat(r, c).real(), rho_hat(r, c).imag()});
            }
            rho_doc.push_back(std::move(row));
        }
        const json doc{
            {"name", s.name},
            {"provider", opt.exact ? "exact" : "sampled"},
            {"shots", opt.shots},
            {"seed", opt.seed},
            {"noise", {{"depolarizing_p", nm.depolarizing_p}, {"readout_sigma", nm.readout_sigma}}},
            {"fidelity_vs_ideal", fid},
            {"values", {{"O", vals[0]}, {"O1", vals[1]}, {"O2", vals[2]}, {"O3", vals[3]}}},
            {"negativity", neg},
            {"rho", rho_doc},
        };
        write_output(opt, doc.dump(2));
    }
    return 0;
}

// ---------------------------------------------------------------------------
// random-gen

int cmd_random_gen(const RunOptions &opt, int count) {
    if (opt.format == "csv") {
        std::string payload = "name,a0,a1,a2,a3,a4,theta";
        for (int i = 1; i <= count; ++i) {
            const tri::CanonicalParams p = tri::random_canonical(tri::derive_seed(opt.seed, i));
            std::ostringstream line;
            line << "\nR" << i << ',' << fmt(p.a0) << ',' << fmt(p.a1) << ',' << fmt(p.a2) << ','
                 << fmt(p.a3) << ',' << fmt(p.a4) << ',' << fmt(p.theta);
            payload += line.str();
        }
        write_output(opt, payload);
    } else {
        json docs = json::array();
        for (int i = 1; i <= count; ++i) {
            const tri::CanonicalParams p = tri::random_canonical(tri::derive_seed(opt.seed, i));
            json doc = tri::canonical_to_json(p);
            doc["name"] = "R" + std::to_string(i);
            docs.push_back(std::move(doc));
        }
        write_output(opt, json{{"seed", opt.seed}, {"states", docs}}.dump(2));
    }
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"three-qubit SLOCC entanglement classification toolkit"};
    app.require_subcommand(1);

    RunOptions classify_opt;
    auto *classify_cmd =
        app.add_subcommand("classify", "measure the four protocol observables and classify");
    add_state_options(classify_cmd, classify_opt.choice, /*allow_random=*/true);
    add_run_options(classify_cmd, classify_opt, /*with_classifier=*/true);

    RunOptions verify_opt;
    auto *verify_cmd =
        app.add_subcommand("verify-mappings", "verify all 63 observable-mapping recipes");
    verify_cmd->add_option("--format", verify_opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    verify_cmd->add_option("--out", verify_opt.out, "output path (default: stdout)");

    RunOptions tables_opt;
    tables_opt.depolarizing = 0.08;
    tables_opt.reps = 3;
    tables_opt.choice.random_count = 20;
    auto *tables_cmd = app.add_subcommand(
        "tables", "reproduce the observable and negativity result tables as CSV");
    tables_cmd->add_option("--random", tables_opt.choice.random_count,
                           "number of generated generic states");
    tables_cmd->add_option("--seed", tables_opt.seed, "master seed");
    tables_cmd->add_option("--shots", tables_opt.shots, "shots per setting")
        ->check(CLI::PositiveNumber);
    tables_cmd->add_option("--depolarizing", tables_opt.depolarizing, "preparation noise p");
    tables_cmd->add_option("--readout-sigma", tables_opt.readout_sigma, "readout noise sigma");
    tables_cmd->add_option("--reps", tables_opt.reps, "repetitions for error bars")
        ->check(CLI::PositiveNumber);
    tables_cmd->add_option("--out", tables_opt.out, "output directory")->required();

    RunOptions tomo_opt;
    auto *tomo_cmd =
        app.add_subcommand("tomography", "reconstruct a state from all 63 Pauli settings");
    add_state_options(tomo_cmd, tomo_opt.choice, /*allow_random=*/false);
    add_run_options(tomo_cmd, tomo_opt, /*with_classifier=*/false);

    RunOptions gen_opt;
    int gen_count = 20;
    auto *gen_cmd = app.add_subcommand("random-gen", "emit seeded random canonical parameter sets");
    gen_cmd->add_option("--count", gen_count, "number of parameter sets")->check(CLI::PositiveNumber);
    gen_cmd->add_option("--seed", gen_opt.seed, "master seed");
    gen_cmd->add_option("--format", gen_opt.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    gen_cmd->add_option("--out", gen_opt.out, "output path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) {
            return cmd_classify(classify_opt);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify_mappings(verify_opt);
        }
        if (tables_cmd->parsed()) {
            return cmd_tables(tables_opt);
        }
        if (tomo_cmd->parsed()) {
            return cmd_tomography(tomo_opt);
        }
        if (gen_cmd->parsed()) {
            return cmd_random_gen(gen_opt, gen_count);
        }
    } catch (const tri::ValidationError &e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 0;
}
