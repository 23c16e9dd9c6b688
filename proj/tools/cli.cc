// Copyright 2026 The cvcat Authors
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


#include "cli.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "cvcat/analysis.h"
#include "cvcat/errors.h"
#include "cvcat/gate.h"
#include "cvcat/io.h"
#include "cvcat/oracle.h"
#include "cvcat/phase_space.h"
#include "cvcat/states.h"
#include "cvcat/sweep.h"
#include "json.hpp"

namespace cvcat::cli {

namespace {

using nlohmann::json;

constexpr double kVerifyTolerance = 1e-8;

struct Field {
    std::string name;
    std::function<CLI::Option *(CLI::App &, RunConfig &)> add;
    std::function<json(const RunConfig &)> get;
    std::function<void(RunConfig &, const json &)> set;
};

template <class T>
Field field(std::string name, T RunConfig::*member, std::string help) {
    Field f;
    f.name = name;
    f.add = [name, member, help](CLI::App &app, RunConfig &config) -> CLI::Option * {
        if constexpr (std::is_same_v<T, bool>) {
            return app.add_flag("--" + name, config.*member, help);
        } else {
            return app.add_option("--" + name, config.*member, help);
        }
    };
    f.get = [member](const RunConfig &config) { return json(config.*member); };
    f.set = [member, name](RunConfig &config, const json &value) {
        try {
            config.*member = value.get<T>();
        } catch (const json::exception &) {
            throw DomainError("config key '" + name + "' has the wrong type");
        }
    };
    return f;
}

const std::map<std::string, Field> &all_fields() {
    static const std::map<std::string, Field> fields = [] {
        std::vector<Field> list = {
            field("gamma", &RunConfig::gamma, "cubic deformation coefficient"),
            field("ym", &RunConfig::ym, "homodyne outcome y_m"),
            field("db", &RunConfig::db, "ancilla squeezing in dB, 20 log10(1/s)"),
            field("out", &RunConfig::out, "output file (stdout if omitted)"),
            field("format", &RunConfig::format, "csv | json"),
            field("gamma-rule", &RunConfig::gamma_rule, "fixed | ym/30"),
            field("db-range", &RunConfig::db_range, "squeezing range a:b in dB (log-spaced in 1/s)"),
            field("n-values", &RunConfig::n_values, "number of sweep points"),
            field("ym-range", &RunConfig::ym_range, "sweep y_m over a:b instead of the squeezing"),
            field("kind", &RunConfig::kind, "vacuum | squeezed | cubic | cat | output"),
            field("convention", &RunConfig::convention, "coherent-state convention: momentum | sqrt2"),
            field("half-width", &RunConfig::half_width, "state grid half-width (0: automatic)"),
            field("n-points", &RunConfig::n_points, "state grid points (0: automatic)"),
            field("x-range", &RunConfig::x_range, "Wigner x range a:b"),
            field("p-range", &RunConfig::p_range, "Wigner p range a:b"),
            field("n-x", &RunConfig::n_x, "Wigner x samples"),
            field("n-p", &RunConfig::n_p, "Wigner p samples"),
            field("sigma-level", &RunConfig::sigma_level, "support-region contour in standard deviations"),
            field("n-boundary", &RunConfig::n_boundary, "support-region boundary samples"),
            field("wln", &RunConfig::wln, "add the Wigner logarithmic negativity column"),
            field("optimize-cat", &RunConfig::optimize_cat,
                  "fit (p_plus, theta) locally instead of using the predicted cat (beyond the analytic target)"),
        };
        std::map<std::string, Field> by_name;
        for (Field &f : list) {
            by_name.emplace(f.name, std::move(f));
        }
        return by_name;
    }();
    return fields;
}

struct Command {
    std::string name;
    std::string description;
    std::vector<std::string> fields;
};

const std::vector<Command> &commands() {
    static const std::vector<std::string> common = {"gamma", "ym", "db", "out", "format"};
    auto with_common = [](std::vector<std::string> extra) {
        std::vector<std::string> names = common;
        names.insert(names.end(), extra.begin(), extra.end());
        return names;
    };
    static const std::vector<Command> list = {
        {"state", "write a wavefunction", with_common({"kind", "convention", "half-width", "n-points"})},
        {"gate", "apply the gate to the vacuum and write the conditional output",
         with_common({"convention", "half-width", "n-points"})},
        {"wigner", "write the Wigner function of a state",
         with_common({"kind", "convention", "half-width", "n-points", "x-range", "p-range", "n-x", "n-p"})},
        {"sweep-infidelity", "infidelity against the predicted cat versus squeezing",
         with_common({"gamma-rule", "db-range", "n-values", "convention", "n-points", "wln", "optimize-cat"})},
        {"sweep-probability", "outcome probability density versus squeezing or y_m",
         with_common({"gamma-rule", "db-range", "n-values", "ym-range", "n-points"})},
        {"support-region", "sheared ancilla support region", with_common({"sigma-level", "n-boundary"})},
        {"verify", "closed-form added factor against direct quadrature", {"out", "format"}},
    };
    return list;
}

std::pair<double, double> parse_range(const std::string &text, const char *flag) {
    auto colon = text.find(':', 1);
    if (colon == std::string::npos) {
        throw DomainError(std::string(flag) + ": expected a:b, got '" + text + "'");
    }
    auto number = [&](const std::string &piece) {
        std::size_t used = 0;
        double value = 0.0;
        try {
            value = std::stod(piece, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != piece.size() || !std::isfinite(value)) {
            throw DomainError(std::string(flag) + ": '" + piece + "' is not a number");
        }
        return value;
    };
    double a = number(text.substr(0, colon));
    double b = number(text.substr(colon + 1));
    if (!(a < b)) {
        throw DomainError(std::string(flag) + ": need a < b in a:b");
    }
    return {a, b};
}

GateParams gate_params(const RunConfig &config) {
    return {config.gamma, db_to_s(config.db), config.ym};
}

double predicted_p_plus(const GateParams &params) {
    return params.gamma > 0 && params.y_m >= 0 ? cat_params_from_gate(params).p_plus : 0.0;
}

// Wide enough for the squeezed envelope, fine enough for exp(i gamma x^3)
// to advance at most one radian per step at the edge.
Grid resource_grid(const GateParams &params) {
    double half_width = std::max(8.0, 7.5 / params.s);
    double edge_rate = 3.0 * std::abs(params.gamma) * half_width * half_width;
    auto n = static_cast<std::size_t>(std::ceil(2.0 * half_width * edge_rate)) + 1;
    n = std::max<std::size_t>(n, 2048);
    return Grid::symmetric(half_width, n);
}

Grid state_grid(const RunConfig &config, const std::string &kind, const GateParams &params) {
    Grid grid = kind == "squeezed" || kind == "cubic" ? resource_grid(params) : default_grid(predicted_p_plus(params));
    if (config.half_width > 0) {
        grid.x_min = -config.half_width;
        grid.x_max = config.half_width;
    } else if (config.half_width < 0) {
        throw DomainError("--half-width must be >= 0");
    }
    if (config.n_points > 0) {
        grid.n_points = config.n_points;
    }
    grid.validate();
    return grid;
}

WaveFunction build_state(const RunConfig &config, const std::string &kind, const GateParams &params) {
    Grid grid = state_grid(config, kind, params);
    CoherentConvention convention = coherent_convention_from_string(config.convention);
    if (kind == "vacuum") {
        return make_vacuum(grid);
    }
    if (kind == "squeezed") {
        return make_squeezed_vacuum(params.s, grid);
    }
    if (kind == "cubic") {
        return make_cubic_phase_state(params.gamma, params.s, grid);
    }
    if (kind == "cat") {
        return make_ideal_cat(cat_params_from_gate(params), grid, convention);
    }
    if (kind == "output") {
        return apply_gate(make_vacuum(grid), params).state;
    }
    throw DomainError("unknown --kind '" + kind + "' (expected vacuum|squeezed|cubic|cat|output)");
}

json metadata(const std::string &command, const json &config) {
    return {{"tool", "cvcat"}, {"version", kVersion}, {"command", command}, {"config", config}};
}

std::string state_csv(const WaveFunction &psi) {
    std::string text = "x,re,im\n";
    for (std::size_t i = 0; i < psi.size(); ++i) {
        text += format_real(psi.grid().node(i)) + ',' + format_real(psi[i].real()) + ',' + format_real(psi[i].imag()) +
                '\n';
    }
    return text;
}

class Runner {
   public:
    Runner(const std::string &command, const RunConfig &config, json effective, std::ostream &out, std::ostream &err)
        : command_(command), config_(config), effective_(std::move(effective)), out_(out), err_(err) {
        if (config_.format != "csv" && config_.format != "json") {
            throw DomainError("--format must be csv or json, got '" + config_.format + "'");
        }
    }

    int dispatch() {
        if (command_ == "state") {
            return state();
        }
        if (command_ == "gate") {
            return gate();
        }
        if (command_ == "wigner") {
            return wigner();
        }
        if (command_ == "sweep-infidelity" || command_ == "sweep-probability") {
            return sweep();
        }
        if (command_ == "support-region") {
            return support_region();
        }
        return verify();
    }

   private:
    bool as_json() const {
        return config_.format == "json";
    }

    void emit(const std::string &text) {
        if (config_.out.empty() || config_.out == "-") {
            out_ << text;
            out_.flush();
        } else {
            write_text(config_.out, text);
        }
    }

    void emit(json document) {
        emit(document.dump(1) + '\n');
    }

    json document() const {
        return {{"meta", metadata(command_, effective_)}};
    }

    int state() {
        GateParams params = gate_params(config_);
        std::string kind = config_.kind.empty() ? "cat" : config_.kind;
        WaveFunction psi = build_state(config_, kind, params);
        if (as_json()) {
            json doc = document();
            doc["state"] = to_json(psi);
            emit(std::move(doc));
        } else {
            emit(state_csv(psi));
        }
        return kExitOk;
    }

    int gate() {
        GateParams params = gate_params(config_);
        WaveFunction vacuum = make_vacuum(state_grid(config_, "vacuum", params));
        ConditionalOutput output = apply_gate(vacuum, params);
        json cat = nullptr;
        double f_cat = std::nan("");
        if (params.gamma > 0 && params.y_m >= 0) {
            CatParams target = cat_params_from_gate(params);
            f_cat = fidelity(
                output.state,
                make_ideal_cat(target, vacuum.grid(), coherent_convention_from_string(config_.convention)));
            cat = {{"p_plus", target.p_plus}, {"theta", target.theta}};
        }
        if (as_json()) {
            json doc = document();
            doc["probability_density"] = output.probability_density;
            doc["fidelity"] = f_cat;
            doc["cat"] = cat;
            doc["state"] = to_json(output.state);
            emit(std::move(doc));
        } else {
            err_ << "probability_density=" << format_real(output.probability_density)
                 << " fidelity=" << format_real(f_cat) << '\n';
            emit(state_csv(output.state));
        }
        return kExitOk;
    }

    int wigner() {
        GateParams params = gate_params(config_);
        std::string kind = config_.kind.empty() ? "output" : config_.kind;
        WaveFunction psi = build_state(config_, kind, params);
        PhaseSpaceBounds bounds{psi.grid().x_min, psi.grid().x_max, 0.0, 0.0};
        if (!config_.x_range.empty()) {
            std::tie(bounds.x_min, bounds.x_max) = parse_range(config_.x_range, "--x-range");
        }
        if (!config_.p_range.empty()) {
            std::tie(bounds.p_min, bounds.p_max) = parse_range(config_.p_range, "--p-range");
        } else if (kind == "cubic") {
            double reach = std::max(std::abs(bounds.x_min), std::abs(bounds.x_max));
            bounds.p_min = -8.0;
            bounds.p_max = 3.0 * std::abs(params.gamma) * reach * reach + 8.0;
        } else {
            double reach = predicted_p_plus(params) + 8.0;
            bounds.p_min = -reach;
            bounds.p_max = reach;
        }
        WignerGrid w = wigner_transform(psi, bounds, config_.n_x, config_.n_p);
        if (as_json()) {
            json doc = document();
            json values = json::array();
            for (std::size_t i = 0; i < w.n_x; ++i) {
                values.push_back(std::vector<double>(w.values.begin() + i * w.n_p, w.values.begin() + (i + 1) * w.n_p));
            }
            doc["bounds"] = {{"x_min", bounds.x_min}, {"x_max", bounds.x_max}, {"p_min", bounds.p_min}, {"p_max", bounds.p_max}};
            doc["n_x"] = w.n_x;
            doc["n_p"] = w.n_p;
            doc["mass"] = w.total_mass();
            doc["min"] = w.min_value();
            doc["max_abs"] = w.max_abs();
            doc["wln"] = wigner_log_negativity(w);
            doc["values"] = std::move(values);
            emit(std::move(doc));
        } else {
            emit(wigner_to_csv(w));
        }
        return kExitOk;
    }

    int sweep() {
        SweepSpec spec;
        spec.fixed = {config_.gamma, 1.0, config_.ym};
        spec.gamma_rule = gamma_rule_from_string(config_.gamma_rule);
        spec.convention = coherent_convention_from_string(config_.convention);
        if (config_.n_points > 0) {
            spec.grid_points = config_.n_points;
        }
        if (config_.n_values < 2) {
            throw DomainError("--n-values must be >= 2");
        }
        bool probability_only = command_ == "sweep-probability";
        spec.outputs = probability_only ? SweepOutputs{false, true, false, false}
                                        : SweepOutputs{true, true, config_.wln, true};
        spec.optimize_cat = !probability_only && config_.optimize_cat;
        if (probability_only && !config_.ym_range.empty()) {
            auto [a, b] = parse_range(config_.ym_range, "--ym-range");
            spec.variable = SweepVariable::kYm;
            spec.fixed.s = db_to_s(config_.db);
            spec.values.resize(config_.n_values);
            for (std::size_t k = 0; k < config_.n_values; ++k) {
                spec.values[k] = a + (b - a) * static_cast<double>(k) / static_cast<double>(config_.n_values - 1);
            }
            spec.values.back() = b;
        } else {
            auto [a, b] = parse_range(config_.db_range, "--db-range");
            spec.variable = SweepVariable::kInverseS;
            spec.values = log_spaced(1.0 / db_to_s(a), 1.0 / db_to_s(b), config_.n_values);
        }
        std::vector<SweepRow> rows = run_sweep(spec);
        if (as_json()) {
            json doc = document();
            doc["variable"] = std::string(to_string(spec.variable));
            json list = json::array();
            for (const SweepRow &row : rows) {
                list.push_back({{"variable_value", row.variable_value},
                                {"gamma", row.params.gamma},
                                {"s", row.params.s},
                                {"y_m", row.params.y_m},
                                {"fidelity", row.fidelity},
                                {"infidelity", row.infidelity},
                                {"probability_density", row.probability_density},
                                {"wln", row.wln},
                                {"efficiency", row.efficiency},
                                {"error", row.error}});
            }
            doc["rows"] = std::move(list);
            emit(std::move(doc));
        } else {
            emit(sweep_to_csv(rows));
        }
        return kExitOk;
    }

    int support_region() {
        GateParams params = gate_params(config_);
        SupportRegion region = build_support_region(params.s, params.gamma, config_.sigma_level, config_.n_boundary);
        if (as_json()) {
            json doc = document();
            json boundary = json::array();
            for (const PhasePoint &point : region.boundary) {
                boundary.push_back({point.x, point.p});
            }
            json cuts = json::array();
            for (auto [lo, hi] : horizontal_intersections(region, params.y_m)) {
                cuts.push_back({lo, hi});
            }
            doc["sigma_level"] = region.sigma_level;
            doc["area"] = polygon_area(region.boundary);
            doc["intersections_at_ym"] = std::move(cuts);
            doc["boundary"] = std::move(boundary);
            emit(std::move(doc));
        } else {
            emit(support_region_to_csv(region));
        }
        return kExitOk;
    }

    int verify() {
        ClosedFormDeviation check = standard_closed_form_check();
        bool passed = check.max_relative_deviation <= kVerifyTolerance;
        if (as_json()) {
            json doc = document();
            doc["points"] = check.points;
            doc["max_relative_deviation"] = check.max_relative_deviation;
            doc["tolerance"] = kVerifyTolerance;
            doc["worst"] = {{"gamma", check.worst_params.gamma},
                            {"s", check.worst_params.s},
                            {"y_m", check.worst_params.y_m},
                            {"x", check.worst_x}};
            doc["passed"] = passed;
            emit(std::move(doc));
        } else {
            std::ostringstream report;
            report << "points=" << check.points << '\n'
                   << "max_relative_deviation=" << format_real(check.max_relative_deviation) << '\n'
                   << "worst=gamma:" << format_real(check.worst_params.gamma)
                   << ",s:" << format_real(check.worst_params.s) << ",y_m:" << format_real(check.worst_params.y_m)
                   << ",x:" << format_real(check.worst_x) << '\n'
                   << "tolerance=" << format_real(kVerifyTolerance) << '\n'
                   << "status=" << (passed ? "PASS" : "FAIL") << '\n';
            emit(report.str());
        }
        return passed ? kExitOk : kExitDomainError;
    }

    std::string command_;
    RunConfig config_;
    json effective_;
    std::ostream &out_;
    std::ostream &err_;
};

json load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw DomainError("cannot read config '" + path + "'");
    }
    try {
        json config = json::parse(in);
        if (!config.is_object()) {
            throw DomainError("config '" + path + "' must be a flat JSON object");
        }
        return config;
    } catch (const json::exception &e) {
        throw DomainError("config '" + path + "': " + e.what());
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"cvcat: measurement-induced cubic-phase gate and cat-state analysis", "cvcat"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kVersion);

    RunConfig config;
    std::string config_path;
    bool dump_config = false;
    std::map<std::string, CLI::App *> subcommands;
    for (const Command &command : commands()) {
        CLI::App *sub = app.add_subcommand(command.name, command.description);
        for (const std::string &name : command.fields) {
            all_fields().at(name).add(*sub, config);
        }
        sub->get_option("--format")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--config", config_path, "flat JSON object of flag values; flags win");
        sub->add_flag("--dump-config", dump_config, "print the effective configuration as JSON and exit");
        subcommands[command.name] = sub;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::Success &e) {
        out << (dynamic_cast<const CLI::CallForVersion *>(&e) ? std::string(kVersion) + "\n" : app.help());
        for (CLI::App *sub : app.get_subcommands()) {
            out << sub->help();
        }
        return kExitOk;
    } catch (const CLI::ParseError &e) {
        err << "cvcat: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const Command &command = *std::find_if(commands().begin(), commands().end(), [&](const Command &c) {
        return subcommands.at(c.name)->parsed();
    });
    CLI::App *sub = subcommands.at(command.name);

    try {
        if (!config_path.empty()) {
            json overrides = load_config(config_path);
            for (auto &[key, value] : overrides.items()) {
                if (std::find(command.fields.begin(), command.fields.end(), key) == command.fields.end()) {
                    throw DomainError("config key '" + key + "' does not apply to '" + command.name + "'");
                }
                if (sub->get_option("--" + key)->count() == 0) {
                    all_fields().at(key).set(config, value);
                }
            }
        }
        json effective = json::object();
        for (const std::string &name : command.fields) {
            effective[name] = all_fields().at(name).get(config);
        }
        if (dump_config) {
            out << effective.dump(1) << '\n';
            return kExitOk;
        }
        return Runner(command.name, config, effective, out, err).dispatch();
    } catch (const ConvergenceError &e) {
        err << "cvcat: convergence failure: " << e.what() << " (best estimate " << format_real(std::abs(e.best_estimate))
            << ", error estimate " << format_real(e.error_estimate) << ")\n";
        return kExitConvergenceError;
    } catch (const DomainError &e) {
        err << "cvcat: " << e.what() << '\n';
        return kExitDomainError;
    }
}

}  // namespace cvcat::cli
