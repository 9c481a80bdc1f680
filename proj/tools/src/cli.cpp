// Copyright 2026 The qmsets Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "qmsets/attributes.hpp"
#include "qmsets/density.hpp"
#include "qmsets/dsl.hpp"
#include "qmsets/dynamics.hpp"
#include "qmsets/entangle.hpp"
#include "qmsets/error.hpp"
#include "qmsets/json.hpp"
#include "qmsets/partitions.hpp"
#include "qmsets/presets.hpp"
#include "qmsets/qc2.hpp"
#include "qmsets/setspace.hpp"

namespace qmsets::cli {

namespace {

using json::Json;

/// Maps the typographic primes ′ and ″ to ASCII apostrophes.
std::string normalize(std::string s) {
    const std::pair<std::string, std::string> subs[] = {{"\u2033", "''"}, {"\u2032", "'"}};
    for (const auto &[from, to] : subs) {
        for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) {
            s.replace(pos, from.size(), to);
        }
    }
    return s;
}

std::vector<std::string> split_labels(const std::string &text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (c != ' ' && c != '{' && c != '}') {
            cur += c;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

/// Labels in order of first appearance in "a=1,b=2".
Universe universe_from_attribute(const std::string &text) {
    std::vector<std::string> labels;
    for (const auto &item : split_labels(text)) labels.push_back(item.substr(0, item.find('=')));
    return Universe(labels);
}

std::string pad(const std::string &s, std::size_t width) {
    return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

/// Left-aligned columns separated by two spaces, trailing blanks trimmed.
std::string columns(const std::vector<std::vector<std::string>> &rows) {
    std::vector<std::size_t> width;
    for (const auto &r : rows) {
        if (width.size() < r.size()) width.resize(r.size(), 0);
        for (std::size_t k = 0; k < r.size(); ++k) width[k] = std::max(width[k], r[k].size());
    }
    std::string out;
    for (const auto &r : rows) {
        std::string line;
        for (std::size_t k = 0; k < r.size(); ++k) line += (k ? "  " : "") + pad(r[k], width[k]);
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line + "\n";
    }
    return out;
}

std::string bar(const Probability &p) {
    const auto units = static_cast<std::size_t>((p.value() * 20).numerator() / (p.value() * 20).denominator());
    return std::string(units, '#');
}

std::string distribution_table(const Distribution &d, const std::string &header, bool with_bars = false) {
    std::vector<std::vector<std::string>> rows{{header, "probability"}};
    for (const auto &e : d) {
        rows.push_back({e.label, e.probability.to_display()});
        if (with_bars) rows.back().push_back(bar(e.probability));
    }
    return columns(rows);
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

struct Preset {
    Universe universe;
    std::vector<BasisFrame> frames;
    std::vector<SubsetKet> rows;
};

Preset load_preset(const std::string &name) {
    if (name == "bell") return {presets::bell_universe(), presets::bell_frames(), presets::bell_rows()};
    return {presets::u3(), presets::u3_frames(), presets::u3_rows()};
}

const BasisFrame &find_frame(const Preset &p, const std::string &name) {
    for (const auto &f : p.frames) {
        if (f.name() == name) return f;
    }
    throw Error(ErrorKind::InvalidArgument, "no frame named '" + name + "' in this preset");
}

/// A ket written over the canonical labels, or over the frame's own labels.
SubsetKet parse_state(const Universe &canonical, const BasisFrame &f, const std::string &text) {
    try {
        return SubsetKet::parse(canonical, text);
    } catch (const Error &) {
        if (f.universe() == canonical) throw;
        return from_basis(SubsetKet::parse(f.universe(), text), f);
    }
}

class Runner {
  public:
    Runner(std::ostream &out) : out_(out) {}

    std::string format = "table";
    bool json() const { return format == "json"; }
    void emit(const Json &j) { out_ << j.dump(2) << "\n"; }
    std::ostream &out() { return out_; }

  private:
    std::ostream &out_;
};

}  // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Exact quantum mechanics over sets: brackets, Born rule, partitions, density matrices, dynamics, Bell, QC/2."};
    app.name("qmsets");
    app.require_subcommand(1);
    app.fallthrough();
    Runner runner(out);
    app.add_option("--format", runner.format, "Output format")->check(CLI::IsMember({"table", "json"}))->capture_default_str();

    std::function<void()> action;

    // ket-table
    std::string preset = "u3";
    auto *ket_table_cmd = app.add_subcommand("ket-table", "Every ket written in each frame of a preset");
    ket_table_cmd->add_option("--preset", preset, "u3 or bell")->check(CLI::IsMember({"u3", "bell"}))->capture_default_str();
    ket_table_cmd->callback([&] {
        action = [&] {
            const Preset p = load_preset(preset);
            const KetTable t = ket_table(p.frames, p.rows);
            if (runner.json()) return runner.emit(json::encode(t));
            out << to_text(t);
        };
    });

    // bracket
    std::string s_text;
    std::string t_text;
    std::string frame_name = "U";
    std::string universe_text;
    auto *bracket_cmd = app.add_subcommand("bracket", "<T|S> in a frame of a preset");
    bracket_cmd->add_option("S", s_text, "State, e.g. {a,b}")->required();
    bracket_cmd->add_option("T", t_text, "Bra, e.g. {a}")->required();
    bracket_cmd->add_option("--preset", preset, "u3 or bell")->check(CLI::IsMember({"u3", "bell"}))->capture_default_str();
    bracket_cmd->add_option("--frame", frame_name, "U, U' or U''")->capture_default_str();
    bracket_cmd->add_option("--universe", universe_text, "Custom universe, e.g. a,b,c,d (canonical frame only)");
    bracket_cmd->callback([&] {
        action = [&] {
            Preset p = load_preset(preset);
            if (!universe_text.empty()) p = Preset{Universe(split_labels(universe_text)), {}, {}};
            if (p.frames.empty()) p.frames.push_back(BasisFrame::canonical(p.universe));
            const BasisFrame &f = find_frame(p, normalize(frame_name));
            const SubsetKet s = parse_state(p.universe, f, normalize(s_text));
            const SubsetKet t = parse_state(p.universe, f, normalize(t_text));
            const std::size_t b = bracket_in(f, t, s);
            if (runner.json()) {
                return runner.emit(Json{{"frame", f.name()}, {"S", json::encode(s)}, {"T", json::encode(t)}, {"bracket", b}});
            }
            out << "<" << t.to_string() << "|" << s.to_string() << ">_" << f.name() << " = " << b << "\n";
        };
    });

    // born
    auto *born_cmd = app.add_subcommand("born", "Born-rule distribution of a state in a frame");
    born_cmd->add_option("S", s_text, "State, e.g. {a,b}")->required();
    born_cmd->add_option("--frame", frame_name, "U, U' or U''")->required();
    born_cmd->add_option("--preset", preset, "u3 or bell")->check(CLI::IsMember({"u3", "bell"}))->capture_default_str();
    born_cmd->callback([&] {
        action = [&] {
            const Preset p = load_preset(preset);
            const BasisFrame &f = find_frame(p, normalize(frame_name));
            const SubsetKet s = parse_state(p.universe, f, normalize(s_text));
            const Distribution d = born(s, f);
            if (runner.json()) {
                return runner.emit(Json{{"state", json::encode(s)},
                                        {"frame", f.name()},
                                        {"coordinates", json::encode(to_basis(s, f))},
                                        {"distribution", json::encode(d)}});
            }
            out << s.to_string() << " = " << to_basis(s, f).to_string() << " in " << f.name() << "\n";
            out << distribution_table(d, "outcome");
        };
    });

    // measure
    std::string attr_text;
    std::string state_text;
    std::uint64_t seed = 0;
    std::string outcome_text;
    auto *measure_cmd = app.add_subcommand("measure", "Measure an attribute on a state");
    measure_cmd->add_option("--attr", attr_text, "Attribute, e.g. a=1,b=2,c=3")->required();
    measure_cmd->add_option("--state", state_text, "State, e.g. {a,b,c}")->required();
    measure_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    measure_cmd->add_option("--outcome", outcome_text, "Force this eigenvalue instead of sampling");
    measure_cmd->add_option("--universe", universe_text, "Universe; defaults to the attribute's labels");
    measure_cmd->callback([&] {
        action = [&] {
            const Universe u = universe_text.empty() ? universe_from_attribute(attr_text) : Universe(split_labels(universe_text));
            const Attribute f = Attribute::parse(u, attr_text);
            const SubsetKet s = SubsetKet::parse(u, state_text);
            const auto probs = measure_probs(f, s);
            Rng rng(seed);
            const MeasurementOutcome m =
                outcome_text.empty() ? measure(f, s, rng) : measure_given(f, s, parse_rational(outcome_text));
            if (runner.json()) {
                Json outcomes = Json::array();
                for (const auto &e : probs) {
                    outcomes.push_back(json::encode(measure_given(f, s, e.eigenvalue)));
                }
                Json j{{"attribute", json::encode(f)}, {"state", json::encode(s)}, {"outcomes", std::move(outcomes)}};
                j[outcome_text.empty() ? "sampled" : "given"] = json::encode(m);
                if (outcome_text.empty()) j["seed"] = seed;
                return runner.emit(j);
            }
            std::vector<std::vector<std::string>> rows{{"eigenvalue", "probability", "post-state"}};
            for (const auto &e : probs) {
                rows.push_back({to_display(e.eigenvalue), e.probability.to_display(),
                                project(f, e.eigenvalue, s).to_string()});
            }
            out << columns(rows);
            out << (outcome_text.empty() ? "sampled (seed " + std::to_string(seed) + "): " : "given: ") << to_display(m.eigenvalue)
                << " with probability " << m.probability.to_display() << ", state " << m.post_state.to_string() << "\n";
        };
    });

    // entropy
    std::string partition_text;
    auto *entropy_cmd = app.add_subcommand("entropy", "Logical and Shannon entropy of a partition");
    entropy_cmd->add_option("--partition", partition_text, "Partition, e.g. {a,b}|{c}")->required();
    entropy_cmd->callback([&] {
        action = [&] {
            const Partition p = Partition::parse(partition_text);
            const Probability h = logical_entropy(p);
            const double big_h = shannon_entropy(p);
            if (runner.json()) {
                return runner.emit(Json{{"partition", json::encode(p)}, {"logical", json::encode(h)}, {"shannon", big_h}});
            }
            out << "partition " << p.to_string() << "\n";
            out << "h = " << h.to_display() << "\n";
            out << "H = " << format_double(big_h) << "\n";
        };
    });

    // density
    auto *density_cmd = app.add_subcommand("density", "Density matrix of a partition or a pure state");
    auto *density_partition = density_cmd->add_option("--partition", partition_text, "Partition, e.g. {a,b}|{c}");
    auto *density_state = density_cmd->add_option("--state", state_text, "State, e.g. {a,b}");
    density_cmd->add_option("--universe", universe_text, "Universe for --state")->default_str("a,b,c");
    density_partition->excludes(density_state);
    density_cmd->callback([&] {
        action = [&] {
            if (partition_text.empty() && state_text.empty()) throw CLI::RequiredError("--partition or --state");
            const DensityMatrix rho =
                !partition_text.empty()
                    ? rho_of_partition(Partition::parse(partition_text))
                    : rho_of_subset(SubsetKet::parse(Universe(split_labels(universe_text.empty() ? "a,b,c" : universe_text)),
                                                     state_text));
            if (runner.json()) {
                Json j = json::encode(rho);
                j["purity"] = json::encode(purity(rho));
                j["logical_entropy"] = json::encode(logical_entropy_rho(rho));
                return runner.emit(j);
            }
            out << rho.to_text();
            out << "purity = " << purity(rho).to_display() << "\n";
            out << "h = " << logical_entropy_rho(rho).to_display() << "\n";
        };
    });

    // measure-density
    auto *md_cmd = app.add_subcommand("measure-density", "Decoherence of a density matrix by an attribute");
    md_cmd->add_option("--attr", attr_text, "Attribute, e.g. a=1,b=2,c=3")->required();
    auto *md_state = md_cmd->add_option("--state", state_text, "Pure state; defaults to the whole universe");
    auto *md_partition = md_cmd->add_option("--partition", partition_text, "Mixed state as a partition");
    md_state->excludes(md_partition);
    md_cmd->callback([&] {
        action = [&] {
            const Universe u = universe_from_attribute(attr_text);
            const Attribute f = Attribute::parse(u, attr_text);
            const DensityMatrix before = !partition_text.empty() ? rho_of_partition(Partition::parse(u, partition_text))
                                         : !state_text.empty()    ? rho_of_subset(SubsetKet::parse(u, state_text))
                                                                  : rho_of_subset(SubsetKet::full(u));
            const DensityMatrix after = measure_density(f, before);
            const Probability increase = entropy_increase(before, after);
            if (runner.json()) {
                return runner.emit(Json{{"attribute", json::encode(f)},
                                        {"before", json::encode(before)},
                                        {"after", json::encode(after)},
                                        {"h_before", json::encode(logical_entropy_rho(before))},
                                        {"h_after", json::encode(logical_entropy_rho(after))},
                                        {"entropy_increase", json::encode(increase)}});
            }
            out << "before\n" << before.to_text() << "after\n" << after.to_text();
            out << "h before = " << logical_entropy_rho(before).to_display() << "\n";
            out << "h after = " << logical_entropy_rho(after).to_display() << "\n";
            out << "entropy increase = " << increase.to_display() << "\n";
        };
    });

    // double-slit
    bool at_slits = false;
    std::size_t trials = 0;
    auto *slit_cmd = app.add_subcommand("double-slit", "Wall distribution of the double-slit preset");
    slit_cmd->add_flag("--measure-at-slits", at_slits, "Distinguish the slits");
    slit_cmd->add_option("--sample", trials, "Also simulate this many particles");
    slit_cmd->add_option("--seed", seed, "Random seed for --sample")->capture_default_str();
    slit_cmd->callback([&] {
        action = [&] {
            const SlitConfig cfg = presets::double_slit();
            const Distribution d = double_slit(cfg, at_slits);
            std::vector<std::size_t> hits;
            if (trials > 0) {
                Rng rng(seed);
                hits = double_slit_sample(cfg, at_slits, trials, rng);
            }
            if (runner.json()) {
                Json j{{"slit_state", json::encode(cfg.slit_state)}, {"measure_at_slits", at_slits}, {"distribution", json::encode(d)}};
                if (trials > 0) {
                    Json counts = Json::object();
                    for (std::size_t k = 0; k < hits.size(); ++k) counts[d.entries[k].label] = hits[k];
                    j["sample"] = Json{{"trials", trials}, {"seed", seed}, {"counts", std::move(counts)}};
                }
                return runner.emit(j);
            }
            out << "slit state " << cfg.slit_state.to_string() << ", measurement at slits: " << (at_slits ? "yes" : "no") << "\n";
            std::vector<std::vector<std::string>> rows{{"wall", "probability", ""}};
            if (trials > 0) rows.front() = {"wall", "probability", "hits", ""};
            for (std::size_t k = 0; k < d.entries.size(); ++k) {
                const auto &e = d.entries[k];
                if (trials > 0) {
                    rows.push_back({e.label, e.probability.to_display(), std::to_string(hits[k]), bar(e.probability)});
                } else {
                    rows.push_back({e.label, e.probability.to_display(), bar(e.probability)});
                }
            }
            out << columns(rows);
        };
    });

    // bell
    std::string bell_text;
    auto *bell_cmd = app.add_subcommand("bell", "Bell inequality in the two-element preset");
    bell_cmd->add_option("--state", bell_text, "Product state, e.g. {(a,b),(b,a)}");
    bell_cmd->callback([&] {
        action = [&] {
            const std::vector<BasisFrame> frames = presets::bell_frames();
            const ProductUniverse pu(presets::bell_universe(), presets::bell_universe());
            const ProductState s = bell_text.empty() ? presets::bell_state() : ProductState::parse(pu, normalize(bell_text));
            std::vector<SubsetKet> states = presets::bell_rows();
            states.pop_back();
            const StateOutcomeTable sot = state_outcome_table(states, frames);
            const CounterfactualJoint cj = counterfactual_joint(s, frames[0], frames[1], frames[2]);
            const BellReport report = bell_violation(s, frames[0], frames[1], frames[2]);
            if (runner.json()) {
                Json coords = Json::object();
                for (const auto &f : frames) coords[f.name()] = json::encode(product_to_frame(s, f, f));
                return runner.emit(Json{{"state", json::encode(s)},
                                        {"separated", is_separated(s)},
                                        {"coordinates", std::move(coords)},
                                        {"ket_table", json::encode(presets::bell_ket_table())},
                                        {"state_outcome", json::encode(sot)},
                                        {"counterfactual", json::encode(cj)},
                                        {"report", json::encode(report)}});
            }
            out << "state " << s.to_string() << (is_separated(s) ? " (separated)" : " (entangled)") << "\n";
            for (const auto &f : frames) {
                out << "  in " << f.name() << "x" << f.name() << ": " << product_to_frame(s, f, f).to_string() << "\n";
            }
            out << "\n" << to_text(presets::bell_ket_table()) << "\n" << to_text(sot) << "\n";
            out << "counterfactual Pr(" << frames[0].universe().label(0) << "," << frames[1].universe().label(0) << ","
                << frames[2].universe().label(0) << ") = "
                << cj.at(frames[0].universe().label(0), frames[1].universe().label(0), frames[2].universe().label(0)).to_display()
                << "\n";
            out << "counterfactual marginals: Pr" << cj.first_label << " = " << cj.first.to_display() << ", Pr"
                << cj.second_label << " = " << cj.second.to_display() << ", Pr" << cj.third_label << " = "
                << cj.third.to_display() << " : " << (cj.holds() ? "HOLDS" : "VIOLATED") << "\n\n";
            for (const auto &t : report.terms) {
                out << "sequential Pr(" << t.left_outcome << "," << t.right_outcome << ") = " << t.probability.to_display() << "\n";
            }
            out << report.summary() << "\n";
        };
    });

    // teleport
    int alpha = 0;
    int beta = 0;
    auto *teleport_cmd = app.add_subcommand("teleport", "Teleport a qubit/2 with one classical bit");
    teleport_cmd->add_option("--alpha", alpha, "Coefficient of |0>")->required()->check(CLI::IsMember({0, 1}));
    teleport_cmd->add_option("--beta", beta, "Coefficient of |1>")->required()->check(CLI::IsMember({0, 1}));
    teleport_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    teleport_cmd->add_option("--outcome", outcome_text, "Force Alice's outcome (0 or 1)")->check(CLI::IsMember({"0", "1"}));
    teleport_cmd->callback([&] {
        action = [&] {
            Rng rng(seed);
            const TeleportTrace t = outcome_text.empty() ? teleport(alpha != 0, beta != 0, rng)
                                                         : teleport_given(alpha != 0, beta != 0, outcome_text == "1");
            if (runner.json()) return runner.emit(json::encode(t));
            std::vector<std::vector<std::string>> rows{{"input", t.input.coefficients(), t.input.to_string()},
                                                       {"phi0", t.phi0.coefficients(), t.phi0.to_string()},
                                                       {"phi1", t.phi1.coefficients(), t.phi1.to_string()},
                                                       {"phi2", t.phi2.coefficients(), t.phi2.to_string()},
                                                       {"collapsed", t.collapsed.coefficients(), t.collapsed.to_string()},
                                                       {"bob", t.bob_received.coefficients(), t.bob_received.to_string()},
                                                       {"bob final", t.bob_final.coefficients(), t.bob_final.to_string()}};
            out << columns(rows);
            out << "M = " << (t.classical_bit ? 1 : 0) << " (probability " << t.probability.to_display() << ")\n";
            out << (t.success() ? "teleported" : "FAILED") << "\n";
        };
    });

    // parity-sat
    std::string table_text;
    auto *parity_cmd = app.add_subcommand("parity-sat", "Parity of a Boolean function with one E_f application");
    parity_cmd->add_option("--table", table_text, "Truth table in input order, e.g. 1101")->required();
    parity_cmd->callback([&] {
        action = [&] {
            const BooleanFunction f = BooleanFunction::parse(table_text);
            const ParityResult r = parity_sat(f);
            if (runner.json()) {
                Json j = json::encode(r);
                j["table"] = f.to_string();
                j["arity"] = f.arity();
                if (f.arity() == 1) j["deutsch"] = std::string(to_string(deutsch(f)));
                return runner.emit(j);
            }
            out << "f = " << f.to_string() << " (arity " << f.arity() << ")\n";
            out << "E_f:\n" << ef_gate(f).matrix.to_string() << "\n";
            out << "final state " << r.final_state.coefficients() << " = " << r.final_state.to_string() << "\n";
            out << "slices " << r.slice_code() << "\n";
            out << "parity " << (r.parity ? "odd" : "even") << "\n";
            out << "E_f applications " << r.ef_applications << "\n";
            if (f.arity() == 1) out << "deutsch " << to_string(deutsch(f)) << "\n";
        };
    });

    // run
    std::string file;
    auto *run_cmd = app.add_subcommand("run", "Run a .qc2 circuit file");
    run_cmd->add_option("file", file, "Circuit file")->required()->check(CLI::ExistingFile);
    run_cmd->add_option("--seed", seed, "Random seed")->capture_default_str();
    run_cmd->callback([&] {
        action = [&] {
            std::ifstream in(file);
            std::stringstream buf;
            buf << in.rdbuf();
            dsl::CircuitAst ast;
            try {
                ast = dsl::parse(buf.str());
            } catch (const dsl::ParseError &e) {
                throw Error(e.kind(), file + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " +
                                          e.detail() + (e.token().empty() ? "" : " (at '" + e.token() + "')"));
            }
            const dsl::RunRecord r = dsl::run(ast, seed);
            if (runner.json()) return runner.emit(json::encode(r));
            std::vector<std::vector<std::string>> rows{{"init", r.initial.coefficients(), r.initial.to_string()}};
            for (const auto &s : r.steps) {
                std::string note = s.applied ? "" : "  (skipped)";
                for (const auto &m : s.measurements) {
                    note += "  line " + std::to_string(m.line) + " -> " + (m.outcome ? "1" : "0") + " (" +
                            m.probability.to_display() + ")";
                }
                rows.push_back({s.statement, s.state.coefficients(), s.state.to_string() + note});
            }
            out << columns(rows);
            out << "final " << r.final_state.to_string() << "\n";
        };
    });

    try {
        app.parse(argc, argv);
        action();
        return 0;
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return 2;
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace qmsets::cli
