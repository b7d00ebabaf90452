#include "bncover/cli.hpp"

#include <chrono>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "bncover/explore.hpp"
#include "bncover/graph.hpp"
#include "bncover/model_io.hpp"
#include "bncover/process.hpp"
#include "bncover/rbn.hpp"

namespace bncover::cli {

namespace {

using Clock = std::chrono::steady_clock;

long elapsed_ms(Clock::time_point start) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out;
}

std::string format_multiset(const Multiset& ms) {
    std::string out = "{";
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (i) out += ", ";
        out += to_string(ms[i]);
    }
    return out + "}";
}

struct CommonOpts {
    std::string model_path;
    std::string target_text;
    std::size_t max_iterations = 0;
    bool has_max_iterations = false;
    bool complete = false;
    bool quiet = false;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_iteration_cap = true) {
    cmd->add_option("model", o.model_path, "model file")->required();
    cmd->add_option("--target", o.target_text, "configuration to cover")->required();
    if (with_iteration_cap)
        cmd->add_option("--max-iterations", o.max_iterations,
                        "cap on backward saturation iterations");
    cmd->add_flag("--complete-receives", o.complete,
                  "add receive self-loops so broadcasts are never blocked (finite models only)");
    cmd->add_flag("--quiet", o.quiet, "print only the verdict line");
}

ModelFile load(const CommonOpts& o) {
    ModelFile m = load_model(o.model_path);
    if (o.complete) m.spec = complete_receives(m.spec);
    return m;
}

std::optional<std::size_t> iteration_cap(const CommonOpts& o) {
    if (o.has_max_iterations) return o.max_iterations;
    return std::nullopt;
}

// "clique" | "path:K" | "fixed" | "diamdeg:K,D,N"
struct StaticClass {
    enum class Kind { Clique, Path, Fixed, DiamDeg } kind;
    std::size_t k = 0, d = 0, n_max = 0;
};

std::size_t parse_nat(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        unsigned long long v = std::stoull(s, &pos);
        if (pos != s.size()) throw std::invalid_argument(s);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw ParseError("class: bad " + what + " '" + s + "'");
    }
}

StaticClass parse_class(const std::string& text) {
    if (text == "clique") return {StaticClass::Kind::Clique};
    if (text == "fixed") return {StaticClass::Kind::Fixed};
    if (text.rfind("path:", 0) == 0) {
        StaticClass c{StaticClass::Kind::Path};
        c.k = parse_nat(text.substr(5), "path bound");
        return c;
    }
    if (text.rfind("diamdeg:", 0) == 0) {
        std::string rest = text.substr(8);
        std::vector<std::string> parts;
        std::istringstream is(rest);
        std::string item;
        while (std::getline(is, item, ',')) parts.push_back(item);
        if (parts.size() != 3)
            throw ParseError("class: diamdeg takes three parameters, e.g. diamdeg:1,2,3");
        StaticClass c{StaticClass::Kind::DiamDeg};
        c.k = parse_nat(parts[0], "diameter bound");
        c.d = parse_nat(parts[1], "degree bound");
        c.n_max = parse_nat(parts[2], "vertex cap");
        return c;
    }
    throw ParseError("class: expected clique, path:K, fixed or diamdeg:K,D,N, got '" + text +
                     "'");
}

int exit_status(Verdict verdict) { return verdict == Verdict::LimitExceeded ? 3 : 0; }

int run_check_rbn(const CommonOpts& o, std::ostream& out) {
    auto start = Clock::now();
    ModelFile model = load(o);
    ProcessConfig target = parse_target(o.target_text, model.spec);
    RbnCoverResult res = rbn_coverable(model.spec, target, iteration_cap(o));
    out << "VERDICT: " << to_string(res.verdict) << "\n";
    if (!o.quiet) {
        if (res.final_check.witness) out << "witness: " << to_string(*res.final_check.witness) << "\n";
        out << "unlocked: {" << join(unlocked_letters(res.unlock)) << "}\n";
        out << "loop_iterations: " << res.unlock.iterations << "\n";
        out << "check_iterations: " << res.final_check.iterations << "\n";
        out << "final_basis: " << res.final_check.basis.size() << "\n";
        out << "peak_basis: " << res.final_check.peak_basis_size << "\n";
        out << "elapsed_ms: " << elapsed_ms(start) << "\n";
    }
    return exit_status(res.verdict);
}

int run_check_static(const CommonOpts& o, const std::string& class_text, std::ostream& out) {
    auto start = Clock::now();
    ModelFile model = load(o);
    ProcessConfig target = parse_target(o.target_text, model.spec);
    StaticClass cls = parse_class(class_text);
    CoverabilityResult<LabelledGraph> res;
    switch (cls.kind) {
        case StaticClass::Kind::Clique:
            res = static_coverable(model.spec, target, TopologyClass::clique(), iteration_cap(o));
            break;
        case StaticClass::Kind::Path:
            res = static_coverable(model.spec, target, TopologyClass::path_bounded(cls.k),
                                   iteration_cap(o));
            break;
        case StaticClass::Kind::Fixed: {
            if (!model.topology)
                throw ParseError("class fixed requires a topology section in the model file");
            // Enforces the fixed-topology invariants (simple, connected).
            TopologyClass fixed = TopologyClass::fixed_graph(model.topology->shape);
            res = fixed_graph_coverable(model.spec, target, fixed.shape, iteration_cap(o));
            break;
        }
        case StaticClass::Kind::DiamDeg:
            res = bounded_diam_deg_coverable(model.spec, target, cls.k, cls.d, cls.n_max,
                                             iteration_cap(o));
            break;
    }
    out << "VERDICT: " << to_string(res.verdict) << "\n";
    if (!o.quiet) {
        if (res.witness) out << "witness: " << to_string(*res.witness) << "\n";
        out << "iterations: " << res.iterations << "\n";
        out << "final_basis: " << res.basis.size() << "\n";
        out << "peak_basis: " << res.peak_basis_size << "\n";
        out << "elapsed_ms: " << elapsed_ms(start) << "\n";
    }
    return exit_status(res.verdict);
}

int run_oracle(const CommonOpts& o, const ExplorationBounds& bounds, const std::string& semantics,
               std::ostream& out) {
    auto start = Clock::now();
    ModelFile model = load(o);
    ProcessConfig target = parse_target(o.target_text, model.spec);
    if (semantics == "rbn") {
        RbnExploreResult res = explore_rbn(model.spec, target, bounds);
        out << "RESULT: " << (res.found ? "FOUND" : res.exhausted ? "NOT_FOUND EXHAUSTED"
                                                                  : "NOT_FOUND")
            << "\n";
        if (!o.quiet) {
            if (res.found) {
                out << "initial: " << format_multiset(res.initial) << "\n";
                Multiset current = res.initial;
                std::size_t i = 0;
                for (const auto& st : res.trace) {
                    current = replay_rbn(model.spec, std::move(current), {st});
                    out << "step " << ++i << ": !!" << st.letter << " from "
                        << to_string(st.broadcaster_before) << " via " << st.rule_id << " -> "
                        << to_string(st.broadcaster_after) << "; receivers:";
                    if (st.receivers.empty()) out << " none";
                    for (std::size_t r = 0; r < st.receivers.size(); ++r) {
                        out << (r ? ", " : " ") << to_string(st.receivers[r].before) << " via "
                            << st.receivers[r].rule_id << " -> "
                            << to_string(st.receivers[r].after);
                    }
                    out << "; now " << format_multiset(current) << "\n";
                }
            }
            out << "states_explored: " << res.states_explored << "\n";
            out << "elapsed_ms: " << elapsed_ms(start) << "\n";
        }
        return 0;
    }
    if (semantics != "static") throw ParseError("semantics: expected rbn or static");
    if (!model.topology)
        throw ParseError("static exploration requires a topology section in the model file");
    const Topology& topo = *model.topology;
    StaticExploreResult res = explore_static(model.spec, target, topo.shape, bounds);
    out << "RESULT: " << (res.found ? "FOUND" : res.exhausted ? "NOT_FOUND EXHAUSTED"
                                                              : "NOT_FOUND")
        << "\n";
    if (!o.quiet) {
        auto show_labels = [&](const std::vector<ProcessConfig>& labels) {
            std::string s = "{";
            for (std::size_t v = 0; v < labels.size(); ++v) {
                if (v) s += ", ";
                s += topo.vertex_names[v] + "=" + to_string(labels[v]);
            }
            return s + "}";
        };
        if (res.found) {
            out << "initial: " << show_labels(res.initial) << "\n";
            std::vector<ProcessConfig> current = res.initial;
            std::size_t i = 0;
            for (const auto& st : res.trace) {
                current = replay_static(model.spec, topo.shape, std::move(current), {st});
                out << "step " << ++i << ": !!" << st.letter << " at "
                    << topo.vertex_names[st.broadcaster] << " via " << st.rule_id
                    << "; receivers:";
                if (st.receivers.empty()) out << " none";
                for (std::size_t r = 0; r < st.receivers.size(); ++r) {
                    out << (r ? ", " : " ") << topo.vertex_names[st.receivers[r].vertex] << " via "
                        << st.receivers[r].rule_id;
                }
                out << "; now " << show_labels(current) << "\n";
            }
        }
        out << "states_explored: " << res.states_explored << "\n";
        out << "elapsed_ms: " << elapsed_ms(start) << "\n";
    }
    return 0;
}

int run_info(const std::string& model_path, std::ostream& out) {
    ModelFile model = load_model(model_path);
    const ProcessSpec& spec = model.spec;
    out << "kind: " << (spec.kind == ModelKind::Finite ? "finite" : "vass") << "\n";
    if (spec.kind == ModelKind::Vass) out << "dimension: " << spec.dimension << "\n";
    out << "states: " << spec.states.size() << "\n";
    out << "initial: " << spec.initial_states.size() << "\n";
    out << "letters: " << spec.alphabet.size() << "\n";
    std::size_t broadcasts = 0, receives = 0;
    for (const auto& t : spec.transitions)
        (t.kind == ActionKind::Broadcast ? broadcasts : receives) += 1;
    out << "broadcast_rules: " << broadcasts << "\n";
    out << "receive_rules: " << receives << "\n";
    for (const auto& a : spec.alphabet) {
        std::size_t b = 0, r = 0;
        for (const auto& t : spec.transitions) {
            if (t.letter != a) continue;
            (t.kind == ActionKind::Broadcast ? b : r) += 1;
        }
        out << "letter " << a << ": broadcasts=" << b << " receives=" << r << "\n";
    }
    for (const auto& t : spec.transitions) {
        if (t.kind != ActionKind::Broadcast) continue;
        out << "min_enabling " << t.id << " (" << to_string(t.label())
            << "): " << to_string(min_enabling(t).front()) << "\n";
    }
    if (model.topology)
        out << "topology: " << model.topology->shape.size() << " vertices, "
            << model.topology->shape.edge_count() << " edges\n";
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"coverability checking for broadcast networks of well-structured processes"};
    app.require_subcommand(1);

    CommonOpts rbn_opts;
    CLI::App* rbn_cmd = app.add_subcommand(
        "check-rbn", "decide coverability under reconfigurable semantics");
    add_common(rbn_cmd, rbn_opts);

    CommonOpts static_opts;
    std::string class_text;
    CLI::App* static_cmd =
        app.add_subcommand("check-static", "decide coverability over a topology class");
    add_common(static_cmd, static_opts);
    static_cmd->add_option("--class", class_text, "clique | path:K | fixed | diamdeg:K,D,N")
        ->required();

    CommonOpts oracle_opts;
    ExplorationBounds bounds;
    std::string semantics = "rbn";
    CLI::App* oracle_cmd =
        app.add_subcommand("oracle", "bounded explicit-state search for a covering run");
    add_common(oracle_cmd, oracle_opts, /*with_iteration_cap=*/false);
    oracle_cmd->add_option("--max-nodes", bounds.max_nodes, "largest network size explored")
        ->required();
    oracle_cmd->add_option("--max-depth", bounds.max_depth, "largest number of broadcast steps")
        ->required();
    oracle_cmd->add_option("--max-counter", bounds.max_counter,
                           "prune vass configurations above this counter value");
    oracle_cmd->add_option("--semantics", semantics, "rbn (default) or static");

    std::string info_path;
    CLI::App* info_cmd = app.add_subcommand("info", "summarize a model file");
    info_cmd->add_option("model", info_path, "model file")->required();

    try {
        std::vector<const char*> argv;
        argv.reserve(args.size());
        for (const auto& a : args) argv.push_back(a.c_str());
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    rbn_opts.has_max_iterations = rbn_cmd->count("--max-iterations") > 0;
    static_opts.has_max_iterations = static_cmd->count("--max-iterations") > 0;

    try {
        if (rbn_cmd->parsed()) return run_check_rbn(rbn_opts, out);
        if (static_cmd->parsed()) return run_check_static(static_opts, class_text, out);
        if (oracle_cmd->parsed()) return run_oracle(oracle_opts, bounds, semantics, out);
        if (info_cmd->parsed()) return run_info(info_path, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace bncover::cli
