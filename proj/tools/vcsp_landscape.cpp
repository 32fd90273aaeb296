// Copyright 2026 The vcsp-landscape Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// vcsp-landscape: generate, evaluate, search and analyse binary Boolean
// VCSP instances. Results go to stdout, diagnostics to stderr. Exit codes:
// 0 success, 1 a check failed, 2 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "vcsp/vcsp.hpp"

namespace {

using namespace vcsp;

constexpr int kFailed = 1;
constexpr int kError = 2;

struct Options {
    std::string instance;
    std::string out;
    std::string start;
    std::string assignment;
    std::string method = "steepest";
    std::string tie = "lowest";
    std::string trace;
    std::string dot;
    std::string decomposition;
    std::string sign = "-";
    std::string ascent_graph_start;
    std::uint64_t seed = 1;
    std::uint64_t trials = 1;
    std::optional<std::uint64_t> max_steps;
    std::optional<std::size_t> cap;
    int n = 0;
    std::optional<int> m;
    bool raw = false;
    bool no_validate = false;
    bool peaks = false;
    bool semismooth = false;
};

Assignment read_start(const Instance& inst, const std::string& bits, bool raw) {
    if (bits.empty()) return Assignment(inst.num_vars());
    return parse_assignment(inst, bits, raw);
}

int cmd_gen(const Options& o) {
    const auto sign = family::parse_sign(o.sign);
    const int m = o.m.value_or(o.n);
    const Instance inst = family::build_chain(o.n, m, sign, {.self_validate = !o.no_validate});
    if (o.out.empty()) {
        write_instance(std::cout, inst);
    } else {
        save_instance(o.out, inst);
    }
    if (!o.decomposition.empty()) {
        std::ofstream bags(o.decomposition);
        if (!bags) throw Error(ErrorKind::ParseError, "cannot write " + o.decomposition);
        bags << "# canonical width-2 path decomposition, m=" << m << "\n";
        write_bags(bags, family::canonical_decomposition(m));
    }
    auto& summary = o.out.empty() ? std::cerr : std::cout;
    summary << "vars=" << inst.num_vars() << " unaries=" << inst.num_unaries() << " binaries=" << inst.num_binaries()
            << " constraints=" << inst.num_unaries() + inst.num_binaries() << "\n";
    return 0;
}

int cmd_eval(const Options& o) {
    const Instance inst = load_instance(o.instance);
    const Assignment x = read_start(inst, o.assignment, o.raw);
    const auto moves = improving_moves(inst, x);
    std::cout << "fitness=" << fitness(inst, x) << " peak=" << (moves.empty() ? "true" : "false")
              << " improving=" << moves.size() << "\n";
    for (const auto& mv : moves) std::cout << "move " << inst.name(mv.var) << " " << mv.gain << "\n";
    return 0;
}

int cmd_ascend(const Options& o) {
    const Instance inst = load_instance(o.instance);
    const Assignment start = read_start(inst, o.start, o.raw);
    const Method method = parse_method(o.method);
    AscentOptions opts;
    opts.max_steps = o.max_steps;
    if (o.tie == "error")
        opts.tie = TiePolicy::Error;
    else if (o.tie != "lowest")
        throw Error(ErrorKind::ParseError, "--tie must be lowest or error");

    if (o.trials > 1) {
        const auto stats = run_trials(inst, start, method, o.trials, o.seed, opts);
        std::cout << "method=" << to_string(method) << " trials=" << stats.trials << " seed=" << stats.seed
                  << " mean=" << stats.mean() << " min=" << stats.min << " max=" << stats.max << "\n";
        for (std::size_t k = 0; k < stats.trials; ++k)
            std::cout << "trial " << k << " steps=" << stats.step_counts[k]
                      << " peak=" << format_assignment(inst, stats.ends[k], o.raw) << "\n";
        return 0;
    }

    Trace trace;
    switch (method) {
        case Method::Steepest: trace = steepest_ascent(inst, start, opts); break;
        case Method::Random: trace = random_ascent(inst, start, o.seed, opts); break;
        case Method::FirstImprovement: {
            const auto order = natural_order(inst.num_vars());
            trace = first_improvement_ascent(inst, start, order, opts);
            break;
        }
    }
    if (!o.trace.empty()) {
        std::ofstream csv(o.trace);
        if (!csv) throw Error(ErrorKind::ParseError, "cannot write " + o.trace);
        write_trace_csv(csv, inst, trace, o.raw);
    }
    const Weight final_fitness = trace.steps.empty() ? trace.start_fitness : trace.steps.back().fitness_after;
    std::cout << "steps=" << trace.steps.size() << " final_fitness=" << final_fitness
              << " peak=" << format_assignment(inst, trace.end, o.raw) << " ties=" << trace.tie_events
              << (trace.partial ? " partial=true" : "") << "\n";
    return 0;
}

int cmd_verify(const Options& o) {
    const auto report = run_verify(o.n, o.m.value_or(o.n));
    print_report(std::cout, report);
    return report.overall() ? 0 : kFailed;
}

int cmd_oracle(const Options& o) {
    const Instance inst = load_instance(o.instance);
    OracleCaps caps;
    if (o.cap) {
        caps.peak_vars = *o.cap;
        caps.semismooth_vars = *o.cap;
        caps.ascent_graph_nodes = *o.cap;
    }
    const int selected = int(o.peaks) + int(o.semismooth) + int(!o.ascent_graph_start.empty());
    if (selected != 1) throw Error(ErrorKind::ParseError, "choose exactly one of --peaks, --semismooth, --ascent-graph");

    if (o.peaks) {
        const auto peaks = enumerate_peaks(inst, caps);
        for (const auto& p : peaks) std::cout << "peak " << format_assignment(inst, p.x, o.raw) << " " << p.fitness << "\n";
        std::cout << "peaks=" << peaks.size() << "\n";
        return 0;
    }
    if (o.semismooth) {
        const auto r = check_semismooth(inst, caps);
        if (r.semismooth) {
            std::cout << "semismooth=true faces=" << r.faces_checked << "\n";
            return 0;
        }
        const auto& face = *r.counterexample;
        std::cout << "semismooth=false free=";
        for (std::size_t i = 0; i < face.free_vars.size(); ++i) std::cout << (i ? "," : "") << inst.name(face.free_vars[i]);
        std::cout << " background=" << format_assignment(inst, face.background, o.raw) << "\n";
        for (const auto& p : face.peaks)
            std::cout << "face_peak " << format_assignment(inst, p, o.raw) << " " << fitness(inst, p) << "\n";
        return kFailed;
    }
    const Assignment start = parse_assignment(inst, o.ascent_graph_start, o.raw);
    const auto g = ascent_graph(inst, start, caps);
    std::cout << "nodes=" << g.nodes.size() << " edges=" << g.edges.size() << " sinks=" << g.sinks.size() << "\n";
    for (auto s : g.sinks)
        std::cout << "sink " << format_assignment(inst, g.nodes[s], o.raw) << " " << fitness(inst, g.nodes[s])
                  << " shortest=" << shortest_ascent_length(g, g.nodes[s]) << "\n";
    return 0;
}

int cmd_structure(const Options& o) {
    const Instance inst = load_instance(o.instance);
    const auto g = constraint_graph(inst);
    std::cout << "vertices=" << g.num_vertices << " edges=" << g.edges.size() << " degree=" << max_degree(g)
              << " cycle=" << (has_cycle(g) ? "true" : "false") << "\n";
    int status = 0;
    if (!o.decomposition.empty()) {
        const auto report = validate_path_decomposition(g, load_bags(o.decomposition));
        if (report.valid()) {
            std::cout << "width=" << *report.width << " valid=true degree=" << max_degree(g) << "\n";
        } else {
            std::cout << "valid=false violation=" << report.describe() << "\n";
            status = kFailed;
        }
    }
    if (!o.dot.empty()) {
        const auto orientation = orient(inst);
        std::ofstream dot(o.dot);
        if (!dot) throw Error(ErrorKind::ParseError, "cannot write " + o.dot);
        dot << export_dot(inst, &orientation);
        std::cout << "oriented=" << (orientation.oriented() ? "true" : "false") << " dot=" << o.dot << "\n";
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fitness landscapes of binary Boolean VCSPs and the exponential steepest-ascent family"};
    app.require_subcommand(1);
    Options o;

    auto* gen = app.add_subcommand("gen", "Write the C+/- chain instance in vcsp-text format");
    gen->add_option("--n", o.n, "Family parameter n")->required()->check(CLI::PositiveNumber);
    gen->add_option("--m", o.m, "Number of gadgets (default n)");
    gen->add_option("--sign", o.sign, "+ or -")->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    gen->add_option("--out", o.out, "Instance output path (default stdout)");
    gen->add_option("--decomposition", o.decomposition, "Also write the canonical path decomposition");
    gen->add_flag("--no-validate", o.no_validate, "Skip construction self-checks");

    auto* eval = app.add_subcommand("eval", "Fitness and improving moves of one assignment");
    eval->add_option("--instance", o.instance)->required();
    eval->add_option("--assignment,--start", o.assignment, "Bit string (default all zeros)");
    eval->add_flag("--raw-order", o.raw, "Bit strings in dense index order");

    auto* ascend = app.add_subcommand("ascend", "Run a local-search ascent");
    ascend->add_option("--instance", o.instance)->required();
    ascend->add_option("--start", o.start, "Start bit string (default all zeros)");
    ascend->add_option("--method", o.method)->check(CLI::IsMember({"steepest", "random", "first"}));
    ascend->add_option("--seed", o.seed);
    ascend->add_option("--trials", o.trials)->check(CLI::NonNegativeNumber);
    ascend->add_option("--trace", o.trace, "CSV trace output path");
    ascend->add_option("--tie", o.tie)->check(CLI::IsMember({"lowest", "error"}));
    ascend->add_option("--max-steps", o.max_steps);
    ascend->add_flag("--raw-order", o.raw);

    auto* verify = app.add_subcommand("verify", "Check structure, orientation, peaks and ascent length");
    verify->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
    verify->add_option("--m", o.m, "Number of gadgets (default n)");

    auto* oracle = app.add_subcommand("oracle", "Exhaustive landscape oracles");
    oracle->add_option("--instance", o.instance)->required();
    oracle->add_flag("--peaks", o.peaks);
    oracle->add_flag("--semismooth", o.semismooth);
    oracle->add_option("--ascent-graph", o.ascent_graph_start, "Start bit string");
    oracle->add_option("--cap", o.cap, "Size cap (variables, or nodes for --ascent-graph)");
    oracle->add_flag("--raw-order", o.raw);

    auto* structure = app.add_subcommand("structure", "Constraint-graph statistics and decomposition checks");
    structure->add_option("--instance", o.instance)->required();
    structure->add_option("--dot", o.dot, "Write a DOT graph, oriented when possible");
    structure->add_option("--decomposition", o.decomposition, "Bag file to validate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*gen) return cmd_gen(o);
        if (*eval) return cmd_eval(o);
        if (*ascend) return cmd_ascend(o);
        if (*verify) return cmd_verify(o);
        if (*oracle) return cmd_oracle(o);
        if (*structure) return cmd_structure(o);
    } catch (const vcsp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
