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

#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vcsp/gain_tracker.hpp"
#include "vcsp/instance.hpp"
#include "vcsp/landscape.hpp"
#include "vcsp/text_format.hpp"

namespace vcsp {

// ---------------------------------------------------------------------------
// Randomness
//
// Trials use std::mt19937_64, whose output sequence is fixed by the C++
// standard, and draw bounded integers by rejection so the bitstream is the
// same on every platform. Per-trial seeds come from SplitMix64 over a
// counter.

inline std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t trial) {
    return splitmix64(master ^ splitmix64(trial));
}

class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error(ErrorKind::RangeError, "empty range");
        const std::uint64_t threshold = (0 - bound) % bound;
        while (true) {
            const std::uint64_t r = engine_();
            if (r >= threshold) return r % bound;
        }
    }

  private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// Traces

struct Step {
    VarId var;
    Weight gain;
    Weight fitness_after;

    friend bool operator==(const Step&, const Step&) = default;
};

enum class TiePolicy { LowestIndex, Error };

struct AscentOptions {
    TiePolicy tie = TiePolicy::LowestIndex;
    std::optional<std::uint64_t> max_steps;  // stop early and mark the result partial
};

/// What every ascent returns, with or without step recording.
struct AscentSummary {
    Assignment end;
    Weight start_fitness = 0;
    Weight final_fitness = 0;
    std::uint64_t steps = 0;
    std::uint64_t tie_events = 0;
    Weight min_gain = 0;  // 0 when no steps were taken
    bool partial = false;
};

struct Trace {
    std::string method;
    std::optional<std::uint64_t> seed;
    Assignment start;
    Weight start_fitness = 0;
    std::vector<Step> steps;
    Assignment end;
    std::uint64_t tie_events = 0;
    bool partial = false;
};

namespace detail {

/// Max-gain tournament tree. Each node keeps the maximal gain below it,
/// the lowest index attaining it, and how many leaves attain it.
class MaxGainTree {
  public:
    struct Node {
        Weight gain;
        VarId index;
        std::uint32_t count;
    };

    explicit MaxGainTree(std::span<const Weight> gains) {
        size_ = 1;
        while (size_ < gains.size()) size_ <<= 1;
        nodes_.assign(2 * size_, Node{std::numeric_limits<Weight>::min(), 0, 0});
        for (std::size_t i = 0; i < gains.size(); ++i) nodes_[size_ + i] = {gains[i], static_cast<VarId>(i), 1};
        for (std::size_t i = size_ - 1; i >= 1; --i) nodes_[i] = combine(nodes_[2 * i], nodes_[2 * i + 1]);
    }

    const Node& top() const noexcept { return nodes_[1]; }

    void update(VarId i, Weight gain) {
        std::size_t p = size_ + i;
        nodes_[p].gain = gain;
        for (p >>= 1; p >= 1; p >>= 1) nodes_[p] = combine(nodes_[2 * p], nodes_[2 * p + 1]);
    }

  private:
    static Node combine(const Node& a, const Node& b) {
        if (a.gain > b.gain) return a;
        if (b.gain > a.gain) return b;
        return {a.gain, a.count ? a.index : b.index, a.count + b.count};
    }

    std::size_t size_ = 1;
    std::vector<Node> nodes_;
};

/// Set of currently improving variables with O(1) insert/erase.
class ImprovingSet {
  public:
    explicit ImprovingSet(const GainTracker& t) : position_(t.instance().num_vars(), npos) {
        for (VarId i = 0; i < t.instance().num_vars(); ++i) refresh(t, i);
    }

    void refresh(const GainTracker& t, VarId i) {
        const bool want = t.gain(i) > 0;
        const bool have = position_[i] != npos;
        if (want && !have) {
            position_[i] = members_.size();
            members_.push_back(i);
        } else if (!want && have) {
            const VarId last = members_.back();
            members_[position_[i]] = last;
            position_[last] = position_[i];
            members_.pop_back();
            position_[i] = npos;
        }
    }

    std::size_t size() const noexcept { return members_.size(); }
    VarId operator[](std::size_t k) const noexcept { return members_[k]; }

  private:
    static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
    std::vector<VarId> members_;
    std::vector<std::size_t> position_;
};

inline AscentSummary begin_summary(const GainTracker& t) {
    AscentSummary s;
    s.start_fitness = t.fitness();
    s.final_fitness = t.fitness();
    return s;
}

inline void record(AscentSummary& s, const Step& step) {
    s.min_gain = s.steps == 0 ? step.gain : std::min(s.min_gain, step.gain);
    ++s.steps;
    s.final_fitness = step.fitness_after;
}

inline bool reached_cap(const AscentSummary& s, const AscentOptions& opts) {
    return opts.max_steps && s.steps >= *opts.max_steps;
}

struct Recorder {
    Trace* trace;
    void operator()(const Step& s) const { trace->steps.push_back(s); }
};

}  // namespace detail

struct NoSink {
    void operator()(const Step&) const noexcept {}
};

/// Greedy local search: always flip a variable of maximal gain. Ties are
/// counted and broken by lowest index, or rejected under TiePolicy::Error.
template <class Sink>
AscentSummary steepest_ascent(const Instance& inst, const Assignment& start, const AscentOptions& opts, Sink&& sink) {
    GainTracker t(inst, start);
    detail::MaxGainTree tree(t.gains());
    AscentSummary summary = detail::begin_summary(t);
    while (true) {
        const auto top = tree.top();
        if (top.count == 0 || top.gain <= 0) break;
        if (detail::reached_cap(summary, opts)) {
            summary.partial = true;
            break;
        }
        if (top.count > 1) {
            ++summary.tie_events;
            if (opts.tie == TiePolicy::Error)
                throw Error(ErrorKind::TieEncountered, std::to_string(top.count) + " moves share the maximal gain " +
                                                           std::to_string(top.gain) + " at step " +
                                                           std::to_string(summary.steps + 1));
        }
        const VarId v = top.index;
        const Weight gain = t.flip(v);
        tree.update(v, t.gain(v));
        for (const auto& nb : inst.neighbors(v)) tree.update(nb.var, t.gain(nb.var));
        const Step step{v, gain, t.fitness()};
        detail::record(summary, step);
        sink(step);
    }
    summary.end = t.assignment();
    return summary;
}

inline Trace steepest_ascent(const Instance& inst, const Assignment& start, const AscentOptions& opts = {}) {
    Trace trace{"steepest", std::nullopt, start, 0, {}, {}, 0, false};
    auto s = steepest_ascent(inst, start, opts, detail::Recorder{&trace});
    trace.start_fitness = s.start_fitness;
    trace.end = std::move(s.end);
    trace.tie_events = s.tie_events;
    trace.partial = s.partial;
    return trace;
}

/// Random ascent: each step flips a uniformly chosen improving variable.
template <class Sink>
AscentSummary random_ascent(const Instance& inst, const Assignment& start, std::uint64_t seed,
                            const AscentOptions& opts, Sink&& sink) {
    GainTracker t(inst, start);
    detail::ImprovingSet improving(t);
    Rng rng(seed);
    AscentSummary summary = detail::begin_summary(t);
    while (improving.size() > 0) {
        if (detail::reached_cap(summary, opts)) {
            summary.partial = true;
            break;
        }
        const VarId v = improving[rng.below(improving.size())];
        const Weight gain = t.flip(v);
        improving.refresh(t, v);
        for (const auto& nb : inst.neighbors(v)) improving.refresh(t, nb.var);
        const Step step{v, gain, t.fitness()};
        detail::record(summary, step);
        sink(step);
    }
    summary.end = t.assignment();
    return summary;
}

inline Trace random_ascent(const Instance& inst, const Assignment& start, std::uint64_t seed,
                           const AscentOptions& opts = {}) {
    Trace trace{"random", seed, start, 0, {}, {}, 0, false};
    auto s = random_ascent(inst, start, seed, opts, detail::Recorder{&trace});
    trace.start_fitness = s.start_fitness;
    trace.end = std::move(s.end);
    trace.partial = s.partial;
    return trace;
}

inline std::vector<VarId> natural_order(std::size_t n) {
    std::vector<VarId> order(n);
    for (VarId i = 0; i < n; ++i) order[i] = i;
    return order;
}

/// First-improvement ascent: scan variables cyclically in `scan_order`,
/// resuming after the last flipped position, and flip the first improving
/// one found.
template <class Sink>
AscentSummary first_improvement_ascent(const Instance& inst, const Assignment& start,
                                       std::span<const VarId> scan_order, const AscentOptions& opts, Sink&& sink) {
    const std::size_t n = inst.num_vars();
    if (scan_order.size() != n) throw Error(ErrorKind::LengthMismatch, "scan order must list every variable");
    std::vector<bool> seen(n, false);
    for (auto v : scan_order) {
        if (v >= n || seen[v]) throw Error(ErrorKind::RangeError, "scan order is not a permutation");
        seen[v] = true;
    }
    GainTracker t(inst, start);
    AscentSummary summary = detail::begin_summary(t);
    std::size_t cursor = 0;
    while (!t.at_peak()) {
        if (detail::reached_cap(summary, opts)) {
            summary.partial = true;
            break;
        }
        std::size_t j = 0;
        while (t.gain(scan_order[(cursor + j) % n]) <= 0) ++j;
        const VarId v = scan_order[(cursor + j) % n];
        cursor = (cursor + j + 1) % n;
        const Weight gain = t.flip(v);
        const Step step{v, gain, t.fitness()};
        detail::record(summary, step);
        sink(step);
    }
    summary.end = t.assignment();
    return summary;
}

inline Trace first_improvement_ascent(const Instance& inst, const Assignment& start,
                                      std::span<const VarId> scan_order, const AscentOptions& opts = {}) {
    Trace trace{"first", std::nullopt, start, 0, {}, {}, 0, false};
    auto s = first_improvement_ascent(inst, start, scan_order, opts, detail::Recorder{&trace});
    trace.start_fitness = s.start_fitness;
    trace.end = std::move(s.end);
    trace.partial = s.partial;
    return trace;
}

// ---------------------------------------------------------------------------
// Trials

enum class Method { Steepest, Random, FirstImprovement };

inline std::string to_string(Method m) {
    switch (m) {
        case Method::Steepest: return "steepest";
        case Method::Random: return "random";
        case Method::FirstImprovement: return "first";
    }
    return "unknown";
}

inline Method parse_method(std::string_view s) {
    if (s == "steepest") return Method::Steepest;
    if (s == "random") return Method::Random;
    if (s == "first") return Method::FirstImprovement;
    throw Error(ErrorKind::ParseError, "method must be steepest, random or first");
}

/// Uniformly shuffled variable order drawn from `seed`.
inline std::vector<VarId> shuffled_order(std::size_t n, std::uint64_t seed) {
    auto order = natural_order(n);
    Rng rng(seed);
    for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    return order;
}

struct TrialStats {
    Method method = Method::Steepest;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> step_counts;  // by trial index
    std::vector<Assignment> ends;
    std::uint64_t total_steps = 0;
    std::uint64_t min = 0;
    std::uint64_t max = 0;
    bool any_partial = false;

    double mean() const { return trials ? static_cast<double>(total_steps) / static_cast<double>(trials) : 0.0; }
};

/// Runs independent trials from one start. Trial t uses seed
/// derive_seed(seed, t): as the random-ascent seed, or to shuffle the scan
/// order for first-improvement. Steepest ascent ignores it.
inline TrialStats run_trials(const Instance& inst, const Assignment& start, Method method, std::uint64_t trials,
                             std::uint64_t seed, const AscentOptions& opts = {}) {
    if (trials == 0) throw Error(ErrorKind::EmptyTrial, "at least one trial is required");
    TrialStats stats;
    stats.method = method;
    stats.seed = seed;
    stats.trials = trials;
    for (std::uint64_t k = 0; k < trials; ++k) {
        const std::uint64_t trial_seed = derive_seed(seed, k);
        AscentSummary s;
        switch (method) {
            case Method::Steepest: s = steepest_ascent(inst, start, opts, NoSink{}); break;
            case Method::Random: s = random_ascent(inst, start, trial_seed, opts, NoSink{}); break;
            case Method::FirstImprovement: {
                const auto order = shuffled_order(inst.num_vars(), trial_seed);
                s = first_improvement_ascent(inst, start, order, opts, NoSink{});
                break;
            }
        }
        stats.step_counts.push_back(s.steps);
        stats.total_steps += s.steps;
        stats.any_partial = stats.any_partial || s.partial;
        stats.ends.push_back(std::move(s.end));
    }
    stats.min = *std::min_element(stats.step_counts.begin(), stats.step_counts.end());
    stats.max = *std::max_element(stats.step_counts.begin(), stats.step_counts.end());
    return stats;
}

// ---------------------------------------------------------------------------
// Trace checks and CSV

/// Replays a trace from its start. Returns a description of the first
/// inconsistency, or nothing when every recorded value checks out.
inline std::optional<std::string> trace_violation(const Instance& inst, const Trace& trace) {
    if (trace.start.size() != inst.num_vars()) return "start has the wrong length";
    Assignment x = trace.start;
    Weight f = fitness(inst, x);
    if (f != trace.start_fitness) return "start fitness differs";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        const std::string at = "step " + std::to_string(k + 1) + ": ";
        if (s.var >= inst.num_vars()) return at + "variable out of range";
        const Weight gain = flip_gain(inst, s.var, x);
        if (gain <= 0) return at + "flip does not increase fitness";
        if (gain != s.gain) return at + "recorded gain differs";
        x.toggle(s.var);
        const Weight after = fitness(inst, x);
        if (after != checked_add(f, gain) || after != s.fitness_after) return at + "recorded fitness differs";
        f = after;
    }
    if (x != trace.end) return "replay does not reach the recorded end";
    if (!trace.partial && !is_local_peak(inst, trace.end)) return "end is not a local peak";
    return std::nullopt;
}

inline std::string hex64(std::uint64_t v) {
    std::ostringstream os;
    os << std::hex << std::setw(16) << std::setfill('0') << v;
    return os.str();
}

/// CSV with '#' metadata lines, then `step,var_index,var_label,gain,fitness_after`.
inline void write_trace_csv(std::ostream& os, const Instance& inst, const Trace& trace, bool raw = false) {
    os << "# method=" << trace.method << "\n";
    os << "# seed=" << (trace.seed ? std::to_string(*trace.seed) : std::string("none")) << "\n";
    os << "# instance_hash=" << hex64(instance_hash(inst)) << "\n";
    os << "# start=" << format_assignment(inst, trace.start, raw) << "\n";
    os << "# end=" << format_assignment(inst, trace.end, raw) << "\n";
    os << "# ties=" << trace.tie_events << (trace.partial ? "\n# partial=true\n" : "\n");
    os << "step,var_index,var_label,gain,fitness_after\n";
    for (std::size_t k = 0; k < trace.steps.size(); ++k) {
        const auto& s = trace.steps[k];
        os << (k + 1) << "," << s.var << ",";
        if (inst.has_labels())
            os << '"' << inst.name(s.var) << '"';
        else
            os << s.var;
        os << "," << s.gain << "," << s.fitness_after << "\n";
    }
}

}  // namespace vcsp
