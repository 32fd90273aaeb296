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
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <queue>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vcsp/gain_tracker.hpp"
#include "vcsp/instance.hpp"

namespace vcsp {

/// Size limits for the exhaustive oracles. Exceeding one raises TooLarge.
struct OracleCaps {
    std::size_t peak_vars = 24;
    std::size_t semismooth_vars = 12;
    std::size_t ascent_graph_nodes = std::size_t{1} << 20;
    std::size_t sign_depends_degree = 30;
};

/// Witness that `target` sign-depends on `source`: a background on the
/// neighbourhood of target (source set to 0 there) where flipping source
/// changes the three-valued sign of target's gradient.
struct SignDependence {
    VarId source;
    VarId target;
    std::vector<std::pair<VarId, bool>> background;
    Weight gradient_before;  // source = 0
    Weight gradient_after;   // source = 1
};

/// Does `target` sign-depend on `source`? Enumerates the 2^(deg-1)
/// backgrounds of target's other neighbours only.
inline std::optional<SignDependence> sign_depends(const Instance& inst, VarId target, VarId source,
                                                  const OracleCaps& caps = {}) {
    inst.check_index(target);
    inst.check_index(source);
    if (target == source) throw Error(ErrorKind::SelfLoop, "sign dependence of a variable on itself");
    const Weight link = inst.binary(target, source);
    if (link == 0) return std::nullopt;

    std::vector<Instance::Neighbor> others;
    for (const auto& nb : inst.neighbors(target))
        if (nb.var != source) others.push_back(nb);
    if (others.size() > caps.sign_depends_degree)
        throw Error(ErrorKind::TooLarge, "degree of " + std::to_string(target) + " exceeds sign-dependence cap");

    const std::uint64_t count = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        Weight base = inst.unary(target);
        for (std::size_t k = 0; k < others.size(); ++k)
            if (mask >> k & 1) base = checked_add(base, others[k].weight);
        const Weight with = checked_add(base, link);
        if (sign(base) != sign(with)) {
            SignDependence dep{source, target, {}, base, with};
            std::size_t k = 0;
            for (const auto& nb : inst.neighbors(target)) {
                if (nb.var == source) {
                    dep.background.emplace_back(source, false);
                } else {
                    dep.background.emplace_back(nb.var, (mask >> k & 1) != 0);
                    ++k;
                }
            }
            return dep;
        }
    }
    return std::nullopt;
}

enum class OrientationVerdict { Oriented, NotOriented };

struct Arc {
    VarId from;
    VarId to;

    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Orientation of the constraint graph. An arc from -> to means `to`
/// sign-depends on `from`. Edges without dependence in either direction
/// carry no arc.
struct Orientation {
    OrientationVerdict verdict = OrientationVerdict::Oriented;
    std::vector<Arc> arcs;         // sorted
    std::vector<VarId> topo_order;  // Oriented only
    // NotOriented only: both directions witnessed on one edge.
    std::optional<std::pair<SignDependence, SignDependence>> conflict;

    bool oriented() const noexcept { return verdict == OrientationVerdict::Oriented; }
};

inline Orientation orient(const Instance& inst, const OracleCaps& caps = {}) {
    Orientation o;
    for (const auto& e : inst.binaries()) {
        auto u_on_v = sign_depends(inst, e.u, e.v, caps);
        auto v_on_u = sign_depends(inst, e.v, e.u, caps);
        if (u_on_v && v_on_u) {
            o.verdict = OrientationVerdict::NotOriented;
            o.arcs.clear();
            o.conflict = std::make_pair(std::move(*u_on_v), std::move(*v_on_u));
            return o;
        }
        if (u_on_v) o.arcs.push_back({e.v, e.u});
        if (v_on_u) o.arcs.push_back({e.u, e.v});
    }
    std::sort(o.arcs.begin(), o.arcs.end());

    // Kahn's algorithm, smallest available index first.
    const std::size_t n = inst.num_vars();
    std::vector<std::vector<VarId>> out(n);
    std::vector<std::size_t> indeg(n, 0);
    for (const auto& a : o.arcs) {
        out[a.from].push_back(a.to);
        ++indeg[a.to];
    }
    std::priority_queue<VarId, std::vector<VarId>, std::greater<>> ready;
    for (VarId v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    while (!ready.empty()) {
        VarId v = ready.top();
        ready.pop();
        o.topo_order.push_back(v);
        for (auto w : out[v])
            if (--indeg[w] == 0) ready.push(w);
    }
    if (o.topo_order.size() != n)
        throw Error(ErrorKind::CyclicOrientation, "sign-dependence arcs contain a directed cycle");
    return o;
}

inline bool is_local_peak(const Instance& inst, const Assignment& x) {
    inst.check_assignment(x);
    for (VarId i = 0; i < inst.num_vars(); ++i)
        if (flip_gain(inst, i, x) > 0) return false;
    return true;
}

/// Fixes variables in topological order to their preferred value. For an
/// oriented instance the result is its unique peak.
inline Assignment peak_of_oriented(const Instance& inst, const Orientation& orientation) {
    if (!orientation.oriented()) throw Error(ErrorKind::RangeError, "peak_of_oriented needs an oriented instance");
    if (orientation.topo_order.size() != inst.num_vars())
        throw Error(ErrorKind::LengthMismatch, "orientation does not belong to this instance");
    Assignment x(inst.num_vars());
    for (auto v : orientation.topo_order) {
        const Weight g = gradient(inst, v, x);
        if (g == 0)
            throw Error(ErrorKind::ZeroGradientAtFix, "variable " + inst.name(v) + " has zero gradient when fixed");
        x.set(v, g > 0);
    }
    return x;
}

struct Peak {
    Assignment x;
    Weight fitness;
};

namespace detail {

/// Visits all 2^d assignments in Gray-code order; f(tracker, mask).
template <class Visit>
void gray_scan(const Instance& inst, Visit&& visit) {
    const std::size_t d = inst.num_vars();
    GainTracker t(inst, Assignment(d));
    std::uint64_t mask = 0;
    visit(static_cast<const GainTracker&>(t), mask);
    const std::uint64_t count = std::uint64_t{1} << d;
    for (std::uint64_t step = 1; step < count; ++step) {
        const auto v = static_cast<VarId>(std::countr_zero(step));
        t.flip(v);
        mask ^= std::uint64_t{1} << v;
        visit(static_cast<const GainTracker&>(t), mask);
    }
}

inline void require_at_most(const Instance& inst, std::size_t cap, const char* what) {
    if (inst.num_vars() > cap || inst.num_vars() > 40)
        throw Error(ErrorKind::TooLarge, std::string(what) + ": " + std::to_string(inst.num_vars()) +
                                             " variables exceeds cap " + std::to_string(cap));
}

}  // namespace detail

/// All local peaks by exhaustive scan, best fitness first.
inline std::vector<Peak> enumerate_peaks(const Instance& inst, const OracleCaps& caps = {}) {
    detail::require_at_most(inst, caps.peak_vars, "enumerate_peaks");
    std::vector<Peak> peaks;
    detail::gray_scan(inst, [&](const GainTracker& t, std::uint64_t) {
        if (t.at_peak()) peaks.push_back({t.assignment(), t.fitness()});
    });
    std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
        if (a.fitness != b.fitness) return a.fitness > b.fitness;
        return a.x < b.x;
    });
    return peaks;
}

/// A face of the hypercube: the free variables vary, all others are fixed
/// to `background` (free positions of `background` are 0).
struct Face {
    std::vector<VarId> free_vars;
    Assignment background;
    std::vector<Assignment> peaks;
};

struct SemismoothReport {
    bool semismooth = true;
    std::optional<Face> counterexample;
    std::uint64_t faces_checked = 0;
};

/// Checks that every face has exactly one face-local peak. Faces are
/// visited by free-set mask, then background mask, both ascending.
inline SemismoothReport check_semismooth(const Instance& inst, const OracleCaps& caps = {}) {
    detail::require_at_most(inst, std::min<std::size_t>(caps.semismooth_vars, 24), "check_semismooth");
    const std::size_t d = inst.num_vars();
    const std::uint64_t full = (std::uint64_t{1} << d) - 1;
    // improving[x] = set of directions that improve fitness at x.
    std::vector<std::uint32_t> improving(std::size_t{1} << d, 0);
    detail::gray_scan(inst, [&](const GainTracker& t, std::uint64_t mask) {
        std::uint32_t dirs = 0;
        for (VarId i = 0; i < d; ++i)
            if (t.gain(i) > 0) dirs |= std::uint32_t{1} << i;
        improving[mask] = dirs;
    });

    auto to_assignment = [d](std::uint64_t mask) {
        Assignment x(d);
        for (VarId i = 0; i < d; ++i) x.set(i, (mask >> i & 1) != 0);
        return x;
    };

    SemismoothReport report;
    for (std::uint64_t free = 0; free <= full; ++free) {
        const std::uint64_t fixed = full & ~free;
        // Enumerate backgrounds as submasks of `fixed` in ascending order.
        std::uint64_t bg = 0;
        while (true) {
            ++report.faces_checked;
            std::size_t count = 0;
            std::uint64_t s = 0;
            while (true) {
                if ((improving[bg | s] & free) == 0) ++count;
                if (s == free) break;
                s = (s - free) & free;
            }
            if (count != 1) {
                Face face;
                for (VarId i = 0; i < d; ++i)
                    if (free >> i & 1) face.free_vars.push_back(i);
                face.background = to_assignment(bg);
                s = 0;
                while (true) {
                    if ((improving[bg | s] & free) == 0) face.peaks.push_back(to_assignment(bg | s));
                    if (s == free) break;
                    s = (s - free) & free;
                }
                report.semismooth = false;
                report.counterexample = std::move(face);
                return report;
            }
            if (bg == fixed) break;
            bg = (bg - fixed) & fixed;
        }
    }
    return report;
}

struct AscentEdge {
    std::size_t from;
    std::size_t to;
    VarId var;
    Weight gain;
};

/// Everything reachable from `start` by strictly improving flips.
/// Node 0 is the start.
struct AscentGraph {
    std::vector<Assignment> nodes;
    std::vector<AscentEdge> edges;
    std::vector<std::size_t> sinks;
    std::unordered_map<Assignment, std::size_t, AssignmentHash> index;

    std::optional<std::size_t> find(const Assignment& x) const {
        auto it = index.find(x);
        if (it == index.end()) return std::nullopt;
        return it->second;
    }

    /// Outgoing edge ranges: edges are stored grouped by source node.
    std::vector<std::size_t> edge_offsets;
};

inline AscentGraph ascent_graph(const Instance& inst, const Assignment& start, const OracleCaps& caps = {}) {
    inst.check_assignment(start);
    AscentGraph g;
    g.nodes.push_back(start);
    g.index.emplace(start, 0);
    for (std::size_t cur = 0; cur < g.nodes.size(); ++cur) {
        g.edge_offsets.push_back(g.edges.size());
        const Assignment x = g.nodes[cur];
        const auto moves = improving_moves(inst, x);
        if (moves.empty()) g.sinks.push_back(cur);
        for (const auto& mv : moves) {
            Assignment y = x.flipped(mv.var);
            auto [it, inserted] = g.index.emplace(y, g.nodes.size());
            if (inserted) {
                if (g.nodes.size() >= caps.ascent_graph_nodes)
                    throw Error(ErrorKind::TooLarge, "ascent graph exceeds node cap " +
                                                         std::to_string(caps.ascent_graph_nodes));
                g.nodes.push_back(std::move(y));
            }
            g.edges.push_back({cur, it->second, mv.var, mv.gain});
        }
    }
    g.edge_offsets.push_back(g.edges.size());
    return g;
}

/// Fewest improving flips from the graph's start to `target`.
inline std::size_t shortest_ascent_length(const AscentGraph& g, const Assignment& target) {
    auto goal = g.find(target);
    if (!goal) throw Error(ErrorKind::Unreachable, "target is not reachable by an ascent from the start");
    std::vector<std::size_t> dist(g.nodes.size(), SIZE_MAX);
    std::deque<std::size_t> queue{0};
    dist[0] = 0;
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        if (v == *goal) return dist[v];
        for (auto e = g.edge_offsets[v]; e < g.edge_offsets[v + 1]; ++e) {
            auto w = g.edges[e].to;
            if (dist[w] == SIZE_MAX) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    throw Error(ErrorKind::Unreachable, "target is not reachable by an ascent from the start");
}

}  // namespace vcsp
