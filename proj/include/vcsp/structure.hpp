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
#include <cstddef>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "vcsp/instance.hpp"

namespace vcsp {

/// Undirected graph whose edges are the binary scopes of an instance.
struct ConstraintGraph {
    std::size_t num_vertices = 0;
    std::vector<std::pair<VarId, VarId>> edges;  // u < v, sorted
    std::vector<std::vector<VarId>> adjacency;
};

inline ConstraintGraph constraint_graph(const Instance& inst) {
    ConstraintGraph g;
    g.num_vertices = inst.num_vars();
    g.adjacency.resize(g.num_vertices);
    for (const auto& b : inst.binaries()) {
        g.edges.emplace_back(b.u, b.v);
        g.adjacency[b.u].push_back(b.v);
        g.adjacency[b.v].push_back(b.u);
    }
    return g;
}

inline std::size_t max_degree(const ConstraintGraph& g) {
    std::size_t d = 0;
    for (const auto& nbrs : g.adjacency) d = std::max(d, nbrs.size());
    return d;
}

/// True iff the graph contains a cycle. A cycle certifies pathwidth >= 2.
inline bool has_cycle(const ConstraintGraph& g) {
    std::vector<std::size_t> parent(g.num_vertices);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges) {
        auto ru = find(u), rv = find(v);
        if (ru == rv) return true;
        parent[ru] = rv;
    }
    return false;
}

using Bag = std::vector<VarId>;

enum class DecompositionViolation {
    None,
    EmptyDecomposition,
    UnknownVertex,   // a bag names a vertex outside the graph
    MissingVertex,   // property 1
    UncoveredEdge,   // property 2
    BrokenInterval,  // property 3
};

inline std::string to_string(DecompositionViolation v) {
    switch (v) {
        case DecompositionViolation::None: return "none";
        case DecompositionViolation::EmptyDecomposition: return "empty-decomposition";
        case DecompositionViolation::UnknownVertex: return "unknown-vertex";
        case DecompositionViolation::MissingVertex: return "missing-vertex";
        case DecompositionViolation::UncoveredEdge: return "uncovered-edge";
        case DecompositionViolation::BrokenInterval: return "broken-interval";
    }
    return "unknown";
}

/// Outcome of validating a bag sequence. `width` is only set when valid.
struct DecompositionReport {
    DecompositionViolation violation = DecompositionViolation::None;
    std::optional<std::size_t> width;
    std::vector<VarId> witness_vertices;  // offending vertex, or the uncovered edge's endpoints
    std::vector<std::size_t> witness_bags;  // for BrokenInterval: first bag, gap bag, later bag

    bool valid() const noexcept { return violation == DecompositionViolation::None; }

    std::string describe() const {
        std::ostringstream os;
        os << to_string(violation);
        if (!witness_vertices.empty()) {
            os << " vertices=";
            for (std::size_t i = 0; i < witness_vertices.size(); ++i) os << (i ? "," : "") << witness_vertices[i];
        }
        if (!witness_bags.empty()) {
            os << " bags=";
            for (std::size_t i = 0; i < witness_bags.size(); ++i) os << (i ? "," : "") << witness_bags[i];
        }
        return os.str();
    }
};

/// Checks vertex coverage, edge coverage and contiguity of every vertex's
/// bag interval, in that order, and reports the first violation found.
inline DecompositionReport validate_path_decomposition(const ConstraintGraph& g, const std::vector<Bag>& bags) {
    DecompositionReport r;
    if (bags.empty()) {
        r.violation = DecompositionViolation::EmptyDecomposition;
        return r;
    }
    std::vector<std::vector<bool>> member(bags.size(), std::vector<bool>(g.num_vertices, false));
    std::size_t max_bag = 0;
    for (std::size_t b = 0; b < bags.size(); ++b) {
        std::size_t distinct = 0;
        for (auto v : bags[b]) {
            if (v >= g.num_vertices) {
                r.violation = DecompositionViolation::UnknownVertex;
                r.witness_vertices = {v};
                r.witness_bags = {b};
                return r;
            }
            if (!member[b][v]) ++distinct;
            member[b][v] = true;
        }
        max_bag = std::max(max_bag, distinct);
    }
    for (VarId v = 0; v < g.num_vertices; ++v) {
        bool found = false;
        for (std::size_t b = 0; b < bags.size() && !found; ++b) found = member[b][v];
        if (!found) {
            r.violation = DecompositionViolation::MissingVertex;
            r.witness_vertices = {v};
            return r;
        }
    }
    for (const auto& [u, v] : g.edges) {
        bool found = false;
        for (std::size_t b = 0; b < bags.size() && !found; ++b) found = member[b][u] && member[b][v];
        if (!found) {
            r.violation = DecompositionViolation::UncoveredEdge;
            r.witness_vertices = {u, v};
            return r;
        }
    }
    for (VarId v = 0; v < g.num_vertices; ++v) {
        std::optional<std::size_t> first, gap;
        for (std::size_t b = 0; b < bags.size(); ++b) {
            if (member[b][v]) {
                if (!first) {
                    first = b;
                } else if (gap) {
                    r.violation = DecompositionViolation::BrokenInterval;
                    r.witness_vertices = {v};
                    r.witness_bags = {*first, *gap, b};
                    return r;
                }
            } else if (first && !gap) {
                gap = b;
            }
        }
    }
    r.width = max_bag == 0 ? 0 : max_bag - 1;
    return r;
}

/// Bag file: one bag per line, whitespace-separated indices, '#' comments.
/// Blank lines are skipped.
inline std::vector<Bag> parse_bags(std::istream& is) {
    std::vector<Bag> bags;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(is, line)) {
        ++line_no;
        if (auto pos = line.find('#'); pos != std::string::npos) line.resize(pos);
        std::istringstream ls(line);
        Bag bag;
        for (std::string tok; ls >> tok;) {
            std::size_t used = 0;
            long long v = -1;
            try {
                v = std::stoll(tok, &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used != tok.size() || v < 0)
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad vertex '" + tok + "'");
            bag.push_back(static_cast<VarId>(v));
        }
        if (!bag.empty()) bags.push_back(std::move(bag));
    }
    return bags;
}

inline std::vector<Bag> load_bags(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return parse_bags(in);
}

inline void write_bags(std::ostream& os, const std::vector<Bag>& bags) {
    for (const auto& bag : bags) {
        for (std::size_t i = 0; i < bag.size(); ++i) os << (i ? " " : "") << bag[i];
        os << "\n";
    }
}

}  // namespace vcsp
