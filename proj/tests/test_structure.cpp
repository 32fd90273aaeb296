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

#include <algorithm>
#include <sstream>
#include <vector>

#include "catch_amalgamated.hpp"
#include "vcsp/dot.hpp"
#include "vcsp/generator.hpp"
#include "vcsp/structure.hpp"

namespace vcsp {

namespace {

using family::Sign;

// Independent re-scan of the three decomposition properties.
bool brute_valid(const ConstraintGraph& g, const std::vector<Bag>& bags) {
    auto in = [&](std::size_t b, VarId v) { return std::find(bags[b].begin(), bags[b].end(), v) != bags[b].end(); };
    for (VarId v = 0; v < g.num_vertices; ++v) {
        std::vector<std::size_t> where;
        for (std::size_t b = 0; b < bags.size(); ++b)
            if (in(b, v)) where.push_back(b);
        if (where.empty()) return false;
        if (where.back() - where.front() + 1 != where.size()) return false;
    }
    for (const auto& [u, v] : g.edges) {
        bool found = false;
        for (std::size_t b = 0; b < bags.size(); ++b) found = found || (in(b, u) && in(b, v));
        if (!found) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("constraint_graph and degrees") {
    const auto gadget = family::build_chain(3, 1, Sign::Minus);
    const auto g = constraint_graph(gadget);
    CHECK(g.num_vertices == 6);
    CHECK(g.edges.size() == 6);
    CHECK(max_degree(g) == 2);
    for (const auto& nbrs : g.adjacency) CHECK(nbrs.size() == 2);  // a single 6-cycle
    CHECK(has_cycle(g));

    for (int m = 2; m <= 5; ++m) {
        const auto chain = constraint_graph(family::build_chain(5, m, Sign::Plus));
        CHECK(chain.num_vertices == static_cast<std::size_t>(6 * m));
        CHECK(chain.edges.size() == static_cast<std::size_t>(7 * m - 1));
        CHECK(max_degree(chain) == 3);
        CHECK(has_cycle(chain));
    }

    const Instance edgeless(4, 0, {}, {});
    const auto e = constraint_graph(edgeless);
    CHECK(e.edges.empty());
    CHECK(max_degree(e) == 0);
    CHECK_FALSE(has_cycle(e));
}

TEST_CASE("has_cycle on forests") {
    const std::vector<BinaryTerm> tree{{0, 1, 1}, {1, 2, 1}, {1, 3, 1}, {4, 5, 1}};
    CHECK_FALSE(has_cycle(constraint_graph(new_instance(6, 0, {}, tree))));
    const std::vector<BinaryTerm> triangle{{0, 1, 1}, {1, 2, 1}, {0, 2, 1}};
    CHECK(has_cycle(constraint_graph(new_instance(3, 0, {}, triangle))));
}

TEST_CASE("validate_path_decomposition") {
    SECTION("canonical decomposition has width 2") {
        for (int m = 1; m <= 6; ++m) {
            const auto g = constraint_graph(family::build_chain(6, m, Sign::Minus));
            const auto bags = family::canonical_decomposition(m);
            const auto r = validate_path_decomposition(g, bags);
            REQUIRE(r.valid());
            CHECK(r.width == 2u);
            CHECK(brute_valid(g, bags));
        }
        CHECK(family::canonical_decomposition(1).size() == 4);
    }
    SECTION("single bag") {
        const auto g = constraint_graph(family::build_chain(2, 2, Sign::Minus));
        Bag all;
        for (VarId v = 0; v < 12; ++v) all.push_back(v);
        const auto r = validate_path_decomposition(g, {all});
        CHECK(r.valid());
        CHECK(r.width == 11u);
    }
    SECTION("deleting any bag breaks it, with a witness") {
        const auto g = constraint_graph(family::build_chain(3, 3, Sign::Plus));
        const auto bags = family::canonical_decomposition(3);
        for (std::size_t drop = 0; drop < bags.size(); ++drop) {
            auto cut = bags;
            cut.erase(cut.begin() + static_cast<std::ptrdiff_t>(drop));
            const auto r = validate_path_decomposition(g, cut);
            CHECK(r.valid() == brute_valid(g, cut));
            if (!r.valid()) {
                CHECK_FALSE(r.width.has_value());
                CHECK_FALSE(r.witness_vertices.empty());
                if (r.violation == DecompositionViolation::UncoveredEdge) {
                    const auto& w = r.witness_vertices;
                    CHECK(std::find(g.edges.begin(), g.edges.end(), std::pair{std::min(w[0], w[1]), std::max(w[0], w[1])}) !=
                          g.edges.end());
                }
            }
        }
    }
    SECTION("each property reported") {
        const std::vector<BinaryTerm> path{{0, 1, 1}, {1, 2, 1}};
        const auto g = constraint_graph(new_instance(3, 0, {}, path));
        CHECK(validate_path_decomposition(g, {{0, 1}}).violation == DecompositionViolation::MissingVertex);
        CHECK(validate_path_decomposition(g, {{0, 1}, {2}}).violation == DecompositionViolation::UncoveredEdge);
        const auto broken = validate_path_decomposition(g, {{0, 1}, {1, 2}, {0}});
        CHECK(broken.violation == DecompositionViolation::BrokenInterval);
        CHECK(broken.witness_vertices == std::vector<VarId>{0});
        CHECK(broken.witness_bags == std::vector<std::size_t>{0, 1, 2});
        CHECK(validate_path_decomposition(g, {{0, 1, 7}}).violation == DecompositionViolation::UnknownVertex);
        CHECK(validate_path_decomposition(g, {}).violation == DecompositionViolation::EmptyDecomposition);
    }
}

TEST_CASE("bag file format") {
    std::istringstream in("# comment\n0 1 2\n\n  2 3   # trailing\n");
    const auto bags = parse_bags(in);
    CHECK(bags == std::vector<Bag>{{0, 1, 2}, {2, 3}});
    std::ostringstream out;
    write_bags(out, bags);
    CHECK(out.str() == "0 1 2\n2 3\n");
    std::istringstream bad("0 x\n");
    CHECK_THROWS_AS(parse_bags(bad), Error);
}

TEST_CASE("export_dot") {
    SECTION("oriented gadget") {
        const auto inst = family::build_chain(1, 1, Sign::Minus);
        const auto o = orient(inst);
        const auto dot = export_dot(inst, &o);
        CHECK(dot.rfind("digraph vcsp {", 0) == 0);
        CHECK(dot.find("label=\"(1,1)\"") != std::string::npos);
        std::size_t arrows = 0;
        for (auto p = dot.find("->"); p != std::string::npos; p = dot.find("->", p + 2)) ++arrows;
        CHECK(arrows == 6);
        // (1,5) -> (1,6) carries weight -6
        CHECK(dot.find("4 -> 5 [label=\"-6\"]") != std::string::npos);
        CHECK(dot.find("dir=none") == std::string::npos);
    }
    SECTION("unlabeled instance") {
        const std::vector<BinaryTerm> bs{{0, 1, -3}};
        const auto dot = export_dot(new_instance(2, 0, {}, bs));
        CHECK(dot.find("graph vcsp {") == 0);
        CHECK(dot.find("0 [label=\"0\"]") != std::string::npos);
        CHECK(dot.find("1 [label=\"1\"]") != std::string::npos);
        CHECK(dot.find("0 -- 1") != std::string::npos);
    }
    SECTION("empty instance") {
        CHECK(export_dot(Instance(0, 0, {}, {})) == "graph vcsp {\n}\n");
    }
}

}  // namespace vcsp
