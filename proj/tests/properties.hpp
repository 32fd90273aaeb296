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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "vcsp/search.hpp"
#include "vcsp/text_format.hpp"

namespace vcsp::testing {

/// Failures collected by a property run, with the first few messages kept.
struct PropertyResult {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> messages;

    void fail(std::string msg) {
        ++failures;
        if (messages.size() < 5) messages.push_back(std::move(msg));
    }
    bool ok() const { return cases > 0 && failures == 0; }
};

/// gradient(i, x) == f(x with x_i=1) - f(x with x_i=0), and flip_gain
/// matches the plain fitness difference.
inline PropertyResult finite_difference_property(std::uint64_t seed, std::uint64_t triples) {
    PropertyResult r;
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < triples; ++t) {
        const auto inst = random_instance(rng, 10, 0.4, 50);
        const auto x = random_assignment(rng, inst.num_vars());
        const VarId i = static_cast<VarId>(rng() % inst.num_vars());
        Assignment on = x, off = x;
        on.set(i, true);
        off.set(i, false);
        ++r.cases;
        const Weight expected = brute_fitness(inst, on) - brute_fitness(inst, off);
        if (gradient(inst, i, x) != expected)
            r.fail("gradient mismatch on case " + std::to_string(t));
        if (flip_gain(inst, i, x) != brute_fitness(inst, x.flipped(i)) - brute_fitness(inst, x))
            r.fail("flip gain mismatch on case " + std::to_string(t));
        if (fitness(inst, x) != brute_fitness(inst, x))
            r.fail("fitness mismatch on case " + std::to_string(t));
    }
    return r;
}

/// Every trace produced by the three methods replays cleanly, and its end
/// is a local peak with no improving moves.
inline PropertyResult trace_replay_property(std::uint64_t seed, std::uint64_t instances) {
    PropertyResult r;
    std::mt19937_64 rng(seed);
    for (std::uint64_t t = 0; t < instances; ++t) {
        const auto inst = random_instance(rng, 14, 0.3, 30);
        const auto start = random_assignment(rng, inst.num_vars());
        const std::vector<Trace> traces{
            steepest_ascent(inst, start),
            random_ascent(inst, start, rng()),
            first_improvement_ascent(inst, start, shuffled_order(inst.num_vars(), rng())),
        };
        for (const auto& trace : traces) {
            ++r.cases;
            if (auto v = trace_violation(inst, trace)) r.fail(trace.method + ": " + *v);
            if (!is_local_peak(inst, trace.end) || !improving_moves(inst, trace.end).empty())
                r.fail(trace.method + " stopped short of a peak on case " + std::to_string(t));
        }
    }
    return r;
}

/// Value tables over every scope of one or two variables among three, with
/// all entries in [-2, 2], convert to an instance whose fitness equals the
/// table sum everywhere, and whose terms, read back as tables, rebuild the
/// same instance.
inline PropertyResult table_round_trip_property() {
    PropertyResult r;
    constexpr std::size_t d = 3;
    auto sum_tables = [](const std::vector<ConstraintTable>& tables, const Assignment& x) {
        Weight total = 0;
        for (const auto& t : tables) {
            std::size_t idx = 0;
            for (std::size_t p = 0; p < t.scope.size(); ++p) idx |= std::size_t{x[t.scope[p]]} << p;
            total += t.values[idx];
        }
        return total;
    };
    auto as_tables = [](const Instance& inst) {
        std::vector<ConstraintTable> tables;
        if (inst.num_vars() > 0) tables.push_back({{0}, {inst.constant(), inst.constant()}});
        for (const auto& u : inst.unaries()) tables.push_back({{u.var}, {0, u.weight}});
        for (const auto& b : inst.binaries()) tables.push_back({{b.u, b.v}, {0, 0, 0, b.weight}});
        return tables;
    };
    auto check = [&](const std::vector<ConstraintTable>& tables) {
        ++r.cases;
        const auto inst = from_constraint_tables(d, tables);
        for (std::uint64_t mask = 0; mask < (1u << d); ++mask) {
            const auto x = from_mask(d, mask);
            if (fitness(inst, x) != sum_tables(tables, x)) {
                r.fail("fitness differs from table sum at mask " + std::to_string(mask));
                return;
            }
        }
        if (to_text(from_constraint_tables(d, as_tables(inst))) != to_text(inst)) r.fail("round trip changed terms");
    };

    const std::vector<std::vector<VarId>> scopes{{0}, {1}, {0, 1}, {1, 0}, {0, 2}, {1, 2}};
    for (const auto& scope : scopes) {
        const std::size_t cells = std::size_t{1} << scope.size();
        std::size_t combos = 1;
        for (std::size_t c = 0; c < cells; ++c) combos *= 5;
        for (std::size_t code = 0; code < combos; ++code) {
            ConstraintTable t{scope, {}};
            for (std::size_t c = 0, rest = code; c < cells; ++c, rest /= 5)
                t.values.push_back(static_cast<Weight>(rest % 5) - 2);
            check({t});
            // A second table on an overlapping scope exercises the summation.
            check({t, ConstraintTable{{1, 2}, {1, -1, 2, -2}}});
            check({t, ConstraintTable{{scope.back()}, {-1, 3}}});
        }
    }
    return r;
}

}  // namespace vcsp::testing
