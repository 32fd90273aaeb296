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
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcsp/generator.hpp"
#include "vcsp/landscape.hpp"
#include "vcsp/search.hpp"
#include "vcsp/structure.hpp"

namespace vcsp {

struct VerifyCheck {
    std::string name;
    std::string expected;
    std::string observed;
    bool pass;
};

struct VerifyReport {
    int n = 0;
    int m = 0;
    std::vector<VerifyCheck> checks;

    bool overall() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

inline void print_report(std::ostream& os, const VerifyReport& r) {
    for (const auto& c : r.checks)
        os << (c.pass ? "PASS " : "FAIL ") << c.name << " expected=" << c.expected << " observed=" << c.observed
           << "\n";
    os << "overall=" << (r.overall() ? "pass" : "fail") << " n=" << r.n << " m=" << r.m << "\n";
}

/// Builds C+_{n,<=m} and C-_{n,<=m} and checks the structural, orientation,
/// peak and steepest-ascent-length claims for them.
inline VerifyReport run_verify(int n, int m) {
    using family::Sign;
    VerifyReport r;
    r.n = n;
    r.m = m;
    auto add = [&](std::string name, const auto& expected, const auto& observed, bool pass) {
        std::ostringstream e, o;
        e << std::boolalpha;
        o << std::boolalpha;
        e << expected;
        o << observed;
        r.checks.push_back({std::move(name), e.str(), o.str(), pass});
    };

    const Instance plus = family::build_chain(n, m, Sign::Plus);
    const Instance minus = family::build_chain(n, m, Sign::Minus);
    const auto s_m = family::derived_params(n, m).small;
    const auto predicted = family::predicted_ascent_length(m);

    for (const auto* inst : {&plus, &minus}) {
        const char sign = inst == &plus ? '+' : '-';
        const std::string tag = std::string("[") + sign + "] ";
        add(tag + "unaries", 6 * m, inst->num_unaries(), inst->num_unaries() == static_cast<std::size_t>(6 * m));
        add(tag + "binaries", 7 * m - 1, inst->num_binaries(),
            inst->num_binaries() == static_cast<std::size_t>(7 * m - 1));

        const auto g = constraint_graph(*inst);
        const std::size_t want_degree = m == 1 ? 2 : 3;
        add(tag + "max_degree", want_degree, max_degree(g), max_degree(g) == want_degree);
        const auto dec = validate_path_decomposition(g, family::canonical_decomposition(m));
        add(tag + "decomposition_width", 2, dec.valid() ? std::to_string(*dec.width) : dec.describe(),
            dec.valid() && dec.width == 2u);
        add(tag + "has_cycle", true, has_cycle(g), has_cycle(g));

        const auto o = orient(*inst);
        const bool arcs_ok = o.oriented() && o.arcs == family::expected_arcs(m);
        add(tag + "oriented_with_gadget_arcs", true, arcs_ok, arcs_ok);

        const auto want_peak = family::expected_peak(n, m, inst == &plus ? Sign::Plus : Sign::Minus);
        if (o.oriented()) {
            const auto peak = peak_of_oriented(*inst, o);
            add(tag + "peak_of_oriented", format_assignment(*inst, want_peak), format_assignment(*inst, peak),
                peak == want_peak);
        }
        if (6 * m <= 12) {
            const auto peaks = enumerate_peaks(*inst);
            const bool unique = peaks.size() == 1 && peaks.front().x == want_peak;
            add(tag + "exhaustive_unique_peak", 1, peaks.size(), unique);
        }

        const Assignment start = family::expected_peak(n, m, inst == &plus ? Sign::Minus : Sign::Plus);
        const auto run = steepest_ascent(*inst, start, AscentOptions{}, NoSink{});
        add(tag + "steepest_steps", predicted, run.steps, run.steps == predicted);
        add(tag + "steepest_end", format_assignment(*inst, want_peak), format_assignment(*inst, run.end),
            run.end == want_peak);
        add(tag + "steepest_ties", 0, run.tie_events, run.tie_events == 0);
        add(tag + "steepest_min_gain", ">=" + std::to_string(s_m), run.min_gain, run.min_gain >= s_m);
    }
    return r;
}

}  // namespace vcsp
