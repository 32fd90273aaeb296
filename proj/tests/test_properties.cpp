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

#include "catch_amalgamated.hpp"
#include "properties.hpp"

namespace vcsp {

namespace {

void require_ok(const testing::PropertyResult& r) {
    for (const auto& m : r.messages) UNSCOPED_INFO(m);
    CHECK(r.cases > 0);
    CHECK(r.failures == 0);
}

}  // namespace

TEST_CASE("gradient equals the fitness difference") {
    require_ok(testing::finite_difference_property(20260101, 10000));
}

TEST_CASE("traces replay and end at peaks") {
    require_ok(testing::trace_replay_property(7, 300));
}

TEST_CASE("value tables round trip") {
    require_ok(testing::table_round_trip_property());
}

TEST_CASE("gradient only depends on the neighbourhood") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 2000; ++t) {
        const auto inst = testing::random_instance(rng, 10, 0.3, 20);
        const auto x = testing::random_assignment(rng, inst.num_vars());
        const VarId i = static_cast<VarId>(rng() % inst.num_vars());
        std::vector<bool> near(inst.num_vars(), false);
        near[i] = true;
        for (const auto& nb : inst.neighbors(i)) near[nb.var] = true;
        for (VarId j = 0; j < inst.num_vars(); ++j) {
            if (near[j]) continue;
            CHECK(gradient(inst, i, x.flipped(j)) == gradient(inst, i, x));
        }
    }
}

TEST_CASE("no improving moves exactly at local peaks") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 100; ++t) {
        const auto inst = testing::random_instance(rng, 8, 0.4, 10);
        const auto peaks = testing::brute_peaks(inst);
        const std::size_t d = inst.num_vars();
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
            const auto x = testing::from_mask(d, mask);
            CHECK(improving_moves(inst, x).empty() == peaks.contains(x));
        }
    }
}

}  // namespace vcsp
