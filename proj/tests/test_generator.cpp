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

#include <vector>

#include "catch_amalgamated.hpp"
#include "oracles.hpp"
#include "vcsp/generator.hpp"
#include "vcsp/text_format.hpp"

namespace vcsp {

namespace {

using family::Sign;

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected vcsp::Error");
    return ErrorKind::ParseError;
}

Weight weight_of(const std::vector<family::LabeledConstraint>& cs, Label a, std::optional<Label> b = std::nullopt) {
    for (const auto& c : cs) {
        if (!b && !c.b && c.a == a) return c.weight;
        if (b && c.b && ((c.a == a && *c.b == *b) || (c.a == *b && *c.b == a))) return c.weight;
    }
    return 0;
}

}  // namespace

TEST_CASE("derived_params") {
    auto p = family::derived_params(1, 1);
    CHECK(p.big == 0);
    CHECK(p.step == 3);
    CHECK(p.small == 1);
    p = family::derived_params(3, 2);
    CHECK(p.big == 12);
    CHECK(p.step == 7);
    CHECK(p.small == 2);
    for (int n = 1; n <= 20; ++n) CHECK(family::derived_params(n, n).small == 1);
    CHECK(kind_of([] { family::derived_params(2, 3); }) == ErrorKind::RangeError);
    CHECK(kind_of([] { family::derived_params(2, 0); }) == ErrorKind::RangeError);
}

TEST_CASE("gadget_constraints for n = k = 1") {
    // Substituting M = 0, S = 3, s = 1 into the weight schedule.
    const auto cs = family::gadget_constraints(1, 1, Sign::Minus, true);
    CHECK(cs.size() == 12);
    const std::vector<Weight> unaries{-33, -13, -9, -15, -3, -3};
    for (int i = 1; i <= 6; ++i) CHECK(weight_of(cs, {1, i}) == unaries[i - 1]);
    CHECK(weight_of(cs, {1, 1}, Label{1, 2}) == 15);
    CHECK(weight_of(cs, {1, 2}, Label{1, 3}) == 12);
    CHECK(weight_of(cs, {1, 3}, Label{1, 6}) == 6);
    CHECK(weight_of(cs, {1, 1}, Label{1, 4}) == 16);
    CHECK(weight_of(cs, {1, 4}, Label{1, 5}) == 12);
    CHECK(weight_of(cs, {1, 5}, Label{1, 6}) == -6);

    const auto plus = family::gadget_constraints(1, 1, Sign::Plus, true);
    CHECK(weight_of(plus, {1, 1}) == 3);
    for (int i = 2; i <= 6; ++i) CHECK(weight_of(plus, {1, i}) == unaries[i - 1]);

    CHECK(kind_of([] { family::gadget_constraints(2, 2, Sign::Plus, false); }) == ErrorKind::RangeError);
    CHECK_NOTHROW(family::gadget_constraints(2, 2, Sign::Minus, false));
}

TEST_CASE("closed-form weights equal the sequential definitions") {
    for (int n = 1; n <= 10; ++n) {
        for (int k = 1; k <= n; ++k) {
            const auto w = testing::sequential_gadget_weights(n, k);
            const auto minus = family::gadget_constraints(n, k, Sign::Minus, k == n);
            const auto plus = family::gadget_constraints(n, k, Sign::Plus, true);
            auto L = [k](int i) { return Label{k, i}; };
            INFO("n=" << n << " k=" << k);
            CHECK(weight_of(minus, L(1)) == w.c1_minus);
            CHECK(weight_of(plus, L(1)) == w.c1_plus);
            CHECK(w.c1_plus == family::derived_params(n, k).step);  // c+ = S
            CHECK(weight_of(minus, L(2)) == w.c2);
            CHECK(weight_of(minus, L(3)) == w.c3);
            CHECK(weight_of(minus, L(4)) == w.c4);
            CHECK(weight_of(minus, L(5)) == w.c5);
            CHECK(weight_of(minus, L(6)) == w.c6);
            CHECK(weight_of(minus, L(1), L(2)) == w.c12);
            CHECK(weight_of(minus, L(2), L(3)) == w.c23);
            CHECK(weight_of(minus, L(3), L(6)) == w.c36);
            CHECK(weight_of(minus, L(1), L(4)) == w.c14);
            CHECK(weight_of(minus, L(4), L(5)) == w.c45);
            CHECK(weight_of(minus, L(5), L(6)) == w.c56);
            if (k >= 2) CHECK(weight_of(minus, L(6), Label{k - 1, 1}) == w.link_down);
            // The link above gadget k has weight M_{k+1} S.
            if (k < n) {
                const auto above = family::gadget_constraints(n, k + 1, Sign::Minus, k + 1 == n);
                CHECK(weight_of(above, {k + 1, 6}, L(1)) == w.link_up);
            }
        }
    }
}

TEST_CASE("build_chain") {
    auto inst = family::build_chain(1, 1, Sign::Plus);
    CHECK(inst.num_vars() == 6);
    CHECK(inst.num_unaries() == 6);
    CHECK(inst.num_binaries() == 6);

    inst = family::build_chain(3, 3, Sign::Minus);
    CHECK(inst.num_vars() == 18);
    CHECK(inst.num_unaries() == 18);
    CHECK(inst.num_binaries() == 20);
    CHECK(inst.constant() == 0);

    // Dense layout (k,i) -> 6(m-k) + i - 1.
    for (int k = 1; k <= 3; ++k)
        for (int i = 1; i <= 6; ++i) CHECK(inst.at({k, i}) == family::index_of(3, k, i));

    CHECK(kind_of([] { family::build_chain(2, 3, Sign::Minus); }) == ErrorKind::RangeError);
    CHECK(kind_of([] { family::build_chain(0, 0, Sign::Minus); }) == ErrorKind::RangeError);
}

TEST_CASE("self-validation rejects a tampered weight schedule") {
    for (int n = 1; n <= 10; ++n)
        for (int m = 1; m <= n; ++m)
            for (auto sign : {Sign::Plus, Sign::Minus})
                CHECK(family::chain_property_violations(family::build_chain(n, m, sign), {n, m, sign}).empty());

    // Shift the small step on (k,2) by one and the dichotomy breaks.
    const auto good = family::build_chain(3, 2, Sign::Minus);
    std::vector<UnaryTerm> us = good.unaries();
    for (auto& u : us)
        if (u.var == good.at({2, 2})) u.weight -= 1;
    const std::vector<BinaryTerm> bs(good.binaries().begin(), good.binaries().end());
    const Instance bad(good.num_vars(), 0, us, bs, good.labels());
    CHECK_FALSE(family::chain_property_violations(bad, {3, 2, Sign::Minus}).empty());

    // A positive unary somewhere below the top gadget violates sign negativity.
    for (auto& u : us)
        if (u.var == good.at({1, 3})) u.weight = 5;
    const Instance worse(good.num_vars(), 0, us, bs, good.labels());
    CHECK_FALSE(family::chain_property_violations(worse, {3, 2, Sign::Minus}).empty());
}

TEST_CASE("step sizes are either s_k or at least S - s_k") {
    // Exhaustive over each gadget's subcube and boundary neighbours, computed
    // from fitness differences rather than gradients.
    for (int n = 1; n <= 6; ++n) {
        for (int m = 1; m <= n; ++m) {
            const auto inst = family::build_chain(n, m, Sign::Plus);
            for (int k = 1; k <= m; ++k) {
                const auto [M, S, s] = family::derived_params(n, k);
                std::vector<VarId> scope;
                for (int i = 1; i <= 6; ++i) scope.push_back(inst.at({k, i}));
                if (k < m) scope.push_back(inst.at({k + 1, 6}));
                if (k > 1) scope.push_back(inst.at({k - 1, 1}));
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << scope.size()); ++mask) {
                    Assignment x(inst.num_vars());
                    for (std::size_t e = 0; e < scope.size(); ++e) x.set(scope[e], (mask >> e & 1) != 0);
                    const Weight f = testing::brute_fitness(inst, x);
                    for (int i = 0; i < 6; ++i) {
                        const Weight gain = testing::brute_fitness(inst, x.flipped(scope[i])) - f;
                        if (gain > 0) CHECK((gain == s || gain >= S - s));
                    }
                }
            }
        }
    }
}

TEST_CASE("fixing the top linking variable splices in the smaller chain") {
    for (int n = 2; n <= 4; ++n) {
        for (int m = 2; m <= std::min(n, 3); ++m) {
            for (auto sign : {Sign::Plus, Sign::Minus}) {
                const auto big = family::build_chain(n, m, sign);
                const auto lower_minus = family::build_chain(n, m - 1, Sign::Minus);
                const auto lower_plus = family::build_chain(n, m - 1, Sign::Plus);
                const std::size_t low = 6 * static_cast<std::size_t>(m - 1);
                for (std::uint64_t top = 0; top < 64; ++top) {
                    Assignment x(big.num_vars());
                    for (int i = 0; i < 6; ++i) x.set(static_cast<std::size_t>(i), (top >> i & 1) != 0);
                    const bool link_on = x[big.at({m, 6})];
                    const auto& lower = link_on ? lower_plus : lower_minus;
                    const Weight base_big = testing::brute_fitness(big, x);
                    const Weight base_low = testing::brute_fitness(lower, Assignment(low));
                    for (std::uint64_t y = 1; y < (std::uint64_t{1} << low); y += (m == 2 ? 1 : 7)) {
                        Assignment xy = x;
                        Assignment ly(low);
                        for (std::size_t b = 0; b < low; ++b) {
                            xy.set(6 + b, (y >> b & 1) != 0);
                            ly.set(b, (y >> b & 1) != 0);
                        }
                        const Weight lhs = testing::brute_fitness(big, xy) - base_big;
                        const Weight rhs = testing::brute_fitness(lower, ly) - base_low;
                        if (lhs != rhs) {
                            FAIL("splice mismatch n=" << n << " m=" << m << " top=" << top << " y=" << y);
                        }
                    }
                }
            }
        }
    }
    SUCCEED();
}

TEST_CASE("expected_peak and predicted length") {
    for (int m = 1; m <= 4; ++m) CHECK(family::expected_peak(4, m, Sign::Minus) == Assignment(6 * m));
    const auto p1 = family::build_chain(1, 1, Sign::Plus);
    CHECK(format_assignment(p1, family::expected_peak(1, 1, Sign::Plus)) == "111110");
    const auto p2 = family::build_chain(2, 2, Sign::Plus);
    CHECK(format_assignment(p2, family::expected_peak(2, 2, Sign::Plus)) == "111110000000");

    CHECK(family::predicted_ascent_length(1) == 7);
    CHECK(family::predicted_ascent_length(2) == 21);
    CHECK(family::predicted_ascent_length(10) == 7161);
    CHECK(family::predicted_ascent_length(20) == 7340025);
    for (int m = 1; m <= 40; ++m) CHECK(family::predicted_ascent_length(m) == testing::recurrence_length(m));
}

TEST_CASE("weights stay exact for large n") {
    CHECK_NOTHROW(family::build_chain(60, 2, Sign::Plus, {.self_validate = false}));
    CHECK(kind_of([] { family::build_chain(60, 60, Sign::Plus, {.self_validate = false}); }) == ErrorKind::Overflow);
    CHECK(kind_of([] { family::build_chain(61, 1, Sign::Minus); }) == ErrorKind::Overflow);
}

}  // namespace vcsp
