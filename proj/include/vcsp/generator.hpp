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
#include <optional>
#include <string>
#include <vector>

#include "vcsp/instance.hpp"
#include "vcsp/landscape.hpp"
#include "vcsp/structure.hpp"

namespace vcsp::family {

// The hard family: a path of m six-variable gadgets, top gadget m first.
// Gadget k's variables are labeled (k,1)..(k,6). Both signs share every
// weight except the unary on (m,1).

enum class Sign { Plus, Minus };

inline char to_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline Sign parse_sign(std::string_view s) {
    if (s == "+" || s == "plus") return Sign::Plus;
    if (s == "-" || s == "minus") return Sign::Minus;
    throw Error(ErrorKind::ParseError, "sign must be '+' or '-'");
}

struct FamilyParams {
    int n = 1;
    int m = 1;
    Sign sign = Sign::Minus;
};

/// M_k = 6(2^k - 2), S = 2n + 1, s_k = n + 1 - k.
struct GadgetParams {
    Weight big;     // M_k
    Weight step;    // S
    Weight small;   // s_k
};

inline void check_family(int n, int m) {
    if (n < 1 || m < 1 || m > n)
        throw Error(ErrorKind::RangeError, "need 1 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
    if (n > 60) throw Error(ErrorKind::Overflow, "n=" + std::to_string(n) + " exceeds the int64 weight range");
}

inline GadgetParams derived_params(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw Error(ErrorKind::RangeError, "need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    if (k > 60) throw Error(ErrorKind::Overflow, "2^k overflows for k=" + std::to_string(k));
    const Weight pow2 = Weight{1} << k;
    return {checked_mul(6, pow2 - 2), checked_add(checked_mul(2, n), 1), Weight{n} + 1 - k};
}

/// Dense index of (k, i) in a chain of m gadgets. This order coincides with
/// the display order: gadget m first, positions ascending.
constexpr VarId index_of(int m, int k, int i) { return static_cast<VarId>(6 * (m - k) + (i - 1)); }

struct LabeledConstraint {
    Label a;
    std::optional<Label> b;  // unset for unary constraints
    Weight weight;
};

/// The six unaries and six intra-gadget binaries of gadget k, plus the
/// link {(k,6),(k-1,1)} with weight M_k S when k >= 2.
inline std::vector<LabeledConstraint> gadget_constraints(int n, int k, Sign sign, bool is_top) {
    if (sign == Sign::Plus && !is_top) throw Error(ErrorKind::RangeError, "only the top gadget may carry sign +");
    const auto [M, S, s] = derived_params(n, k);
    auto L = [k](int i) { return Label{k, i}; };
    auto mul = [](Weight a, Weight b) { return checked_mul(a, b); };

    const Weight link = mul(M, S);
    const Weight c6 = -mul(M + 1, S);
    const Weight c36 = mul(M + 2, S);
    const Weight c56 = -mul(M + 2, S);
    const Weight c3 = -mul(M + 3, S);
    const Weight c23 = mul(M + 4, S);
    const Weight c2 = checked_sub(-mul(M + 4, S), s);
    const Weight c12 = mul(M + 5, S);
    const Weight c5 = -S;
    const Weight c45 = mul(M + 4, S);
    const Weight c4 = -mul(M + 5, S);
    const Weight c14 = checked_add(mul(M + 5, S), s);
    const Weight c1_minus = -mul(2 * (M + 5) + 1, S);
    const Weight c1 = sign == Sign::Plus ? checked_add(c1_minus, mul(2 * (M + 6), S)) : c1_minus;

    std::vector<LabeledConstraint> out = {
        {L(1), std::nullopt, c1}, {L(2), std::nullopt, c2}, {L(3), std::nullopt, c3},
        {L(4), std::nullopt, c4}, {L(5), std::nullopt, c5}, {L(6), std::nullopt, c6},
        {L(1), L(2), c12},        {L(2), L(3), c23},        {L(3), L(6), c36},
        {L(1), L(4), c14},        {L(4), L(5), c45},        {L(5), L(6), c56},
    };
    if (k >= 2) out.push_back({L(6), Label{k - 1, 1}, link});
    return out;
}

inline std::vector<std::string> chain_property_violations(const Instance& inst, const FamilyParams& p);

struct BuildOptions {
    bool self_validate = true;
};

/// C+_{n,<=m} or C-_{n,<=m} on 6m labeled variables.
inline Instance build_chain(int n, int m, Sign sign, const BuildOptions& opts = {}) {
    check_family(n, m);
    std::vector<Label> labels(static_cast<std::size_t>(6 * m));
    for (int k = 1; k <= m; ++k)
        for (int i = 1; i <= 6; ++i) labels[index_of(m, k, i)] = Label{k, i};
    std::vector<UnaryTerm> unaries;
    std::vector<BinaryTerm> binaries;
    for (int k = m; k >= 1; --k) {
        const Sign gs = k == m ? sign : Sign::Minus;
        for (const auto& c : gadget_constraints(n, k, gs, k == m)) {
            const VarId a = index_of(m, c.a.gadget, c.a.position);
            if (c.b)
                binaries.push_back({a, index_of(m, c.b->gadget, c.b->position), c.weight});
            else
                unaries.push_back({a, c.weight});
        }
    }
    const std::size_t count = labels.size();
    Instance inst(count, 0, unaries, binaries, std::move(labels));
    if (opts.self_validate) {
        auto problems = chain_property_violations(inst, {n, m, sign});
        if (!problems.empty()) throw Error(ErrorKind::SelfValidationFailed, problems.front());
    }
    return inst;
}

/// 0^{6m} for sign -, 111110 0^{6(m-1)} for sign +.
inline Assignment expected_peak(int n, int m, Sign sign) {
    check_family(n, m);
    Assignment x(static_cast<std::size_t>(6 * m));
    if (sign == Sign::Plus)
        for (int i = 1; i <= 5; ++i) x.set(index_of(m, m, i), true);
    return x;
}

/// 7(2^m - 1), from T_1 = 7 and T_m = 7 + 2 T_{m-1}.
inline std::uint64_t predicted_ascent_length(int m) {
    if (m < 1 || m > 59) throw Error(ErrorKind::RangeError, "m out of range for predicted length");
    return 7 * ((std::uint64_t{1} << m) - 1);
}

/// Width-2 path decomposition of the chain, gadget m first. Linking bags
/// shared by neighbouring gadgets appear once.
inline std::vector<Bag> canonical_decomposition(int m) {
    if (m < 1) throw Error(ErrorKind::RangeError, "m must be >= 1");
    auto v = [m](int k, int i) { return index_of(m, k, i); };
    std::vector<Bag> bags;
    for (int k = m; k >= 1; --k) {
        if (k < m) bags.push_back({v(k + 1, 6), v(k, 1)});
        bags.push_back({v(k, 1), v(k, 2), v(k, 4)});
        bags.push_back({v(k, 2), v(k, 3), v(k, 4)});
        bags.push_back({v(k, 3), v(k, 4), v(k, 5)});
        bags.push_back({v(k, 3), v(k, 5), v(k, 6)});
    }
    return bags;
}

/// Orientation arcs of the chain: within each gadget 1->2, 1->4, 2->3,
/// 4->5, 3->6, 5->6, and between gadgets (k+1,6) -> (k,1).
inline std::vector<Arc> expected_arcs(int m) {
    std::vector<Arc> arcs;
    for (int k = 1; k <= m; ++k) {
        auto v = [&](int i) { return index_of(m, k, i); };
        arcs.push_back({v(1), v(2)});
        arcs.push_back({v(1), v(4)});
        arcs.push_back({v(2), v(3)});
        arcs.push_back({v(4), v(5)});
        arcs.push_back({v(3), v(6)});
        arcs.push_back({v(5), v(6)});
        if (k < m) arcs.push_back({index_of(m, k + 1, 6), v(1)});
    }
    std::sort(arcs.begin(), arcs.end());
    return arcs;
}

/// Checks the weight schedule's structural properties on a built chain:
/// counts, negative unaries, dominant outgoing unaries, incoming subset
/// sums, the (m,1) unary under sign +, and the small/large step dichotomy
/// of every gadget. Returns human-readable failures, empty when all hold.
inline std::vector<std::string> chain_property_violations(const Instance& inst, const FamilyParams& p) {
    std::vector<std::string> bad;
    const int n = p.n, m = p.m;
    if (inst.num_vars() != static_cast<std::size_t>(6 * m)) {
        bad.push_back("variable count is not 6m");
        return bad;
    }
    if (inst.num_unaries() != static_cast<std::size_t>(6 * m)) bad.push_back("unary count is not 6m");
    if (inst.num_binaries() != static_cast<std::size_t>(7 * m - 1)) bad.push_back("binary count is not 7m-1");

    // Intra-gadget edges, as (lower position, higher position).
    static constexpr std::pair<int, int> kEdges[] = {{1, 2}, {2, 3}, {3, 6}, {1, 4}, {4, 5}, {5, 6}};

    for (int k = 1; k <= m; ++k) {
        const auto [M, S, s] = derived_params(n, k);
        auto v = [&](int i) { return index_of(m, k, i); };
        const bool plus_top = p.sign == Sign::Plus && k == m;
        const std::string where = "gadget " + std::to_string(k) + ": ";

        if (plus_top && inst.unary(v(1)) != S) bad.push_back(where + "unary on (m,1) is not S under sign +");
        if (plus_top) {
            const Weight minus1 = -checked_mul(2 * (M + 5) + 1, S);
            const Weight next_link = checked_mul(2 * (M + 6), S);
            if (checked_add(minus1, next_link) != S) bad.push_back(where + "c-(m,1) + M_{m+1}S != S");
        }

        for (int h = 1; h <= 6; ++h) {
            if (plus_top && h == 1) continue;
            const Weight unary = inst.unary(v(h));
            if (unary >= 0) bad.push_back(where + "unary on position " + std::to_string(h) + " is not negative");

            Weight outgoing = 0, negative_outgoing = 0;
            std::vector<Weight> incoming;
            for (auto [a, b] : kEdges) {
                const Weight w = inst.binary(v(a), v(b));
                if (a == h) {
                    outgoing = checked_add(outgoing, w);
                    if (w < 0) negative_outgoing = checked_add(negative_outgoing, checked_neg(w));
                }
                if (b == h) incoming.push_back(w);
            }
            const Weight magnitude = checked_abs(unary);
            if (!(magnitude > outgoing))
                bad.push_back(where + "unary on position " + std::to_string(h) + " does not dominate outgoing binaries");
            const Weight threshold = checked_add(magnitude, negative_outgoing);
            for (std::size_t mask = 1; mask < (std::size_t{1} << incoming.size()); ++mask) {
                Weight sum = 0;
                for (std::size_t e = 0; e < incoming.size(); ++e)
                    if (mask >> e & 1) sum = checked_add(sum, incoming[e]);
                if (!(sum <= 0 || sum > threshold))
                    bad.push_back(where + "incoming subset on position " + std::to_string(h) +
                                  " is neither non-positive nor dominant");
            }
        }

        // Step dichotomy over the gadget and its boundary neighbours.
        std::vector<VarId> scope;
        for (int i = 1; i <= 6; ++i) scope.push_back(v(i));
        if (k < m) scope.push_back(index_of(m, k + 1, 6));
        if (k > 1) scope.push_back(index_of(m, k - 1, 1));
        Assignment x(inst.num_vars());
        for (std::size_t mask = 0; mask < (std::size_t{1} << scope.size()); ++mask) {
            for (std::size_t e = 0; e < scope.size(); ++e) x.set(scope[e], (mask >> e & 1) != 0);
            for (int i = 1; i <= 6; ++i) {
                const Weight g = flip_gain(inst, v(i), x);
                if (g > 0 && g != s && g < S - s) {
                    bad.push_back(where + "gain " + std::to_string(g) + " is neither s_k nor >= S - s_k");
                    i = 7;
                    mask = std::size_t{1} << scope.size();
                }
            }
        }
    }
    return bad;
}

}  // namespace vcsp::family
