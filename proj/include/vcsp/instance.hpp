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
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcsp/error.hpp"

namespace vcsp {

/// Dense 0-based variable index.
using VarId = std::uint32_t;

/// Gadget label (k, i) carried by generated instances: k is the gadget
/// index (>= 1), i the position inside the gadget (1..6).
struct Label {
    int gadget = 0;
    int position = 0;

    friend constexpr auto operator<=>(const Label&, const Label&) = default;
};

inline std::string to_string(const Label& l) {
    return "(" + std::to_string(l.gadget) + "," + std::to_string(l.position) + ")";
}

struct UnaryTerm {
    VarId var;
    Weight weight;
};

struct BinaryTerm {
    VarId u;  // u < v once stored in an Instance
    VarId v;
    Weight weight;
};

/// A total Boolean assignment.
class Assignment {
  public:
    Assignment() = default;
    explicit Assignment(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}
    explicit Assignment(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
        for (auto& b : bits_) b = b ? 1 : 0;
    }

    std::size_t size() const noexcept { return bits_.size(); }
    bool operator[](std::size_t i) const noexcept { return bits_[i] != 0; }

    void set(std::size_t i, bool value) {
        check(i);
        bits_[i] = value ? 1 : 0;
    }

    void toggle(std::size_t i) {
        check(i);
        bits_[i] ^= 1;
    }

    /// Copy that differs exactly at i.
    Assignment flipped(std::size_t i) const {
        Assignment y = *this;
        y.toggle(i);
        return y;
    }

    std::size_t hamming_distance(const Assignment& other) const {
        if (other.size() != size()) throw Error(ErrorKind::LengthMismatch, "hamming distance of unequal lengths");
        std::size_t d = 0;
        for (std::size_t i = 0; i < bits_.size(); ++i) d += bits_[i] != other.bits_[i];
        return d;
    }

    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    friend bool operator==(const Assignment&, const Assignment&) = default;
    friend auto operator<=>(const Assignment&, const Assignment&) = default;

  private:
    void check(std::size_t i) const {
        if (i >= bits_.size())
            throw Error(ErrorKind::IndexOutOfRange,
                        "variable " + std::to_string(i) + " outside assignment of length " + std::to_string(bits_.size()));
    }

    std::vector<std::uint8_t> bits_;
};

struct AssignmentHash {
    std::size_t operator()(const Assignment& x) const noexcept {
        // FNV-1a over the bit bytes
        std::uint64_t h = 1469598103934665603ull;
        for (auto b : x.bits()) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

inline Assignment flip(const Assignment& x, VarId i) { return x.flipped(i); }

/// An immutable binary Boolean VCSP instance: constant + unaries + binaries.
class Instance {
  public:
    struct Neighbor {
        VarId var;
        Weight weight;
    };

    Instance() = default;

    /// Validates and freezes a constraint set. Zero weights, duplicate scopes,
    /// self loops and out-of-range indices are rejected.
    Instance(std::size_t num_vars, Weight constant, std::span<const UnaryTerm> unaries,
             std::span<const BinaryTerm> binaries, std::vector<Label> labels = {})
        : num_vars_(num_vars), constant_(constant), unary_(num_vars, 0), adjacency_(num_vars) {
        if (num_vars > std::numeric_limits<VarId>::max())
            throw Error(ErrorKind::TooLarge, "variable count exceeds index width");
        for (const auto& t : unaries) {
            check_index(t.var);
            if (t.weight == 0) throw Error(ErrorKind::ZeroWeight, "unary on " + std::to_string(t.var));
            if (unary_[t.var] != 0) throw Error(ErrorKind::DuplicateScope, "unary on " + std::to_string(t.var));
            unary_[t.var] = t.weight;
            ++unary_count_;
        }
        for (auto t : binaries) {
            check_index(t.u);
            check_index(t.v);
            if (t.u == t.v) throw Error(ErrorKind::SelfLoop, "binary scope {" + std::to_string(t.u) + "," + std::to_string(t.u) + "}");
            if (t.weight == 0)
                throw Error(ErrorKind::ZeroWeight, "binary on {" + std::to_string(t.u) + "," + std::to_string(t.v) + "}");
            if (t.u > t.v) std::swap(t.u, t.v);
            binaries_.push_back(t);
        }
        std::sort(binaries_.begin(), binaries_.end(),
                  [](const BinaryTerm& a, const BinaryTerm& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
        for (std::size_t e = 1; e < binaries_.size(); ++e) {
            if (binaries_[e].u == binaries_[e - 1].u && binaries_[e].v == binaries_[e - 1].v)
                throw Error(ErrorKind::DuplicateScope, "binary on {" + std::to_string(binaries_[e].u) + "," +
                                                           std::to_string(binaries_[e].v) + "}");
        }
        for (const auto& t : binaries_) {
            adjacency_[t.u].push_back({t.v, t.weight});
            adjacency_[t.v].push_back({t.u, t.weight});
        }
        if (!labels.empty()) set_labels(std::move(labels));
    }

    std::size_t num_vars() const noexcept { return num_vars_; }
    Weight constant() const noexcept { return constant_; }

    /// Unary weight of i, 0 when no unary constraint exists.
    Weight unary(VarId i) const {
        check_index(i);
        return unary_[i];
    }

    /// Binary weight of {i, j}, 0 when absent.
    Weight binary(VarId i, VarId j) const {
        check_index(i);
        check_index(j);
        for (const auto& nb : adjacency_[i])
            if (nb.var == j) return nb.weight;
        return 0;
    }

    std::size_t num_unaries() const noexcept { return unary_count_; }
    std::size_t num_binaries() const noexcept { return binaries_.size(); }

    std::vector<UnaryTerm> unaries() const {
        std::vector<UnaryTerm> out;
        for (VarId i = 0; i < num_vars_; ++i)
            if (unary_[i] != 0) out.push_back({i, unary_[i]});
        return out;
    }

    /// Binary terms sorted by (u, v) with u < v.
    std::span<const BinaryTerm> binaries() const noexcept { return binaries_; }

    std::span<const Neighbor> neighbors(VarId i) const {
        check_index(i);
        return adjacency_[i];
    }

    std::size_t degree(VarId i) const { return neighbors(i).size(); }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<Label>& labels() const noexcept { return labels_; }

    std::optional<Label> label(VarId i) const {
        check_index(i);
        if (labels_.empty()) return std::nullopt;
        return labels_[i];
    }

    std::optional<VarId> find(const Label& l) const {
        auto it = by_label_.find(l);
        if (it == by_label_.end()) return std::nullopt;
        return it->second;
    }

    /// Label lookup that throws for unknown labels.
    VarId at(const Label& l) const {
        auto id = find(l);
        if (!id) throw Error(ErrorKind::IndexOutOfRange, "no variable labeled " + to_string(l));
        return *id;
    }

    /// "(k,i)" when labeled, otherwise the dense index.
    std::string name(VarId i) const {
        if (auto l = label(i)) return to_string(*l);
        return std::to_string(i);
    }

    /// Order in which variables are written in assignment strings: labeled
    /// instances list gadgets by decreasing k, positions by increasing i.
    std::vector<VarId> display_order() const {
        std::vector<VarId> order(num_vars_);
        for (VarId i = 0; i < num_vars_; ++i) order[i] = i;
        if (!labels_.empty()) {
            std::stable_sort(order.begin(), order.end(), [&](VarId a, VarId b) {
                const auto& la = labels_[a];
                const auto& lb = labels_[b];
                if (la.gadget != lb.gadget) return la.gadget > lb.gadget;
                return la.position < lb.position;
            });
        }
        return order;
    }

    void check_index(VarId i) const {
        if (i >= num_vars_)
            throw Error(ErrorKind::IndexOutOfRange,
                        "variable " + std::to_string(i) + " outside instance of " + std::to_string(num_vars_));
    }

    void check_assignment(const Assignment& x) const {
        if (x.size() != num_vars_)
            throw Error(ErrorKind::LengthMismatch, "assignment has " + std::to_string(x.size()) +
                                                       " bits, instance has " + std::to_string(num_vars_) + " variables");
    }

  private:
    void set_labels(std::vector<Label> labels) {
        if (labels.size() != num_vars_)
            throw Error(ErrorKind::LengthMismatch, "label count differs from variable count");
        for (VarId i = 0; i < num_vars_; ++i) {
            if (!by_label_.emplace(labels[i], i).second)
                throw Error(ErrorKind::DuplicateScope, "label " + to_string(labels[i]) + " used twice");
        }
        labels_ = std::move(labels);
    }

    std::size_t num_vars_ = 0;
    Weight constant_ = 0;
    std::vector<Weight> unary_;
    std::size_t unary_count_ = 0;
    std::vector<BinaryTerm> binaries_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<Label> labels_;
    std::map<Label, VarId> by_label_;
};

inline Instance new_instance(std::size_t num_vars, Weight constant, std::span<const UnaryTerm> unaries,
                             std::span<const BinaryTerm> binaries) {
    return Instance(num_vars, constant, unaries, binaries);
}

/// c0 + sum c_i x_i + sum c_ij x_i x_j, exactly.
inline Weight fitness(const Instance& inst, const Assignment& x) {
    inst.check_assignment(x);
    Weight f = inst.constant();
    for (VarId i = 0; i < inst.num_vars(); ++i)
        if (x[i]) f = checked_add(f, inst.unary(i));
    for (const auto& t : inst.binaries())
        if (x[t.u] && x[t.v]) f = checked_add(f, t.weight);
    return f;
}

/// f(x[i:1]) - f(x[i:0]); reads only the neighbourhood of i.
inline Weight gradient(const Instance& inst, VarId i, const Assignment& x) {
    inst.check_assignment(x);
    Weight g = inst.unary(i);
    for (const auto& nb : inst.neighbors(i))
        if (x[nb.var]) g = checked_add(g, nb.weight);
    return g;
}

/// Fitness change from flipping i in x.
inline Weight flip_gain(const Instance& inst, VarId i, const Assignment& x) {
    Weight g = gradient(inst, i, x);
    return x[i] ? checked_neg(g) : g;
}

struct Move {
    VarId var;
    Weight gain;

    friend bool operator==(const Move&, const Move&) = default;
};

/// All strictly improving flips, in dense index order.
inline std::vector<Move> improving_moves(const Instance& inst, const Assignment& x) {
    inst.check_assignment(x);
    std::vector<Move> moves;
    for (VarId i = 0; i < inst.num_vars(); ++i) {
        Weight gain = flip_gain(inst, i, x);
        if (gain > 0) moves.push_back({i, gain});
    }
    return moves;
}

/// A constraint given as a full value table over a scope of one or two
/// variables. For a pair scope {a, b} the table is indexed by x_a + 2 x_b,
/// i.e. {C(0,0), C(1,0), C(0,1), C(1,1)}.
struct ConstraintTable {
    std::vector<VarId> scope;
    std::vector<Weight> values;
};

/// Sums alike monomials across value tables into (c0, c_i, c_ij).
inline Instance from_constraint_tables(std::size_t num_vars, std::span<const ConstraintTable> tables) {
    Weight constant = 0;
    std::vector<Weight> unary(num_vars, 0);
    std::map<std::pair<VarId, VarId>, Weight> pair_weights;
    for (const auto& t : tables) {
        for (auto v : t.scope)
            if (v >= num_vars) throw Error(ErrorKind::IndexOutOfRange, "table scope variable " + std::to_string(v));
        if (t.scope.size() == 1) {
            if (t.values.size() != 2) throw Error(ErrorKind::MalformedTable, "unary table needs 2 values");
            constant = checked_add(constant, t.values[0]);
            unary[t.scope[0]] = checked_add(unary[t.scope[0]], checked_sub(t.values[1], t.values[0]));
        } else if (t.scope.size() == 2) {
            if (t.values.size() != 4) throw Error(ErrorKind::MalformedTable, "binary table needs 4 values");
            VarId a = t.scope[0], b = t.scope[1];
            if (a == b) throw Error(ErrorKind::MalformedTable, "binary table scope repeats a variable");
            const Weight c00 = t.values[0], c10 = t.values[1], c01 = t.values[2], c11 = t.values[3];
            constant = checked_add(constant, c00);
            unary[a] = checked_add(unary[a], checked_sub(c10, c00));
            unary[b] = checked_add(unary[b], checked_sub(c01, c00));
            Weight w = checked_add(checked_sub(checked_sub(c11, c01), c10), c00);
            auto key = std::minmax(a, b);
            pair_weights[{key.first, key.second}] = checked_add(pair_weights[{key.first, key.second}], w);
        } else {
            throw Error(ErrorKind::MalformedTable, "table scope must have 1 or 2 variables");
        }
    }
    std::vector<UnaryTerm> us;
    for (VarId i = 0; i < num_vars; ++i)
        if (unary[i] != 0) us.push_back({i, unary[i]});
    std::vector<BinaryTerm> bs;
    for (const auto& [scope, w] : pair_weights)
        if (w != 0) bs.push_back({scope.first, scope.second, w});
    return Instance(num_vars, constant, us, bs);
}

/// Bit string in display order (or dense order when raw is set).
inline std::string format_assignment(const Instance& inst, const Assignment& x, bool raw = false) {
    inst.check_assignment(x);
    std::string s;
    s.reserve(x.size());
    if (raw || !inst.has_labels()) {
        for (std::size_t i = 0; i < x.size(); ++i) s.push_back(x[i] ? '1' : '0');
    } else {
        for (auto v : inst.display_order()) s.push_back(x[v] ? '1' : '0');
    }
    return s;
}

inline Assignment parse_assignment(const Instance& inst, std::string_view bits, bool raw = false) {
    if (bits.size() != inst.num_vars())
        throw Error(ErrorKind::LengthMismatch, "assignment string has " + std::to_string(bits.size()) +
                                                   " characters, instance has " + std::to_string(inst.num_vars()) +
                                                   " variables");
    Assignment x(inst.num_vars());
    std::vector<VarId> order;
    if (raw || !inst.has_labels()) {
        order.resize(inst.num_vars());
        for (VarId i = 0; i < inst.num_vars(); ++i) order[i] = i;
    } else {
        order = inst.display_order();
    }
    for (std::size_t p = 0; p < bits.size(); ++p) {
        if (bits[p] != '0' && bits[p] != '1')
            throw Error(ErrorKind::ParseError, "assignment strings contain only 0 and 1");
        x.set(order[p], bits[p] == '1');
    }
    return x;
}

}  // namespace vcsp
