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

#include <cstddef>
#include <span>
#include <vector>

#include "vcsp/instance.hpp"

namespace vcsp {

/// Assignment plus exact fitness and every variable's flip gain, kept
/// current under single-bit flips in O(degree) per flip.
class GainTracker {
  public:
    GainTracker(const Instance& inst, Assignment start)
        : inst_(&inst), x_(std::move(start)), gains_(inst.num_vars()) {
        inst.check_assignment(x_);
        fitness_ = vcsp::fitness(inst, x_);
        for (VarId i = 0; i < inst.num_vars(); ++i) {
            gains_[i] = flip_gain(inst, i, x_);
            if (gains_[i] > 0) ++improving_;
        }
    }

    const Instance& instance() const noexcept { return *inst_; }
    const Assignment& assignment() const noexcept { return x_; }
    Weight fitness() const noexcept { return fitness_; }
    Weight gain(VarId i) const noexcept { return gains_[i]; }
    std::span<const Weight> gains() const noexcept { return gains_; }
    std::size_t num_improving() const noexcept { return improving_; }
    bool at_peak() const noexcept { return improving_ == 0; }

    /// Flips v and returns the fitness change. Only v and its neighbours
    /// change gain.
    Weight flip(VarId v) {
        const Weight delta = gains_[v];
        fitness_ = checked_add(fitness_, delta);
        x_.toggle(v);
        set_gain(v, checked_neg(delta));
        const bool on = x_[v];
        for (const auto& nb : inst_->neighbors(v)) {
            // d(gradient_u) = +w when v turns on, -w when it turns off;
            // gain_u is gradient_u for x_u = 0 and its negation for x_u = 1.
            const Weight d = on != x_[nb.var] ? nb.weight : checked_neg(nb.weight);
            set_gain(nb.var, checked_add(gains_[nb.var], d));
        }
        return delta;
    }

  private:
    void set_gain(VarId i, Weight g) {
        improving_ += (g > 0) - (gains_[i] > 0);
        gains_[i] = g;
    }

    const Instance* inst_;
    Assignment x_;
    Weight fitness_ = 0;
    std::vector<Weight> gains_;
    std::size_t improving_ = 0;
};

}  // namespace vcsp
