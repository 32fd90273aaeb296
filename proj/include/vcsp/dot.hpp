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
#include <optional>
#include <sstream>
#include <string>

#include "vcsp/instance.hpp"
#include "vcsp/landscape.hpp"

namespace vcsp {

/// Graphviz text for the constraint graph. With an orientation, arcs are
/// directed and edges without an arc are drawn undirected.
inline std::string export_dot(const Instance& inst, const Orientation* orientation = nullptr) {
    const bool directed = orientation != nullptr && orientation->oriented();
    std::ostringstream os;
    os << (directed ? "digraph" : "graph") << " vcsp {\n";
    for (VarId i = 0; i < inst.num_vars(); ++i) {
        os << "  " << i << " [label=\"" << inst.name(i) << "\"";
        if (Weight c = inst.unary(i); c != 0) os << ", xlabel=\"" << c << "\"";
        os << "];\n";
    }
    for (const auto& b : inst.binaries()) {
        VarId from = b.u, to = b.v;
        bool has_arc = false;
        if (directed) {
            const auto& arcs = orientation->arcs;
            if (std::binary_search(arcs.begin(), arcs.end(), Arc{b.v, b.u})) {
                from = b.v;
                to = b.u;
                has_arc = true;
            } else {
                has_arc = std::binary_search(arcs.begin(), arcs.end(), Arc{b.u, b.v});
            }
        }
        os << "  " << from << (directed ? " -> " : " -- ") << to << " [label=\"" << b.weight << "\"";
        if (directed && !has_arc) os << ", dir=none";
        os << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace vcsp
