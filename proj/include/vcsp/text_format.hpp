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
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "vcsp/instance.hpp"

namespace vcsp {

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline long long parse_integer(const std::string& token, std::size_t line_no) {
    try {
        std::size_t used = 0;
        long long v = std::stoll(token, &used);
        if (used != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::out_of_range&) {
        throw Error(ErrorKind::Overflow, "line " + std::to_string(line_no) + ": integer out of range: " + token);
    } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": not an integer: " + token);
    }
}

inline VarId parse_index(const std::string& token, std::size_t line_no) {
    long long v = parse_integer(token, line_no);
    if (v < 0 || v > static_cast<long long>(std::numeric_limits<VarId>::max()))
        throw Error(ErrorKind::IndexOutOfRange, "line " + std::to_string(line_no) + ": bad index " + token);
    return static_cast<VarId>(v);
}

}  // namespace detail

/// Writes the line-oriented "vcsp 1" text format.
inline void write_instance(std::ostream& os, const Instance& inst) {
    os << "vcsp 1\n";
    os << "n " << inst.num_vars() << "\n";
    if (inst.has_labels()) {
        for (VarId i = 0; i < inst.num_vars(); ++i) {
            const auto& l = inst.labels()[i];
            os << "label " << i << " " << l.gadget << " " << l.position << "\n";
        }
    }
    if (inst.constant() != 0) os << "c0 " << inst.constant() << "\n";
    for (const auto& u : inst.unaries()) os << "u " << u.var << " " << u.weight << "\n";
    for (const auto& b : inst.binaries()) os << "b " << b.u << " " << b.v << " " << b.weight << "\n";
}

inline std::string to_text(const Instance& inst) {
    std::ostringstream os;
    write_instance(os, inst);
    return os.str();
}

inline Instance read_instance(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::optional<std::size_t> num_vars;
    Weight constant = 0;
    bool have_constant = false;
    std::vector<std::pair<VarId, Label>> labels;
    std::vector<UnaryTerm> unaries;
    std::vector<BinaryTerm> binaries;

    while (std::getline(is, line)) {
        ++line_no;
        std::istringstream ls(detail::strip_comment(line));
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        auto fail = [&](const std::string& why) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": " + why);
        };
        if (!have_header) {
            if (tok.size() != 2 || tok[0] != "vcsp" || tok[1] != "1") fail("expected header 'vcsp 1'");
            have_header = true;
            continue;
        }
        const auto& key = tok[0];
        if (key == "n") {
            if (tok.size() != 2 || num_vars) fail("expected a single 'n <num_vars>' line");
            long long v = detail::parse_integer(tok[1], line_no);
            if (v < 0) fail("negative variable count");
            num_vars = static_cast<std::size_t>(v);
            continue;
        }
        if (!num_vars) fail("'n' line must precede constraints");
        if (key == "label") {
            if (tok.size() != 4) fail("expected 'label <index> <k> <i>'");
            labels.push_back({detail::parse_index(tok[1], line_no),
                              Label{static_cast<int>(detail::parse_integer(tok[2], line_no)),
                                    static_cast<int>(detail::parse_integer(tok[3], line_no))}});
        } else if (key == "c0") {
            if (tok.size() != 2 || have_constant) fail("expected a single 'c0 <weight>' line");
            constant = detail::parse_integer(tok[1], line_no);
            have_constant = true;
        } else if (key == "u") {
            if (tok.size() != 3) fail("expected 'u <index> <weight>'");
            unaries.push_back({detail::parse_index(tok[1], line_no), detail::parse_integer(tok[2], line_no)});
        } else if (key == "b") {
            if (tok.size() != 4) fail("expected 'b <index> <index> <weight>'");
            binaries.push_back({detail::parse_index(tok[1], line_no), detail::parse_index(tok[2], line_no),
                                detail::parse_integer(tok[3], line_no)});
        } else {
            fail("unknown record '" + key + "'");
        }
    }
    if (!have_header) throw Error(ErrorKind::ParseError, "missing 'vcsp 1' header");
    if (!num_vars) throw Error(ErrorKind::ParseError, "missing 'n' line");

    std::vector<Label> dense_labels;
    if (!labels.empty()) {
        if (labels.size() != *num_vars)
            throw Error(ErrorKind::ParseError, "labels must cover every variable exactly once");
        dense_labels.assign(*num_vars, Label{});
        std::vector<bool> seen(*num_vars, false);
        for (const auto& [idx, l] : labels) {
            if (idx >= *num_vars) throw Error(ErrorKind::IndexOutOfRange, "label index " + std::to_string(idx));
            if (seen[idx]) throw Error(ErrorKind::ParseError, "variable " + std::to_string(idx) + " labeled twice");
            seen[idx] = true;
            dense_labels[idx] = l;
        }
    }
    return Instance(*num_vars, constant, unaries, binaries, std::move(dense_labels));
}

inline Instance parse_instance(const std::string& text) {
    std::istringstream is(text);
    return read_instance(is);
}

inline Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
    return read_instance(in);
}

inline void save_instance(const std::string& path, const Instance& inst) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
    write_instance(out, inst);
}

/// 64-bit FNV-1a of the canonical text form; used to tag traces.
inline std::uint64_t instance_hash(const Instance& inst) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_text(inst)) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace vcsp
