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
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vcsp {

enum class ErrorKind {
    DuplicateScope,
    ZeroWeight,
    SelfLoop,
    IndexOutOfRange,
    LengthMismatch,
    Overflow,
    MalformedTable,
    TooLarge,
    Unreachable,
    CyclicOrientation,
    ZeroGradientAtFix,
    RangeError,
    SelfValidationFailed,
    TieEncountered,
    EmptyTrial,
    ParseError,
};

constexpr std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::DuplicateScope: return "DuplicateScope";
        case ErrorKind::ZeroWeight: return "ZeroWeight";
        case ErrorKind::SelfLoop: return "SelfLoop";
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::LengthMismatch: return "LengthMismatch";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::MalformedTable: return "MalformedTable";
        case ErrorKind::TooLarge: return "TooLarge";
        case ErrorKind::Unreachable: return "Unreachable";
        case ErrorKind::CyclicOrientation: return "CyclicOrientation";
        case ErrorKind::ZeroGradientAtFix: return "ZeroGradientAtFix";
        case ErrorKind::RangeError: return "RangeError";
        case ErrorKind::SelfValidationFailed: return "SelfValidationFailed";
        case ErrorKind::TieEncountered: return "TieEncountered";
        case ErrorKind::EmptyTrial: return "EmptyTrial";
        case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

/// Every failure raised by the library. The kind is stable and machine
/// checkable; the message is for humans.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

  private:
    ErrorKind kind_;
};

/// Exact weight and fitness arithmetic. All sums go through the checked
/// helpers below so that wraparound surfaces as ErrorKind::Overflow.
using Weight = std::int64_t;

inline Weight checked_add(Weight a, Weight b) {
    Weight r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "weight addition overflows int64");
    return r;
}

inline Weight checked_sub(Weight a, Weight b) {
    Weight r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "weight subtraction overflows int64");
    return r;
}

inline Weight checked_mul(Weight a, Weight b) {
    Weight r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorKind::Overflow, "weight product overflows int64");
    return r;
}

inline Weight checked_neg(Weight a) {
    if (a == std::numeric_limits<Weight>::min()) throw Error(ErrorKind::Overflow, "negation overflows int64");
    return -a;
}

inline Weight checked_abs(Weight a) { return a < 0 ? checked_neg(a) : a; }

/// Three-valued sign; zero is its own value.
constexpr int sign(Weight w) noexcept { return (w > 0) - (w < 0); }

}  // namespace vcsp
