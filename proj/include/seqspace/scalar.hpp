#pragma once

#include <string>
#include <variant>

#include "seqspace/rational.hpp"

namespace seqspace {

/// Numeric mode for a computation. Fixed once per call; never mixed.
enum class Mode { Float64, Exact };

inline const char* mode_name(Mode m) { return m == Mode::Float64 ? "float64" : "exact"; }

/// A number in whichever mode the computation runs.
using Scalar = std::variant<double, Rational>;

inline double scalar_to_double(const Scalar& s) {
    if (std::holds_alternative<double>(s)) return std::get<double>(s);
    return std::get<Rational>(s).to_double();
}

inline std::string scalar_to_string(const Scalar& s) {
    if (std::holds_alternative<double>(s)) return std::to_string(std::get<double>(s));
    return std::get<Rational>(s).to_string();
}

}  // namespace seqspace
