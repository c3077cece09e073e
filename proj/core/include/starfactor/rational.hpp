#pragma once

// Exact rational arithmetic used wherever weights or feasibility are
// involved. Arbitrary precision: elimination and Fourier-Motzkin can grow
// coefficients well past 64 bits.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace starfactor {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// "5", "-3/4", ...
inline std::string to_string(const Rat& r) { return r.str(); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

}  // namespace starfactor
