#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace inireg {

// Exact coefficient arithmetic. All computations in the library are over the
// rationals with arbitrary-precision integers; no floating point anywhere.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const Integer& z) { return z.str(); }

}  // namespace inireg
