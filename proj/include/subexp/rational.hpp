#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace subexp {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline Rational make_rational(std::int64_t num, std::int64_t den) { return Rational(num, den); }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// "p/q" or "p"; the inverse of rational_to_string.
Rational rational_from_string(const std::string& text);
std::string rational_to_string(const Rational& r);

// Rounding helpers for formula calculators. Values within a relative 1e-9 of an
// integer snap to it first, so that e.g. ceil(72.00000000000001) == 72.
long long floor_snapped(double x);
long long ceil_snapped(double x);

}  // namespace subexp
