#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace diagcat {

// Exact arbitrary precision rational used for all symbolic coefficients.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

}  // namespace diagcat
