#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace flagtoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

Int factorial(long n);

// Vanishes outside 0 <= k <= n, like the coefficient conventions need.
Int binomial(long n, long k);

// "p/q" for non-integers, plain "p" otherwise. Never floats.
std::string rational_string(const Rat& r);

} // namespace flagtoric
