#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cstdint>
#include <string>

namespace gae {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline Int int_gcd(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) { Int t = a % b; a = b; b = t; }
  return a;
}

inline std::string to_string(const Int& x) { return x.str(); }

} // namespace gae
