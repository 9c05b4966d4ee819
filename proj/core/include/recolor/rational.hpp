#pragma once

#include <boost/rational.hpp>
#include <string>

namespace recolor {

// Exact rational arithmetic for charges and density thresholds.
// Magnitudes stay tiny (denominators are divisors of 12 or at most |V|),
// so long long is ample.
using Rat = boost::rational<long long>;

inline std::string toString(const Rat& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace recolor
