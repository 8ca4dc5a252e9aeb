#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace levired {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using Coord = std::int64_t;
using IntVec = std::vector<Coord>;

struct IntVecHash {
  std::size_t operator()(const IntVec& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Coord c : v) {
      h ^= std::hash<Coord>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }
};

inline Coord dot(const IntVec& a, const IntVec& b) {
  Coord s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

/// Comma-separated rendering, e.g. "4,12,-10".
std::string join(const IntVec& v, const char* sep = ",");

/// Exact conversion; throws std::overflow_error if the value does not fit.
Coord to_coord(const Rational& q);

}  // namespace levired
