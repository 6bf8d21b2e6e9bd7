#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace zc {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// cpp_rational keeps lowest terms and a positive denominator by construction,
// which is exactly the invariant the rest of the library assumes.

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline int sign(const Rat& q) { return q.sign(); }
inline int sign(const Int& n) { return n.sign(); }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

/// Serializes as "p/q", or plain "p" when the denominator is 1.
inline std::string to_string(const Rat& q) {
  if (den(q) == 1) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

inline std::string to_string(const Int& n) { return n.str(); }

/// Parses "p", "-p", or "p/q". Throws std::invalid_argument on malformed input.
inline Rat parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int p(s.substr(0, slash));
    Int q(s.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed rational literal: " + s);
  }
}

using RatVec = std::vector<Rat>;
using IntVec = std::vector<Int>;
using RatMat = std::vector<RatVec>;
using IntMat = std::vector<IntVec>;

}  // namespace zc
