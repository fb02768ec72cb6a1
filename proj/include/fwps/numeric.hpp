#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace fwps {

// All arithmetic in the library is exact. Weights of mutation towers grow
// doubly exponentially, so fixed-width integers are not an option anywhere
// a weight or a coordinate can flow.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// gcd(0,0) == 0, result always nonnegative (boost already guarantees both).
inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs(const Int& a) { return boost::multiprecision::abs(a); }

// Quotient rounded toward -inf / +inf.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}
inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// Division that must be exact; used where a formula guarantees integrality.
inline Int exact_div(const Int& a, const Int& b, const char* what = "exact_div") {
  if (b == 0 || a % b != 0)
    throw std::logic_error(std::string(what) + ": " + a.str() + " not divisible by " + b.str());
  return a / b;
}

// a mod b normalised into [0, b), b > 0.
inline Int mod_floor(const Int& a, const Int& b) {
  Int r = a % b;
  if (r < 0) r += b;
  return r;
}

inline Int pow(Int base, unsigned exp) {
  Int r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Largest divisor of a that is coprime to k: strip every prime a shares
// with k by repeated gcd division. Lets us certify "some prime divides a
// but not k" without factoring either number.
inline Int coprime_part(Int a, const Int& k) {
  if (a == 0) return 0;
  a = abs(a);
  for (Int g = gcd(a, k); g > 1; g = gcd(a, k)) a /= g;
  return a;
}

inline std::string rat_str(const Rat& r) {
  Int num = boost::multiprecision::numerator(r);
  Int den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace fwps
