#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace posetlab {

using BigInt = boost::multiprecision::cpp_int;

// Largest t >= 0 with t^r <= q (q >= 0, r >= 1).
BigInt iroot(const BigInt& q, unsigned r);

// floor(log2(x)) for x >= 1, as a machine integer bit position.
long msb_index(const BigInt& x);

// log2(x) as double for x >= 1 (top 64 bits of the mantissa).
double log2_big(const BigInt& x);

// A power of two kept symbolic; exponents routinely exceed machine range.
struct PowerOfTwo {
  BigInt exponent;

  // Decimal value when the exponent fits materialization, else "2^<exponent>".
  std::string str() const;
  // True when 2^exponent >= v.
  bool at_least(const BigInt& v) const;
};

// A cardinal-size payload for rendered relations: either a plain count or a
// symbolic power of two.
struct Card {
  bool pow2 = false;
  BigInt value;  // the count itself, or the exponent when pow2

  static Card plain(BigInt v) { return {false, std::move(v)}; }
  static Card power_of_two(BigInt e) { return {true, std::move(e)}; }
  std::string str() const;
};

}  // namespace posetlab
