#include "posetlab/bigint.hpp"

#include <cmath>

#include "posetlab/errors.hpp"

namespace posetlab {

BigInt iroot(const BigInt& q, unsigned r) {
  if (q < 0) throw InvalidArgs("iroot of a negative value");
  if (r == 0) throw InvalidArgs("iroot with zero index");
  if (q == 0) return 0;
  if (r == 1) return q;
  // Newton from an upper seed 2^ceil(bits/r); iterates descend to floor root.
  const long bits = msb_index(q) + 1;
  BigInt x = BigInt(1) << ((bits + r - 1) / r);
  while (true) {
    BigInt xr1 = boost::multiprecision::pow(x, r - 1);
    BigInt next = ((r - 1) * x * xr1 + q) / (r * xr1);
    if (next >= x) break;
    x = next;
  }
  while (boost::multiprecision::pow(x, r) > q) --x;
  while (boost::multiprecision::pow(x + 1, r) <= q) ++x;
  return x;
}

long msb_index(const BigInt& x) {
  if (x < 1) throw InvalidArgs("msb_index requires x >= 1");
  return long(boost::multiprecision::msb(x));
}

double log2_big(const BigInt& x) {
  if (x < 1) throw InvalidArgs("log2_big requires x >= 1");
  const long top = msb_index(x);
  if (top <= 62) return std::log2(x.convert_to<double>());
  // Unbounded exponents: split off the high 63 bits, which carry every
  // mantissa bit a double can hold, and add back the dropped bit count.
  const long drop = top - 62;
  const BigInt mant = x >> unsigned(drop);
  return std::log2(mant.convert_to<double>()) + double(drop);
}

std::string PowerOfTwo::str() const {
  if (exponent >= 0 && exponent <= 64) {
    BigInt v = BigInt(1) << unsigned(exponent);
    return v.str();
  }
  return "2^" + exponent.str();
}

bool PowerOfTwo::at_least(const BigInt& v) const {
  if (v <= 1) return exponent >= 0;
  const long need = msb_index(v);
  if (exponent > need) return true;
  if (exponent < need) return false;
  return (BigInt(1) << unsigned(need)) >= v;
}

std::string Card::str() const {
  if (!pow2) return value.str();
  return PowerOfTwo{value}.str();
}

}  // namespace posetlab
