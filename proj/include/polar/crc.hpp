#pragma once

#include <vector>

#include "polar/types.hpp"

namespace polar {

// CRC over a bit stream, MSB-first, zero initial register, no final XOR.
// The generator holds the coefficients below the leading x^width term.
struct CrcSpec {
  int width = 0;
  BitVector generator;   // width bits, MSB-first
  BitVector initial;     // width bits; all-zero unless stated otherwise

  // x^16 + x^12 + x^5 + 1
  static CrcSpec crc16();
  // x^12 + x^11 + x^3 + x^2 + x + 1
  static CrcSpec crc12();
  // x^4 + x + 1
  static CrcSpec crc4();
  // Generic constructor from the truncated polynomial mask (bit i of `poly`
  // is the coefficient of x^i).
  static CrcSpec from_poly(int width, unsigned long long poly);
};

BitVector crc_compute(const BitVector& bits, const CrcSpec& spec);
bool crc_check(const BitVector& bits_with_crc, const CrcSpec& spec);

}  // namespace polar
