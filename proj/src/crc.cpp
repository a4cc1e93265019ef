#include "polar/crc.hpp"

#include <stdexcept>

namespace polar {

CrcSpec CrcSpec::from_poly(int width, unsigned long long poly) {
  CrcSpec spec;
  spec.width = width;
  spec.generator.resize(width);
  for (int i = 0; i < width; ++i)
    spec.generator[i] = static_cast<std::uint8_t>((poly >> (width - 1 - i)) & 1u);
  spec.initial.assign(width, 0);
  return spec;
}

CrcSpec CrcSpec::crc16() { return from_poly(16, 0x1021); }
CrcSpec CrcSpec::crc12() { return from_poly(12, 0x80F); }
CrcSpec CrcSpec::crc4() { return from_poly(4, 0x3); }

BitVector crc_compute(const BitVector& bits, const CrcSpec& spec) {
  if (spec.width == 0) return {};
  if (static_cast<int>(spec.generator.size()) != spec.width)
    throw std::invalid_argument("crc_compute: generator length does not match width");
  BitVector reg = spec.initial;
  reg.resize(spec.width, 0);
  for (std::uint8_t bit : bits) {
    const std::uint8_t fb = reg[0] ^ (bit & 1u);
    for (int i = 0; i + 1 < spec.width; ++i) reg[i] = reg[i + 1];
    reg[spec.width - 1] = 0;
    if (fb)
      for (int i = 0; i < spec.width; ++i) reg[i] ^= spec.generator[i];
  }
  return reg;
}

bool crc_check(const BitVector& bits_with_crc, const CrcSpec& spec) {
  if (spec.width == 0) return true;
  if (static_cast<int>(bits_with_crc.size()) < spec.width) return false;
  const BitVector payload(bits_with_crc.begin(), bits_with_crc.end() - spec.width);
  const BitVector tail(bits_with_crc.end() - spec.width, bits_with_crc.end());
  return crc_compute(payload, spec) == tail;
}

}  // namespace polar
