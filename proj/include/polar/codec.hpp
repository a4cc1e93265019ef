#pragma once

#include <span>
#include <vector>

#include "polar/construction.hpp"
#include "polar/crc.hpp"
#include "polar/gf2.hpp"
#include "polar/types.hpp"

namespace polar {

// Where each logical field of a hybrid frame lives inside u (all positions
// ascending, 0-based). The pilot prefix (payload + its CRC) occupies the
// first k_s non-frozen positions; the remaining message bits and the
// whole-message CRC fill the rest of I_ns.
struct HybridLayout {
  std::vector<int> prefix_u;         // I^(1:k_s) = pilot payload ++ crc_e
  std::vector<int> pilot_payload_u;  // carries s[0 .. k_s-m_e)
  std::vector<int> crc_e_u;
  std::vector<int> tail_msg_u;       // carries s[k_s-m_e .. K)
  std::vector<int> crc_d_u;          // CRC over all of s
  std::vector<int> msg_u;            // all K message positions in s-order

  static HybridLayout from(const CodeConfig& cfg);

  BitVector extract_message(const BitVector& u) const;
};

// Positions of message and CRC bits for the classic non-systematic code
// (k_s = 0): message in the first K information positions, a single CRC
// in the rest.
struct BaselineLayout {
  std::vector<int> msg_u;
  std::vector<int> crc_u;

  static BaselineLayout from(const CodeConfig& cfg);
};

struct HybridFrame {
  BitVector s;  // K message bits
  BitVector u;  // uncoded vector
  BitVector v;  // codeword, v = u * G_N
  BitVector x;  // transmitted order, x = pi(v)
};

// x = u * G_N with the message in u^I and u^F = 0. `msg` must supply all
// |I| information bits (message plus any CRC), assigned in ascending order.
BitVector encode_non_systematic(const BitVector& msg, const CodeConfig& cfg);

// Classic systematic encoding: picks u^I so that the codeword restricted to
// J equals msg, with u outside I frozen to zero. Throws if the I x J
// submatrix of `g` is singular.
BitVector encode_systematic(const BitVector& msg, const BitMatrix& g,
                            std::span<const int> set_i, std::span<const int> set_j);

// Hybrid encoder with dynamic pilots. The codeword positions I_s replicate
// the first k_s non-frozen bits of u, which is what makes them usable as
// pilots; the replication is enforced by solving for u^{I_s}.
class HybridEncoder {
 public:
  explicit HybridEncoder(const CodeConfig& cfg);

  HybridFrame encode(const BitVector& s) const;

  // v^{I_s} of an arbitrary u-vector; the receiver's final consistency
  // check compares this against the decoded pilots.
  BitVector pilot_readback(const BitVector& u) const;

  const HybridLayout& layout() const { return layout_; }
  const CodeConfig& config() const { return cfg_; }

 private:
  const CodeConfig& cfg_;
  HybridLayout layout_;
  CrcSpec crc_e_, crc_d_;
  BitMatrix g_ns_s_;     // G^{I_ns, I_s}
  BitMatrix g_ss_inv_;   // (G^{I_s, I_s})^-1, always exists in this ordering
};

}  // namespace polar
