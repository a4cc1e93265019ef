#pragma once

#include <span>
#include <string>
#include <vector>

#include "polar/types.hpp"

namespace polar {

enum class ConstructionMethod { gaussian_approx, bec_proxy };

// Per-index Bhattacharyya parameters of the synthetic channels of a
// length-2^n_levels polar code in natural ordering, starting from a BEC
// with erasure probability z0. Lower is better.
std::vector<double> bec_z_profile(int n_levels, double z0);

// Per-index mean LLRs under the Gaussian approximation for a BI-AWGN design
// channel whose channel-LLR mean is m0. Higher is better.
std::vector<double> ga_llr_mean_profile(int n_levels, double m0);

// Deterministic ranking of synthetic-channel indices, most reliable first
// (0-based). The design channel is a coherent AWGN proxy of the fading
// channel: signal power E[h^2] = 2*sigma_h^2 at the given design SNR.
std::vector<int> reliability_order(int n, double design_snr_db, double sigma_h,
                                   ConstructionMethod method = ConstructionMethod::gaussian_approx);

struct IndexSets {
  std::vector<int> frozen;           // F, ascending
  std::vector<int> non_systematic;   // I_ns, ascending
  std::vector<int> systematic;       // I_s, ascending
};

// Partitions [0,N): I = the K+m_e+m_d+k_s most reliable indices, I_s = the
// k_s largest-index members of I, I_ns = I \ I_s, F = complement. Throws if
// the first k_s indices of I are not all in I_ns.
IndexSets build_index_sets(int n, int k, int m_e, int m_d, int k_s, std::span<const int> ranking);

// pi maps codeword position (pre-interleave, v-order) to transmit position
// (x-order): x[pi[i]] = v[i].
struct Interleaver {
  std::vector<int> pi;
  std::vector<int> inv;
};

// Places the systematic positions I_s (ascending) at the leading p slots of
// each of the `blocks` coherent blocks; everything else fills the remaining
// slots in ascending order.
Interleaver build_interleaver(int n, int t_c, int blocks, int p, std::span<const int> systematic);

struct CodeParams {
  int n = 0;                 // block length N, power of two
  int k = 0;                 // message bits per frame
  int t_c = 0;               // coherent time
  int blocks = 0;            // B; N = B * t_c
  int pilots_per_block = 0;  // p; k_s = p * B
  int m_e = 0;               // CRC bits protecting the pilot prefix
  int m_d = 0;               // CRC bits protecting the whole message
  int list_e = 16;
  int list_d = 16;
  double design_snr_db = 4.0;
  double sigma_h = 1.0;
  ConstructionMethod method = ConstructionMethod::gaussian_approx;
};

class CodeConfig {
 public:
  static CodeConfig build(const CodeParams& params);

  const CodeParams& params() const { return params_; }
  int n() const { return params_.n; }
  int k() const { return params_.k; }
  int t_c() const { return params_.t_c; }
  int blocks() const { return params_.blocks; }
  int pilots_per_block() const { return params_.pilots_per_block; }
  int k_s() const { return params_.pilots_per_block * params_.blocks; }
  int m_e() const { return params_.m_e; }
  int m_d() const { return params_.m_d; }
  int list_e() const { return params_.list_e; }
  int list_d() const { return params_.list_d; }
  double design_snr_db() const { return params_.design_snr_db; }
  double sigma_h() const { return params_.sigma_h; }

  const std::vector<int>& frozen_set() const { return sets_.frozen; }
  const std::vector<int>& non_systematic_set() const { return sets_.non_systematic; }
  const std::vector<int>& systematic_set() const { return sets_.systematic; }
  const std::vector<int>& information_set() const { return info_; }  // I = I_ns u I_s, ascending
  const std::vector<int>& prefix_set() const { return prefix_; }     // first k_s members of I
  const Interleaver& interleaver() const { return pi_; }

  // The classic non-systematic comparison code sharing this ranking:
  // k_s = 0, m_e = 0, m_d = 16.
  CodeConfig baseline_variant() const;

  std::string to_json_text() const;
  static CodeConfig from_json_text(const std::string& text);
  void save_json(const std::string& path) const;
  static CodeConfig load_json(const std::string& path);

 private:
  CodeConfig() = default;
  void finalize();  // derives info_/prefix_ and validates invariants

  CodeParams params_;
  IndexSets sets_;
  Interleaver pi_;
  std::vector<int> info_;
  std::vector<int> prefix_;
};

}  // namespace polar
