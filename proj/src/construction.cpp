#include "polar/construction.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace polar {

namespace {

bool is_power_of_two(int x) { return x > 0 && (x & (x - 1)) == 0; }

int log2_exact(int x) {
  if (!is_power_of_two(x)) throw std::invalid_argument("block length must be a power of two");
  int n = 0;
  while ((1 << n) < x) ++n;
  return n;
}

// Chung et al. approximation of phi(m) = 1 - E[tanh(L/2)], L ~ N(m, 2m).
double ga_phi(double m) {
  if (m <= 0) return 1.0;
  if (m < 10.0) return std::exp(0.0218 - 0.4527 * std::pow(m, 0.86));
  return std::sqrt(3.14159265358979323846 / m) * std::exp(-m / 4.0) * (1.0 - 10.0 / (7.0 * m));
}

double ga_phi_inv(double y) {
  if (y >= 1.0) return 0.0;
  const double y10 = ga_phi(10.0);
  if (y > y10) return std::pow((0.0218 - std::log(y)) / 0.4527, 1.0 / 0.86);
  // phi is strictly decreasing; bisect on [10, hi].
  double lo = 10.0, hi = 10.0;
  while (ga_phi(hi) > y && hi < 1e7) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (ga_phi(mid) > y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

// Check-node degradation m -> phi^-1(1 - (1-phi(m))^2). Beyond the range
// where phi underflows, the exact map approaches m - 4*ln(2).
double ga_check(double m) {
  if (m > 700.0) return m - 4.0 * std::log(2.0);
  const double p = ga_phi(m);
  const double y = 2.0 * p - p * p;
  return ga_phi_inv(y);
}

}  // namespace

std::vector<double> bec_z_profile(int n_levels, double z0) {
  std::vector<double> z{z0};
  for (int level = 0; level < n_levels; ++level) {
    std::vector<double> next(z.size() * 2);
    for (std::size_t i = 0; i < z.size(); ++i) {
      next[2 * i] = 2.0 * z[i] - z[i] * z[i];
      next[2 * i + 1] = z[i] * z[i];
    }
    z.swap(next);
  }
  return z;
}

std::vector<double> ga_llr_mean_profile(int n_levels, double m0) {
  std::vector<double> m{m0};
  for (int level = 0; level < n_levels; ++level) {
    std::vector<double> next(m.size() * 2);
    for (std::size_t i = 0; i < m.size(); ++i) {
      next[2 * i] = ga_check(m[i]);
      next[2 * i + 1] = 2.0 * m[i];
    }
    m.swap(next);
  }
  return m;
}

std::vector<int> reliability_order(int n, double design_snr_db, double sigma_h,
                                   ConstructionMethod method) {
  const int levels = log2_exact(n);
  const double snr_lin = std::pow(10.0, design_snr_db / 10.0);
  (void)sigma_h;  // enters through the SNR definition SNR = 2*sigma_h^2/sigma^2
  std::vector<double> score;
  bool lower_is_better;
  if (method == ConstructionMethod::gaussian_approx) {
    // Coherent proxy: gain sqrt(E[h^2]), so the channel-LLR mean is
    // 2*E[h^2]/sigma^2 = 2*snr_lin.
    score = ga_llr_mean_profile(levels, 2.0 * snr_lin);
    lower_is_better = false;
  } else {
    // Bhattacharyya of BPSK-AWGN at the same design point.
    score = bec_z_profile(levels, std::exp(-snr_lin / 2.0));
    lower_is_better = true;
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (score[a] != score[b]) return lower_is_better ? score[a] < score[b] : score[a] > score[b];
    return a > b;  // ties: prefer the later synthetic channel
  });
  return order;
}

IndexSets build_index_sets(int n, int k, int m_e, int m_d, int k_s, std::span<const int> ranking) {
  const int n_info = k + m_e + m_d + k_s;
  if (n_info > n) throw std::invalid_argument("build_index_sets: K + m_e + m_d + k_s exceeds N");
  if (static_cast<int>(ranking.size()) != n)
    throw std::invalid_argument("build_index_sets: ranking length does not match N");
  if (n_info < 2 * k_s)
    throw std::invalid_argument("build_index_sets: |I| >= 2*k_s required so the pilot prefix stays non-systematic");

  std::vector<int> info(ranking.begin(), ranking.begin() + n_info);
  std::sort(info.begin(), info.end());

  IndexSets sets;
  sets.systematic.assign(info.end() - k_s, info.end());
  sets.non_systematic.assign(info.begin(), info.end() - k_s);

  std::vector<std::uint8_t> in_info(n, 0);
  for (int i : info) in_info[i] = 1;
  for (int i = 0; i < n; ++i)
    if (!in_info[i]) sets.frozen.push_back(i);

  // The first k_s members of I must all be non-systematic.
  for (int i = 0; i < k_s; ++i) {
    if (std::binary_search(sets.systematic.begin(), sets.systematic.end(), info[i]))
      throw std::invalid_argument("build_index_sets: pilot prefix intersects the systematic set");
  }
  return sets;
}

Interleaver build_interleaver(int n, int t_c, int blocks, int p, std::span<const int> systematic) {
  if (t_c * blocks != n) throw std::invalid_argument("build_interleaver: N != B * T_c");
  if (p > t_c) throw std::invalid_argument("build_interleaver: more pilots per block than the block holds");
  if (static_cast<int>(systematic.size()) != p * blocks)
    throw std::invalid_argument("build_interleaver: |I_s| != p * B");

  std::vector<std::uint8_t> is_pilot_slot(n, 0);
  std::vector<int> pilot_slots;
  pilot_slots.reserve(systematic.size());
  for (int b = 0; b < blocks; ++b)
    for (int j = 0; j < p; ++j) {
      pilot_slots.push_back(b * t_c + j);
      is_pilot_slot[b * t_c + j] = 1;
    }

  Interleaver out;
  out.pi.assign(n, -1);
  for (std::size_t a = 0; a < systematic.size(); ++a) out.pi[systematic[a]] = pilot_slots[a];

  int slot = 0;
  for (int i = 0; i < n; ++i) {
    if (out.pi[i] >= 0) continue;
    while (is_pilot_slot[slot]) ++slot;
    out.pi[i] = slot++;
  }

  out.inv.assign(n, -1);
  for (int i = 0; i < n; ++i) out.inv[out.pi[i]] = i;
  return out;
}

CodeConfig CodeConfig::build(const CodeParams& params) {
  CodeConfig cfg;
  cfg.params_ = params;
  if (!is_power_of_two(params.n)) throw std::invalid_argument("CodeConfig: N must be a power of two");
  if (params.t_c * params.blocks != params.n)
    throw std::invalid_argument("CodeConfig: N != B * T_c");
  if (params.k <= 0) throw std::invalid_argument("CodeConfig: K must be positive");
  if (params.pilots_per_block < 0 || params.m_e < 0 || params.m_d < 0)
    throw std::invalid_argument("CodeConfig: negative size parameter");
  const int k_s = params.pilots_per_block * params.blocks;
  if (k_s == 0 && params.m_e != 0)
    throw std::invalid_argument("CodeConfig: m_e requires pilots (k_s > 0)");
  if (k_s > 0 && params.m_e >= k_s)
    throw std::invalid_argument("CodeConfig: m_e must be smaller than k_s");
  if (params.list_e < 1 || params.list_d < 1)
    throw std::invalid_argument("CodeConfig: list sizes must be at least 1");

  const auto ranking = reliability_order(params.n, params.design_snr_db, params.sigma_h, params.method);
  cfg.sets_ = build_index_sets(params.n, params.k, params.m_e, params.m_d, k_s, ranking);
  cfg.pi_ = build_interleaver(params.n, params.t_c, params.blocks, params.pilots_per_block,
                              cfg.sets_.systematic);
  cfg.finalize();
  return cfg;
}

void CodeConfig::finalize() {
  info_.clear();
  info_.reserve(sets_.non_systematic.size() + sets_.systematic.size());
  std::merge(sets_.non_systematic.begin(), sets_.non_systematic.end(),
             sets_.systematic.begin(), sets_.systematic.end(), std::back_inserter(info_));
  const int ks = k_s();
  prefix_.assign(info_.begin(), info_.begin() + ks);
  if (static_cast<int>(sets_.frozen.size() + info_.size()) != params_.n)
    throw std::logic_error("CodeConfig: index sets do not partition [N]");
}

CodeConfig CodeConfig::baseline_variant() const {
  CodeParams p = params_;
  p.pilots_per_block = 0;
  p.m_e = 0;
  p.m_d = 16;
  return build(p);
}

namespace {

nlohmann::json one_based(const std::vector<int>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (int x : v) arr.push_back(x + 1);
  return arr;
}

std::vector<int> zero_based(const nlohmann::json& arr) {
  std::vector<int> v;
  v.reserve(arr.size());
  for (const auto& x : arr) v.push_back(x.get<int>() - 1);
  return v;
}

}  // namespace

std::string CodeConfig::to_json_text() const {
  nlohmann::json j;
  j["N"] = params_.n;
  j["K"] = params_.k;
  j["T_c"] = params_.t_c;
  j["B"] = params_.blocks;
  j["p"] = params_.pilots_per_block;
  j["k_s"] = k_s();
  j["m_e"] = params_.m_e;
  j["m_d"] = params_.m_d;
  j["L_e"] = params_.list_e;
  j["L_d"] = params_.list_d;
  j["design_snr_db"] = params_.design_snr_db;
  j["sigma_h"] = params_.sigma_h;
  j["construction"] = params_.method == ConstructionMethod::gaussian_approx ? "ga" : "bec";
  j["frozen_set"] = one_based(sets_.frozen);
  j["non_systematic_set"] = one_based(sets_.non_systematic);
  j["systematic_set"] = one_based(sets_.systematic);
  // interleaver[i] is the 1-based transmit slot of codeword position i+1.
  nlohmann::json pi = nlohmann::json::array();
  for (int x : pi_.pi) pi.push_back(x + 1);
  j["interleaver"] = pi;
  return j.dump(2);
}

CodeConfig CodeConfig::from_json_text(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  CodeConfig cfg;
  cfg.params_.n = j.at("N").get<int>();
  cfg.params_.k = j.at("K").get<int>();
  cfg.params_.t_c = j.at("T_c").get<int>();
  cfg.params_.blocks = j.at("B").get<int>();
  cfg.params_.pilots_per_block = j.at("p").get<int>();
  cfg.params_.m_e = j.at("m_e").get<int>();
  cfg.params_.m_d = j.at("m_d").get<int>();
  cfg.params_.list_e = j.at("L_e").get<int>();
  cfg.params_.list_d = j.at("L_d").get<int>();
  cfg.params_.design_snr_db = j.at("design_snr_db").get<double>();
  cfg.params_.sigma_h = j.at("sigma_h").get<double>();
  cfg.params_.method = j.at("construction").get<std::string>() == "bec"
                           ? ConstructionMethod::bec_proxy
                           : ConstructionMethod::gaussian_approx;
  cfg.sets_.frozen = zero_based(j.at("frozen_set"));
  cfg.sets_.non_systematic = zero_based(j.at("non_systematic_set"));
  cfg.sets_.systematic = zero_based(j.at("systematic_set"));
  const auto pi = zero_based(j.at("interleaver"));
  cfg.pi_.pi = pi;
  cfg.pi_.inv.assign(pi.size(), -1);
  for (std::size_t i = 0; i < pi.size(); ++i) {
    if (pi[i] < 0 || pi[i] >= static_cast<int>(pi.size()) || cfg.pi_.inv[pi[i]] != -1)
      throw std::invalid_argument("CodeConfig: interleaver is not a permutation");
    cfg.pi_.inv[pi[i]] = static_cast<int>(i);
  }
  if (j.at("k_s").get<int>() != cfg.params_.pilots_per_block * cfg.params_.blocks)
    throw std::invalid_argument("CodeConfig: k_s does not equal p * B");
  cfg.finalize();
  return cfg;
}

void CodeConfig::save_json(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_json_text() << "\n";
  if (!out) throw std::runtime_error("failed writing " + path);
}

CodeConfig CodeConfig::load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

}  // namespace polar
