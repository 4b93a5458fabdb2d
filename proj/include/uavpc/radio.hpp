#pragma once

#include <vector>

#include "uavpc/channel.hpp"
#include "uavpc/config.hpp"
#include "uavpc/rng.hpp"
#include "uavpc/topology.hpp"

namespace uavpc {

// One discrete power level per BS.
struct PowerAction {
  std::vector<int> level_index;

  void validate(const NetworkConfig& config) const;
};

// All link gains (fading x path loss, linear) for one time slot. Gains are
// drawn for every transmitter-receiver pair, including UAVs that are
// currently inactive, so the number of random draws per slot depends only on
// the layout — never on classification. That keeps paired-seed comparisons
// across ref-distance variants aligned draw-for-draw.
struct LinkRealization {
  int n_cells = 0;
  int n_users = 0;
  std::vector<double> bs_user;       // [bs * n_users + user]
  std::vector<double> uav_backhaul;  // [uav], BS i -> UAV i hop
  std::vector<double> uav_user;      // [uav * n_users + user], 3-D hop

  double bs_user_gain(int bs, int user) const { return bs_user[bs * n_users + user]; }
  double uav_user_gain(int uav, int user) const { return uav_user[uav * n_users + user]; }
  double serving_gain(const NetworkSnapshot& snap, int user) const {
    return bs_user_gain(snap.serving_cell(user), user);
  }
};

LinkRealization draw_realization(const NetworkSnapshot& snapshot,
                                 const NetworkConfig& config, Rng& rng);

// Fading pinned to 1 on every link; pure path-loss gains.
LinkRealization unit_fading_realization(const NetworkSnapshot& snapshot,
                                        const NetworkConfig& config);

// Transmit power of level m: p_min + m * (p_max - p_min) / (levels - 1), dBm.
double power_of_level(int m_index, const NetworkConfig& config);

// Relay gain: 1 in literal mode; tx / (received + noise) in normalized AF.
double relay_amplification(double backhaul_received_mw, double uav_tx_mw,
                           double noise_mw, RelayMode mode);

// Desired received power (direct plus relayed term for assisted users), mW.
double signal_mw(int user, const NetworkSnapshot& snapshot,
                 const LinkRealization& realization, const PowerAction& action,
                 const NetworkConfig& config);

// Aggregate co-channel power from all non-serving BSs plus all active UAVs
// other than the user's own pair, mW.
double interference_mw(int user, const NetworkSnapshot& snapshot,
                       const LinkRealization& realization, const PowerAction& action,
                       const NetworkConfig& config);

double sinr(int user, const NetworkSnapshot& snapshot, const LinkRealization& realization,
            const PowerAction& action, const NetworkConfig& config);

// Shannon spectral efficiency log2(1 + sinr), bps/Hz.
double spectral_efficiency(double sinr_value);

}  // namespace uavpc
