#include "uavpc/radio.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace uavpc {

void PowerAction::validate(const NetworkConfig& config) const {
  if (static_cast<int>(level_index.size()) != config.n_cells)
    throw std::invalid_argument("action length must equal n_cells");
  for (int m : level_index)
    if (m < 0 || m >= config.n_power_levels)
      throw std::out_of_range("power level index " + std::to_string(m) +
                              " outside [0, " + std::to_string(config.n_power_levels) +
                              ")");
}

LinkRealization draw_realization(const NetworkSnapshot& snap, const NetworkConfig& config,
                                 Rng& rng) {
  LinkRealization real;
  real.n_cells = snap.n_cells;
  real.n_users = snap.n_users();
  real.bs_user.resize(real.n_cells * real.n_users);
  real.uav_backhaul.resize(real.n_cells);
  real.uav_user.resize(real.n_cells * real.n_users);

  for (int bs = 0; bs < real.n_cells; ++bs)
    for (int u = 0; u < real.n_users; ++u)
      real.bs_user[bs * real.n_users + u] =
          link_gain(distance(snap.bs_positions[bs], snap.user_positions[u]), rng, config)
              .value;
  for (int v = 0; v < real.n_cells; ++v)
    real.uav_backhaul[v] =
        air_link_gain(distance(snap.uav_positions[v], snap.bs_positions[v]), rng, config)
            .value;
  for (int v = 0; v < real.n_cells; ++v)
    for (int u = 0; u < real.n_users; ++u)
      real.uav_user[v * real.n_users + u] =
          air_link_gain(distance(snap.uav_positions[v], snap.user_positions[u]), rng,
                        config)
              .value;
  return real;
}

LinkRealization unit_fading_realization(const NetworkSnapshot& snap,
                                        const NetworkConfig& config) {
  LinkRealization real;
  real.n_cells = snap.n_cells;
  real.n_users = snap.n_users();
  real.bs_user.resize(real.n_cells * real.n_users);
  real.uav_backhaul.resize(real.n_cells);
  real.uav_user.resize(real.n_cells * real.n_users);

  for (int bs = 0; bs < real.n_cells; ++bs)
    for (int u = 0; u < real.n_users; ++u)
      real.bs_user[bs * real.n_users + u] = db_to_linear_gain(
          pathloss_db(distance(snap.bs_positions[bs], snap.user_positions[u]), config));
  for (int v = 0; v < real.n_cells; ++v)
    real.uav_backhaul[v] = db_to_linear_gain(
        air_pathloss_db(distance(snap.uav_positions[v], snap.bs_positions[v]), config));
  for (int v = 0; v < real.n_cells; ++v)
    for (int u = 0; u < real.n_users; ++u)
      real.uav_user[v * real.n_users + u] = db_to_linear_gain(
          air_pathloss_db(distance(snap.uav_positions[v], snap.user_positions[u]), config));
  return real;
}

double power_of_level(int m_index, const NetworkConfig& config) {
  if (m_index < 0 || m_index >= config.n_power_levels)
    throw std::out_of_range("power level index out of range");
  return config.p_min_dbm +
         m_index * (config.p_max_dbm - config.p_min_dbm) / (config.n_power_levels - 1);
}

double relay_amplification(double backhaul_received_mw, double uav_tx_mw, double noise_mw,
                           RelayMode mode) {
  if (mode == RelayMode::kLiteral) return 1.0;
  return uav_tx_mw / (backhaul_received_mw + noise_mw);
}

namespace {

// Forwarded-path received power of UAV `uav` at `user`: amplification times
// both hop gains, with the UAV transmitting at its own cell's action power.
double relayed_term_mw(int uav, int user, const NetworkSnapshot& snap,
                       const LinkRealization& real, const PowerAction& action,
                       const NetworkConfig& config) {
  const double bs_power_mw = dbm_to_mw(power_of_level(action.level_index[uav], config));
  const double backhaul_rx_mw = bs_power_mw * real.uav_backhaul[uav];
  const double gain = relay_amplification(backhaul_rx_mw, bs_power_mw, config.noise_mw(),
                                          config.relay_mode);
  return gain * backhaul_rx_mw * real.uav_user_gain(uav, user);
}

}  // namespace

double signal_mw(int user, const NetworkSnapshot& snap, const LinkRealization& real,
                 const PowerAction& action, const NetworkConfig& config) {
  const int cell = snap.serving_cell(user);
  const double power_mw = dbm_to_mw(power_of_level(action.level_index[cell], config));
  double signal = power_mw * real.serving_gain(snap, user);
  const int uav = snap.uav_of_user[user];
  if (uav >= 0) signal += relayed_term_mw(uav, user, snap, real, action, config);
  return signal;
}

double interference_mw(int user, const NetworkSnapshot& snap, const LinkRealization& real,
                       const PowerAction& action, const NetworkConfig& config) {
  const int cell = snap.serving_cell(user);
  double total = 0.0;
  for (int bs = 0; bs < snap.n_cells; ++bs) {
    if (bs == cell) continue;
    total += dbm_to_mw(power_of_level(action.level_index[bs], config)) *
             real.bs_user_gain(bs, user);
  }
  const int own_uav = snap.uav_of_user[user];
  for (int uav : snap.active_uavs) {
    if (uav == own_uav) continue;
    total += relayed_term_mw(uav, user, snap, real, action, config);
  }
  return total;
}

double sinr(int user, const NetworkSnapshot& snap, const LinkRealization& real,
            const PowerAction& action, const NetworkConfig& config) {
  return signal_mw(user, snap, real, action, config) /
         (interference_mw(user, snap, real, action, config) + config.noise_mw());
}

double spectral_efficiency(double sinr_value) {
  if (sinr_value < 0.0) throw std::domain_error("SINR must be non-negative");
  return std::log2(1.0 + sinr_value);
}

}  // namespace uavpc
