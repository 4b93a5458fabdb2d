#include "uavpc/config.hpp"

#include <cmath>

namespace uavpc {

double NetworkConfig::noise_mw() const { return std::pow(10.0, noise_dbm / 10.0); }

void NetworkConfig::validate() const {
  if (n_cells < 1) throw ConfigError("n_cells must be >= 1");
  if (users_per_cell < 1) throw ConfigError("users_per_cell must be >= 1");
  if (!(cell_radius_m > 0.0)) throw ConfigError("cell_radius_m must be positive");
  if (!(min_user_distance_m > 0.0) || min_user_distance_m >= cell_radius_m)
    throw ConfigError("min_user_distance_m must lie in (0, cell_radius_m)");
  if (ref_distance_m < 0.0) throw ConfigError("ref_distance_m must be >= 0");
  if (!(uav_altitude_m > 0.0)) throw ConfigError("uav_altitude_m must be positive");
  if (!(inter_site_distance_m > 0.0))
    throw ConfigError("inter_site_distance_m must be positive");
  if (!(p_min_dbm < p_max_dbm)) throw ConfigError("p_min_dbm must be below p_max_dbm");
  if (n_power_levels < 2) throw ConfigError("n_power_levels must be >= 2");
  if (!(pathloss_slope > 0.0) || !(air_pathloss_slope > 0.0))
    throw ConfigError("path-loss slopes must be positive");
}

void AgentConfig::validate() const {
  if (gamma < 0.0 || gamma > 1.0) throw ConfigError("gamma must lie in [0, 1]");
  if (!(learning_rate > 0.0)) throw ConfigError("learning_rate must be positive");
  if (!(epsilon_floor > 0.0) || epsilon_floor > epsilon_init || epsilon_init > 1.0)
    throw ConfigError("epsilon schedule must satisfy 0 < floor <= init <= 1");
  if (epsilon_decay <= 0.0 || epsilon_decay > 1.0)
    throw ConfigError("epsilon_decay must lie in (0, 1]");
  if (batch_size < 1) throw ConfigError("batch_size must be >= 1");
  if (static_cast<std::size_t>(batch_size) > replay_capacity)
    throw ConfigError("batch_size must not exceed replay_capacity");
  if (train_every < 1 || target_sync_every < 1)
    throw ConfigError("train_every and target_sync_every must be >= 1");
  if (slots_per_episode < 1) throw ConfigError("slots_per_episode must be >= 1");
  if (episodes < 1) throw ConfigError("episodes must be >= 1");
  if (replay_capacity < 1) throw ConfigError("replay_capacity must be >= 1");
}

std::string relay_mode_name(RelayMode mode) {
  return mode == RelayMode::kLiteral ? "literal" : "normalized_af";
}

RelayMode relay_mode_from_name(const std::string& name) {
  if (name == "literal") return RelayMode::kLiteral;
  if (name == "normalized_af") return RelayMode::kNormalizedAf;
  throw ConfigError("unknown relay_mode '" + name + "'");
}

}  // namespace uavpc
