#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uavpc {

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// How the relay scales the signal it forwards.
//   kLiteral      — no amplification factor at all; the forwarded term is the
//                   plain product of the two hop gains. Kept for unit tests;
//                   at realistic path losses the term is ~1e-26 of the direct
//                   signal and has no effect.
//   kNormalizedAf — variable-gain amplify-and-forward: the relay retransmits
//                   at its power budget, gain = tx / (received + noise).
enum class RelayMode { kLiteral, kNormalizedAf };

// Physical-layer and layout parameters. Distances in meters, powers in dBm.
struct NetworkConfig {
  int n_cells = 9;                        // must be a perfect square for grid layout
  int users_per_cell = 2;
  double cell_radius_m = 1000.0;
  double min_user_distance_m = 10.0;
  double ref_distance_m = 400.0;          // CCU/CEU classification threshold
  double uav_altitude_m = 25.0;
  double inter_site_distance_m = 2000.0;
  double p_min_dbm = 5.0;
  double p_max_dbm = 38.0;
  int n_power_levels = 10;
  double noise_dbm = -114.0;
  RelayMode relay_mode = RelayMode::kNormalizedAf;
  double pathloss_intercept_db = 128.1;
  double pathloss_slope = 37.6;           // dB per decade, distance in km
  double air_pathloss_slope = 37.6;       // slope for BS-UAV and UAV-user hops
  std::uint64_t seed = 1;

  int n_users() const { return n_cells * users_per_cell; }
  double noise_mw() const;

  // Throws ConfigError on violated invariants. Grid squareness is checked at
  // grid construction, not here, so hand-built non-grid layouts stay usable.
  void validate() const;
};

// Learning hyperparameters.
struct AgentConfig {
  double gamma = 0.99;
  double learning_rate = 0.001;
  double epsilon_init = 1.0;
  double epsilon_floor = 0.01;
  double epsilon_decay = 0.995;           // per episode
  int batch_size = 256;
  int train_every = 10;                   // global slots between training steps
  int target_sync_every = 100;            // global slots between target syncs
  int slots_per_episode = 50;
  int episodes = 300;
  std::size_t replay_capacity = 50000;

  void validate() const;
};

std::string relay_mode_name(RelayMode mode);
RelayMode relay_mode_from_name(const std::string& name);

}  // namespace uavpc
