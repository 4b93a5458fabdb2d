#pragma once

#include <optional>
#include <vector>

#include "uavpc/config.hpp"
#include "uavpc/radio.hpp"
#include "uavpc/rng.hpp"
#include "uavpc/topology.hpp"

namespace uavpc {

// Feature vector of length 3*N*K in [0,1]: all normalized serving distances,
// then all normalized serving-gain dB values, then all assisted-CEU flags.
struct EnvState {
  std::vector<double> features;
};

struct StepOutcome {
  double reward = 0.0;                  // sum spectral efficiency, bps/Hz
  std::vector<double> per_user_rate;    // bps/Hz
  EnvState next_state;
  std::optional<double> ccu_mean_rate;  // absent when the group is empty
  std::optional<double> ceu_mean_rate;
};

struct EnvOptions {
  int slots_per_episode = 50;
  // Pin every fading coefficient to 1 (deterministic channel); test hook.
  bool pin_fading = false;
  // Reuse this geometry on every reset instead of sampling a fresh one.
  std::optional<NetworkSnapshot> fixed_snapshot;
};

// Serving-gain dB window mapped affinely onto [0,1] for the state encoding;
// fixed so the encoding is stationary across episodes.
inline constexpr double kGainFloorDb = -150.0;
inline constexpr double kGainCeilDb = -60.0;

EnvState encode_state(const NetworkSnapshot& snapshot, const LinkRealization& realization,
                      const NetworkConfig& config);

// The MDP environment: geometry frozen per episode, block fading redrawn
// every slot, reward = sum spectral efficiency. Single-threaded; run
// independent instances for parallel experiments.
class Environment {
 public:
  explicit Environment(const NetworkConfig& config, EnvOptions options = {});

  EnvState reset();
  StepOutcome step(const PowerAction& action);

  bool episode_active() const { return active_; }
  int slot() const { return slot_; }
  const NetworkConfig& config() const { return config_; }
  const EnvOptions& options() const { return options_; }
  const NetworkSnapshot& snapshot() const;
  const LinkRealization& realization() const;

 private:
  LinkRealization draw_fading();

  NetworkConfig config_;
  EnvOptions options_;
  Rng rng_;
  NetworkSnapshot snapshot_;
  LinkRealization realization_;
  int slot_ = 0;
  bool active_ = false;
};

}  // namespace uavpc
