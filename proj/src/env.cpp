#include "uavpc/env.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace uavpc {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

EnvState encode_state(const NetworkSnapshot& snap, const LinkRealization& real,
                      const NetworkConfig& config) {
  const int nu = snap.n_users();
  EnvState state;
  state.features.resize(3 * nu);
  for (int u = 0; u < nu; ++u)
    state.features[u] = clamp01(snap.serving_distance_m[u] / config.cell_radius_m);
  for (int u = 0; u < nu; ++u) {
    const double gain_db = 10.0 * std::log10(real.serving_gain(snap, u));
    state.features[nu + u] =
        clamp01((gain_db - kGainFloorDb) / (kGainCeilDb - kGainFloorDb));
  }
  for (int u = 0; u < nu; ++u)
    state.features[2 * nu + u] = (snap.is_ceu[u] && snap.uav_of_user[u] >= 0) ? 1.0 : 0.0;
  return state;
}

Environment::Environment(const NetworkConfig& config, EnvOptions options)
    : config_(config), options_(std::move(options)), rng_(config.seed) {
  config_.validate();
  if (options_.slots_per_episode < 1)
    throw ConfigError("slots_per_episode must be >= 1");
  if (options_.fixed_snapshot)
    options_.fixed_snapshot->check_invariants(config_);
}

const NetworkSnapshot& Environment::snapshot() const {
  if (!active_) throw std::logic_error("no active episode");
  return snapshot_;
}

const LinkRealization& Environment::realization() const {
  if (!active_) throw std::logic_error("no active episode");
  return realization_;
}

LinkRealization Environment::draw_fading() {
  if (options_.pin_fading) return unit_fading_realization(snapshot_, config_);
  return draw_realization(snapshot_, config_, rng_);
}

EnvState Environment::reset() {
  snapshot_ = options_.fixed_snapshot ? *options_.fixed_snapshot
                                      : build_snapshot(config_, rng_);
  realization_ = draw_fading();
  slot_ = 0;
  active_ = true;
  return encode_state(snapshot_, realization_, config_);
}

StepOutcome Environment::step(const PowerAction& action) {
  if (!active_) throw std::logic_error("step() before reset()");
  if (slot_ >= options_.slots_per_episode)
    throw std::logic_error("episode is over; call reset()");
  action.validate(config_);

  const int nu = snapshot_.n_users();
  StepOutcome out;
  out.per_user_rate.resize(nu);
  double ccu_sum = 0.0, ceu_sum = 0.0;
  int ccu_n = 0, ceu_n = 0;
  for (int u = 0; u < nu; ++u) {
    const double rate =
        spectral_efficiency(sinr(u, snapshot_, realization_, action, config_));
    out.per_user_rate[u] = rate;
    out.reward += rate;
    if (snapshot_.is_ceu[u]) {
      ceu_sum += rate;
      ++ceu_n;
    } else {
      ccu_sum += rate;
      ++ccu_n;
    }
  }
  if (ccu_n > 0) out.ccu_mean_rate = ccu_sum / ccu_n;
  if (ceu_n > 0) out.ceu_mean_rate = ceu_sum / ceu_n;

  realization_ = draw_fading();
  ++slot_;
  out.next_state = encode_state(snapshot_, realization_, config_);
  return out;
}

}  // namespace uavpc
