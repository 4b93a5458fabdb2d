#pragma once

#include <cmath>

#include "uavpc/config.hpp"
#include "uavpc/rng.hpp"

namespace uavpc {

// Dimensionless linear power gain of one link for one slot: small-scale
// fading times path loss.
struct LinkGain {
  double value = 0.0;
};

// Terrestrial path loss in dB: intercept + slope * log10(d / 1 km).
// Throws std::domain_error for non-positive distances.
double pathloss_db(double distance_m, const NetworkConfig& config);

// Same model with the air-link slope; used for BS-UAV and UAV-user hops.
double air_pathloss_db(double distance_m, const NetworkConfig& config);

inline double db_to_linear_gain(double loss_db) { return std::pow(10.0, -loss_db / 10.0); }

double dbm_to_mw(double p_dbm);

// Unit-mean exponential power gain of a unit-variance Rayleigh amplitude.
double rayleigh_power_gain(Rng& rng);

LinkGain link_gain(double distance_m, Rng& rng, const NetworkConfig& config);
LinkGain air_link_gain(double distance_m, Rng& rng, const NetworkConfig& config);

}  // namespace uavpc
