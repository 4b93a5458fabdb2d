#include "uavpc/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace uavpc {

namespace {

double pathloss_db_impl(double distance_m, double intercept_db, double slope) {
  if (!(distance_m > 0.0))
    throw std::domain_error("path loss requires a positive distance");
  return intercept_db + slope * std::log10(distance_m / 1000.0);
}

}  // namespace

double pathloss_db(double distance_m, const NetworkConfig& config) {
  return pathloss_db_impl(distance_m, config.pathloss_intercept_db, config.pathloss_slope);
}

double air_pathloss_db(double distance_m, const NetworkConfig& config) {
  return pathloss_db_impl(distance_m, config.pathloss_intercept_db,
                          config.air_pathloss_slope);
}

double dbm_to_mw(double p_dbm) { return std::pow(10.0, p_dbm / 10.0); }

double rayleigh_power_gain(Rng& rng) { return -std::log(rng.uniform_open01()); }

LinkGain link_gain(double distance_m, Rng& rng, const NetworkConfig& config) {
  return {rayleigh_power_gain(rng) * db_to_linear_gain(pathloss_db(distance_m, config))};
}

LinkGain air_link_gain(double distance_m, Rng& rng, const NetworkConfig& config) {
  return {rayleigh_power_gain(rng) *
          db_to_linear_gain(air_pathloss_db(distance_m, config))};
}

}  // namespace uavpc
