#include "uavpc/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace uavpc {

bool NetworkSnapshot::uav_active(int uav) const {
  return std::binary_search(active_uavs.begin(), active_uavs.end(), uav);
}

void NetworkSnapshot::check_invariants(const NetworkConfig& config) const {
  const int nu = n_users();
  if (static_cast<int>(user_positions.size()) != nu ||
      static_cast<int>(serving_distance_m.size()) != nu ||
      static_cast<int>(is_ceu.size()) != nu ||
      static_cast<int>(uav_of_user.size()) != nu)
    throw std::logic_error("snapshot: per-user vectors have inconsistent sizes");
  if (static_cast<int>(bs_positions.size()) != n_cells ||
      static_cast<int>(uav_positions.size()) != n_cells)
    throw std::logic_error("snapshot: per-cell vectors have inconsistent sizes");

  std::vector<bool> seen(n_cells, false);
  for (int u = 0; u < nu; ++u) {
    const double d = serving_distance_m[u];
    if (d < config.min_user_distance_m - 1e-9 || d > config.cell_radius_m + 1e-9)
      throw std::logic_error("snapshot: serving distance outside [min, R]");
    if (is_ceu[u] != (d > config.ref_distance_m))
      throw std::logic_error("snapshot: CEU flag inconsistent with threshold");
    const int v = uav_of_user[u];
    if (v >= 0) {
      if (!is_ceu[u]) throw std::logic_error("snapshot: paired user is not a CEU");
      if (v >= n_cells) throw std::logic_error("snapshot: UAV index out of range");
      if (seen[v]) throw std::logic_error("snapshot: UAV paired with two users");
      seen[v] = true;
      if (!uav_active(v)) throw std::logic_error("snapshot: paired UAV not active");
    }
  }
  for (int v : active_uavs)
    if (!seen[v]) throw std::logic_error("snapshot: active UAV has no paired user");
}

std::vector<Vec2> build_grid(const NetworkConfig& config) {
  const int side = static_cast<int>(std::lround(std::sqrt(double(config.n_cells))));
  if (side * side != config.n_cells)
    throw ConfigError("n_cells = " + std::to_string(config.n_cells) +
                      " is not a perfect square");
  const double spacing = config.inter_site_distance_m;
  const double offset = (side - 1) / 2.0;
  std::vector<Vec2> grid;
  grid.reserve(config.n_cells);
  for (int row = 0; row < side; ++row)
    for (int col = 0; col < side; ++col)
      grid.push_back({(col - offset) * spacing, (offset - row) * spacing});
  return grid;
}

Vec2 sample_user_position(int cell_index, const NetworkConfig& config, Rng& rng) {
  const std::vector<Vec2> grid = build_grid(config);
  if (cell_index < 0 || cell_index >= static_cast<int>(grid.size()))
    throw std::out_of_range("cell index out of range");
  const double u = rng.uniform_open01();
  double r = config.cell_radius_m * std::sqrt(u);
  r = std::max(r, config.min_user_distance_m);
  const double phi = rng.uniform01() * 2.0 * M_PI;
  const Vec2& bs = grid[cell_index];
  return {bs.x + r * std::cos(phi), bs.y + r * std::sin(phi)};
}

void classify_and_pair(NetworkSnapshot& snapshot, const NetworkConfig& config) {
  const int nu = snapshot.n_users();
  snapshot.is_ceu.assign(nu, false);
  snapshot.uav_of_user.assign(nu, -1);
  snapshot.active_uavs.clear();
  for (int u = 0; u < nu; ++u)
    snapshot.is_ceu[u] = snapshot.serving_distance_m[u] > config.ref_distance_m;

  // Each cell's UAV pairs with the nearest CEU of that cell; ties by lower
  // user index; cells without a CEU leave their UAV deactivated.
  for (int cell = 0; cell < snapshot.n_cells; ++cell) {
    int best = -1;
    double best_d = std::numeric_limits<double>::infinity();
    for (int k = 0; k < snapshot.users_per_cell; ++k) {
      const int u = cell * snapshot.users_per_cell + k;
      if (!snapshot.is_ceu[u]) continue;
      if (snapshot.serving_distance_m[u] < best_d) {
        best_d = snapshot.serving_distance_m[u];
        best = u;
      }
    }
    if (best >= 0) {
      snapshot.uav_of_user[best] = cell;
      snapshot.active_uavs.push_back(cell);
    }
  }
}

NetworkSnapshot build_snapshot(const NetworkConfig& config, Rng& rng) {
  config.validate();
  NetworkSnapshot snap;
  snap.n_cells = config.n_cells;
  snap.users_per_cell = config.users_per_cell;
  snap.bs_positions = build_grid(config);
  snap.uav_positions.reserve(config.n_cells);
  for (const Vec2& bs : snap.bs_positions)
    snap.uav_positions.push_back({bs.x, bs.y, config.uav_altitude_m});

  const int nu = config.n_users();
  snap.user_positions.reserve(nu);
  snap.serving_distance_m.reserve(nu);
  for (int cell = 0; cell < config.n_cells; ++cell) {
    for (int k = 0; k < config.users_per_cell; ++k) {
      const Vec2 pos = sample_user_position(cell, config, rng);
      snap.user_positions.push_back(pos);
      snap.serving_distance_m.push_back(distance(pos, snap.bs_positions[cell]));
    }
  }
  classify_and_pair(snap, config);
  return snap;
}

}  // namespace uavpc
