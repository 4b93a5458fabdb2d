#pragma once

#include <cmath>
#include <vector>

#include "uavpc/config.hpp"
#include "uavpc/rng.hpp"

namespace uavpc {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

inline double distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) +
                   (a.z - b.z) * (a.z - b.z));
}

inline double distance(const Vec3& a, const Vec2& b) {
  return std::sqrt((a.x - b.x) * (a.x - b.x) + (a.y - b.y) * (a.y - b.y) + a.z * a.z);
}

// One episode's frozen geometry. Users are stored cell-major: user index
// u = cell * users_per_cell + k. UAV i hovers directly above BS i; a UAV is
// active iff it is paired with a cell-edge user of its own cell.
struct NetworkSnapshot {
  int n_cells = 0;
  int users_per_cell = 0;
  std::vector<Vec2> bs_positions;
  std::vector<Vec3> uav_positions;
  std::vector<Vec2> user_positions;
  std::vector<double> serving_distance_m;
  std::vector<bool> is_ceu;
  std::vector<int> uav_of_user;   // paired UAV index, -1 when unassisted
  std::vector<int> active_uavs;   // sorted

  int n_users() const { return n_cells * users_per_cell; }
  int serving_cell(int user) const { return user / users_per_cell; }
  bool uav_active(int uav) const;

  // Throws std::logic_error if any structural invariant is violated.
  void check_invariants(const NetworkConfig& config) const;
};

// Row-major square grid of BS positions centered at the origin (row 0 is the
// top row). Throws ConfigError when n_cells is not a perfect square.
std::vector<Vec2> build_grid(const NetworkConfig& config);

// Draws a user position in the given cell: radius via inverse CDF r = R*sqrt(u)
// (clamped up to min_user_distance_m), angle uniform.
Vec2 sample_user_position(int cell_index, const NetworkConfig& config, Rng& rng);

// Fills classification and UAV pairing on a snapshot whose positions and
// serving distances are already populated.
void classify_and_pair(NetworkSnapshot& snapshot, const NetworkConfig& config);

// Full construction: grid, UAVs above BSs, sampled users, classification.
NetworkSnapshot build_snapshot(const NetworkConfig& config, Rng& rng);

}  // namespace uavpc
