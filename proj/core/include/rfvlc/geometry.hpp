#pragma once

#include <cmath>
#include <random>

namespace rfvlc {

/// Horizontal user coordinates in the receiver plane, VLC cell center at the origin.
struct UserPosition {
  double x_m = 0.0;
  double y_m = 0.0;

  double horizontal_dist() const { return std::hypot(x_m, y_m); }
};

/// Downlink geometry. The VLC AP sits at the origin of the ceiling plane, the RF AP
/// at horizontal offset y_r on the same plane, and users live on a disk of radius
/// d_c in a plane d_v below.
struct Geometry {
  double vertical_m = 2.5;   // d_v, AP plane to receiver plane
  double cell_radius_m = 0;  // d_c
  double rf_offset_m = 20.0; // y_r

  void validate() const;

  /// AP-to-user distance d_1 for a user at horizontal distance d_h.
  double vlc_dist(double d_h) const { return std::hypot(d_h, vertical_m); }

  /// RF AP to user Euclidean distance d_0.
  double rf_dist(const UserPosition& u) const {
    const double dy = u.y_m - rf_offset_m;
    return std::sqrt(u.x_m * u.x_m + dy * dy + vertical_m * vertical_m);
  }
};

/// Draws a user uniformly over the cell disk. The horizontal distance from the
/// cell center then has density 2h/d_c^2 on [0, d_c].
UserPosition sample_user_position(double cell_radius_m, std::mt19937_64& rng);

}  // namespace rfvlc
