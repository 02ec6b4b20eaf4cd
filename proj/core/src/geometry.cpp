#include "rfvlc/geometry.hpp"

#include <stdexcept>

#include "rfvlc/params.hpp"

namespace rfvlc {

void Geometry::validate() const {
  if (!(vertical_m > 0)) throw std::invalid_argument("geometry.vertical_m: must be > 0");
  if (!(cell_radius_m >= 0)) throw std::invalid_argument("geometry.cell_radius_m: must be >= 0");
  if (!std::isfinite(rf_offset_m)) throw std::invalid_argument("geometry.rf_offset_m: must be finite");
}

UserPosition sample_user_position(double cell_radius_m, std::mt19937_64& rng) {
  if (!(cell_radius_m >= 0)) throw std::invalid_argument("cell_radius_m must be >= 0");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double d_h = cell_radius_m * std::sqrt(unit(rng));
  const double ang = 2.0 * pi * unit(rng);
  return UserPosition{d_h * std::cos(ang), d_h * std::sin(ang)};
}

}  // namespace rfvlc
