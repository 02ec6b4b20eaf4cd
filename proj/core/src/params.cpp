#include "rfvlc/params.hpp"

#include <stdexcept>

namespace rfvlc {

void VlcParams::validate() const {
  if (!(pd_area_m2 > 0)) throw std::invalid_argument("vlc.pd_area_m2: must be > 0");
  if (!(fov_rad > 0 && fov_rad <= pi / 2))
    throw std::invalid_argument("vlc.fov_deg: must be in (0, 90]");
  if (!(half_angle_rad > 0 && half_angle_rad < pi / 2))
    throw std::invalid_argument("vlc.half_angle_deg: must be in (0, 90)");
  if (!(refractive_index > 0)) throw std::invalid_argument("vlc.refractive_index: must be > 0");
  if (!(filter_gain > 0)) throw std::invalid_argument("vlc.filter_gain: must be > 0");
  if (!(responsivity_a_per_w > 0))
    throw std::invalid_argument("vlc.responsivity_a_per_w: must be > 0");
  if (!(opt_elec_ratio > 0)) throw std::invalid_argument("vlc.opt_elec_ratio: must be > 0");
  if (!(optical_power_w > 0)) throw std::invalid_argument("vlc.optical_power_w: must be > 0");
  if (!(bandwidth_hz > 0)) throw std::invalid_argument("vlc.bandwidth_hz: must be > 0");
  if (!(noise_psd_a2_per_hz > 0))
    throw std::invalid_argument("vlc.noise_psd_a2_per_hz: must be > 0");
  if (!(rate_constant > 0)) throw std::invalid_argument("vlc.rate_constant: must be > 0");
}

void RfParams::validate() const {
  if (!(bandwidth_hz > 0)) throw std::invalid_argument("rf.bandwidth_hz: must be > 0");
  if (!(power_w > 0)) throw std::invalid_argument("rf.power_w: must be > 0");
  if (!(rician_k >= 0)) throw std::invalid_argument("rf.rician_k_db: factor must be >= 0");
  if (!(path_loss_exp > 0)) throw std::invalid_argument("rf.path_loss_exp: must be > 0");
  if (!(shadowing_sigma_db >= 0))
    throw std::invalid_argument("rf.shadowing_sigma_db: must be >= 0");
  if (!(noise_psd_w_per_hz > 0))
    throw std::invalid_argument("rf.noise_psd_w_per_hz: must be > 0");
  if (!(ref_dist_m > 0)) throw std::invalid_argument("rf.ref_dist_m: must be > 0");
}

void QosSpec::validate() const {
  if (!(theta >= 0)) throw std::invalid_argument("qos.theta_db: theta must be >= 0");
  if (!(frame_s > 0)) throw std::invalid_argument("qos.frame_s: must be > 0");
}

}  // namespace rfvlc
