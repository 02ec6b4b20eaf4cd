#pragma once

#include <cmath>
#include <numbers>

namespace rfvlc {

inline constexpr double pi = std::numbers::pi;

inline double deg_to_rad(double deg) { return deg * pi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / pi; }

/// dB value x -> linear factor 10^(x/10).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double lin) { return 10.0 * std::log10(lin); }

/// VLC front-end and LED parameters. Linear units throughout (W, Hz, m, rad).
struct VlcParams {
  double pd_area_m2 = 1e-4;            // photodetector physical area
  double fov_rad = pi / 2.0;           // field-of-view half angle psi_C
  double half_angle_rad = pi / 3.0;    // LED half-intensity angle phi_1/2
  double refractive_index = 1.5;
  double filter_gain = 1.0;            // optical filter gain D(psi)
  double responsivity_a_per_w = 0.53;  // optical-to-electrical conversion
  double opt_elec_ratio = 3.0;         // varsigma, keeps the LED in its linear region
  double optical_power_w = 9.0;        // average emitted optical power
  double bandwidth_hz = 40e6;          // modulation bandwidth
  double noise_psd_a2_per_hz = 1e-21;  // PD noise power spectral density
  double rate_constant = 0.65773958637739479;  // c = sqrt(e / 2 pi)

  double noise_power() const { return noise_psd_a2_per_hz * bandwidth_hz; }

  void validate() const;
};

/// RF access point parameters. Path loss is log-distance with log-normal shadowing.
struct RfParams {
  double bandwidth_hz = 20e6;
  double power_w = 0.01;
  double rician_k = 3.1622776601683795;  // linear (5 dB)
  double path_loss_exp = 1.6;
  double shadowing_sigma_db = 1.8;
  double noise_psd_w_per_hz = 3.9810717055349694e-21;  // -114 dBm/MHz
  double ref_loss_db = 40.0;  // path loss at the reference distance
  double ref_dist_m = 1.0;

  double noise_power() const { return noise_psd_w_per_hz * bandwidth_hz; }

  void validate() const;
};

/// Statistical QoS target: theta is the queue-tail decay rate in 1/bits,
/// T the transmission frame duration in seconds.
struct QosSpec {
  double theta = 1e-3;
  double frame_s = 1e-4;

  void validate() const;
};

}  // namespace rfvlc
