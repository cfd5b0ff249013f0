#pragma once

#include <array>

#include <Eigen/Dense>

#include "droboost/geometry.hpp"

namespace droboost {

/// Constant-velocity Kalman filter over box center and size, dt = 1 frame.
/// State: [cx, cy, w, h, vcx, vcy, vw, vh]; measurement: [cx, cy, w, h].
struct KalmanState {
  Eigen::Matrix<double, 8, 1> mean = Eigen::Matrix<double, 8, 1>::Zero();
  Eigen::Matrix<double, 8, 8> covariance = Eigen::Matrix<double, 8, 8>::Zero();
};

using ProcessNoise = std::array<double, 8>;      // diagonal of Q
using MeasurementNoise = std::array<double, 4>;  // diagonal of R

inline constexpr ProcessNoise kDefaultProcessNoise{1.0, 1.0, 1.0, 1.0,
                                                   0.25, 0.25, 0.25, 0.25};
inline constexpr MeasurementNoise kDefaultMeasurementNoise{1.0, 1.0, 1.0, 1.0};
inline constexpr double kDefaultInitialCovariance = 10.0;

Eigen::Vector4d box_to_measurement(const Box& b);
Box measurement_to_box(const Eigen::Vector4d& z);

/// State box implied by the current mean.
Box state_box(const KalmanState& s);

/// Speed of the state in pixels/frame: sqrt(vcx^2 + vcy^2).
double state_speed(const KalmanState& s);

/// New filter centered on `first` with zero velocity and diagonal covariance.
KalmanState kalman_init(const Box& first, double initial_covariance = kDefaultInitialCovariance);

/// Time update: advance mean by the constant-velocity transition and grow
/// covariance by the process noise.
KalmanState kalman_predict(const KalmanState& s, const ProcessNoise& q = kDefaultProcessNoise);

/// Measurement update with the detection's box.
KalmanState kalman_update(const KalmanState& s, const Detection& d,
                          const MeasurementNoise& r = kDefaultMeasurementNoise);

}  // namespace droboost
