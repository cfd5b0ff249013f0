#include "droboost/kalman.hpp"

#include <cmath>

namespace droboost {

namespace {

using Mat8 = Eigen::Matrix<double, 8, 8>;
using Vec8 = Eigen::Matrix<double, 8, 1>;
using Mat48 = Eigen::Matrix<double, 4, 8>;

Mat8 transition_matrix() {
  Mat8 f = Mat8::Identity();
  for (int i = 0; i < 4; ++i) {
    f(i, i + 4) = 1.0;  // dt = 1 frame
  }
  return f;
}

Mat48 measurement_matrix() {
  Mat48 h = Mat48::Zero();
  for (int i = 0; i < 4; ++i) {
    h(i, i) = 1.0;
  }
  return h;
}

void symmetrize(Mat8& m) { m = 0.5 * (m + m.transpose()).eval(); }

}  // namespace

Eigen::Vector4d box_to_measurement(const Box& b) {
  return {b.center_x(), b.center_y(), b.w, b.h};
}

Box measurement_to_box(const Eigen::Vector4d& z) {
  const double w = std::max(0.0, z(2));
  const double h = std::max(0.0, z(3));
  return Box{z(0) - 0.5 * w, z(1) - 0.5 * h, w, h};
}

Box state_box(const KalmanState& s) {
  return measurement_to_box(s.mean.head<4>());
}

double state_speed(const KalmanState& s) {
  return std::hypot(s.mean(4), s.mean(5));
}

KalmanState kalman_init(const Box& first, double initial_covariance) {
  KalmanState s;
  s.mean.head<4>() = box_to_measurement(first);
  s.covariance = Mat8::Identity() * initial_covariance;
  return s;
}

KalmanState kalman_predict(const KalmanState& s, const ProcessNoise& q) {
  static const Mat8 f = transition_matrix();
  KalmanState out;
  out.mean = f * s.mean;
  out.covariance = f * s.covariance * f.transpose();
  for (int i = 0; i < 8; ++i) {
    out.covariance(i, i) += q[static_cast<std::size_t>(i)];
  }
  symmetrize(out.covariance);
  return out;
}

KalmanState kalman_update(const KalmanState& s, const Detection& d,
                          const MeasurementNoise& r) {
  static const Mat48 h = measurement_matrix();
  const Eigen::Vector4d z = box_to_measurement(d.box);
  const Eigen::Vector4d innovation = z - h * s.mean;

  Eigen::Matrix4d innovation_cov = h * s.covariance * h.transpose();
  for (int i = 0; i < 4; ++i) {
    innovation_cov(i, i) += r[static_cast<std::size_t>(i)];
  }
  const Eigen::Matrix<double, 8, 4> gain =
      s.covariance * h.transpose() * innovation_cov.inverse();

  KalmanState out;
  out.mean = s.mean + gain * innovation;
  const Mat8 identity_minus_kh = Mat8::Identity() - gain * h;
  // Joseph form keeps the covariance symmetric positive-semidefinite.
  Eigen::Matrix4d r_mat = Eigen::Matrix4d::Zero();
  for (int i = 0; i < 4; ++i) {
    r_mat(i, i) = r[static_cast<std::size_t>(i)];
  }
  out.covariance = identity_minus_kh * s.covariance * identity_minus_kh.transpose() +
                   gain * r_mat * gain.transpose();
  symmetrize(out.covariance);
  return out;
}

}  // namespace droboost
