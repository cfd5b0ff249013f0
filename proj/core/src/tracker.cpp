#include "droboost/tracker.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "droboost/errors.hpp"

namespace droboost {

void validate(const TrackerConfig& cfg) {
  if (!(cfg.iou_min > 0.0 && cfg.iou_min < 1.0)) {
    throw ValidationError("iou_min must be in (0,1), got " + std::to_string(cfg.iou_min));
  }
  if (cfg.max_missed <= 0) {
    throw ValidationError("max_missed must be positive, got " + std::to_string(cfg.max_missed));
  }
  for (double q : cfg.process_noise) {
    if (!(q > 0.0)) throw ValidationError("process_noise entries must be > 0");
  }
  for (double r : cfg.measurement_noise) {
    if (!(r > 0.0)) throw ValidationError("measurement_noise entries must be > 0");
  }
  if (!(cfg.initial_covariance > 0.0)) {
    throw ValidationError("initial_covariance must be > 0");
  }
  if (cfg.speed_window <= 0 || cfg.speed_window % 2 == 0) {
    throw ValidationError("speed_window must be an odd positive integer, got " +
                          std::to_string(cfg.speed_window));
  }
}

Association associate(std::span<const std::pair<int, Box>> predicted,
                      std::span<const Detection> detections, double iou_min) {
  struct Candidate {
    double iou;
    int track_id;
    std::size_t track_pos;
    std::size_t det_index;
  };

  std::vector<Candidate> candidates;
  candidates.reserve(predicted.size() * detections.size());
  for (std::size_t t = 0; t < predicted.size(); ++t) {
    for (std::size_t d = 0; d < detections.size(); ++d) {
      const double v = iou(predicted[t].second, detections[d].box);
      if (v >= iou_min) {
        candidates.push_back({v, predicted[t].first, t, d});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.iou != b.iou) return a.iou > b.iou;
    if (a.track_id != b.track_id) return a.track_id < b.track_id;
    return a.det_index < b.det_index;
  });

  Association out;
  std::vector<bool> track_used(predicted.size(), false);
  std::vector<bool> det_used(detections.size(), false);
  for (const Candidate& c : candidates) {
    if (track_used[c.track_pos] || det_used[c.det_index]) continue;
    track_used[c.track_pos] = true;
    det_used[c.det_index] = true;
    out.matches.emplace_back(c.track_id, c.det_index);
  }
  for (std::size_t d = 0; d < detections.size(); ++d) {
    if (!det_used[d]) out.unmatched_detections.push_back(d);
  }
  for (std::size_t t = 0; t < predicted.size(); ++t) {
    if (!track_used[t]) out.unmatched_tracks.push_back(predicted[t].first);
  }
  return out;
}

Tracker::Tracker(TrackerConfig cfg) : cfg_(cfg) { validate(cfg_); }

void Tracker::predict_and_age() {
  for (TrackHistory& t : live_) {
    t.kalman = kalman_predict(t.kalman, cfg_.process_noise);
    ++t.missed;
  }
}

void Tracker::cull_expired() {
  std::vector<TrackHistory> kept;
  kept.reserve(live_.size());
  for (TrackHistory& t : live_) {
    if (t.missed > cfg_.max_missed) {
      finished_.push_back(std::move(t));
    } else {
      kept.push_back(std::move(t));
    }
  }
  live_ = std::move(kept);
}

std::vector<TrackAssignment> Tracker::step(int frame, std::span<const Detection> detections) {
  if (frame < 0) {
    throw ValidationError("frame index must be non-negative, got " + std::to_string(frame));
  }
  if (started_ && frame <= last_frame_) {
    throw OrderingError("frame " + std::to_string(frame) +
                        " is not after previously stepped frame " + std::to_string(last_frame_));
  }
  for (const Detection& d : detections) {
    validate(d);
  }

  // Frames skipped between calls behave as empty frames. Culling happens at
  // the end of each frame, so a match may still rescue a track whose missed
  // count transiently reaches max_missed + 1 on the current frame.
  if (started_) {
    for (int f = last_frame_ + 1; f < frame; ++f) {
      predict_and_age();
      cull_expired();
    }
    predict_and_age();
  }
  started_ = true;
  last_frame_ = frame;

  std::vector<std::pair<int, Box>> predicted;
  predicted.reserve(live_.size());
  for (const TrackHistory& t : live_) {
    predicted.emplace_back(t.track_id, state_box(t.kalman));
  }

  const Association assoc = associate(predicted, detections, cfg_.iou_min);

  std::vector<TrackAssignment> result(detections.size());

  auto append_detection = [&](TrackHistory& t, const Detection& d, std::size_t det_index) {
    t.kalman = kalman_update(t.kalman, d, cfg_.measurement_noise);
    t.missed = 0;
    t.detections.emplace_back(frame, d);
    t.confidences.push_back(d.conf);
    const double speed = state_speed(t.kalman);
    t.speeds.push_back(speed);
    t.input_ordinals.push_back(next_ordinal_ + det_index);
    result[det_index] = TrackAssignment{t.track_id, speed};
  };

  for (const auto& [track_id, det_index] : assoc.matches) {
    auto it = std::find_if(live_.begin(), live_.end(),
                           [track_id](const TrackHistory& t) { return t.track_id == track_id; });
    append_detection(*it, detections[det_index], det_index);
  }

  for (std::size_t det_index : assoc.unmatched_detections) {
    TrackHistory t;
    t.track_id = next_id_++;
    t.kalman = kalman_init(detections[det_index].box, cfg_.initial_covariance);
    append_detection(t, detections[det_index], det_index);
    live_.push_back(std::move(t));
  }

  cull_expired();
  next_ordinal_ += detections.size();
  return result;
}

std::vector<TrackHistory> Tracker::all_tracks() const {
  std::vector<TrackHistory> out = finished_;
  out.insert(out.end(), live_.begin(), live_.end());
  std::sort(out.begin(), out.end(),
            [](const TrackHistory& a, const TrackHistory& b) { return a.track_id < b.track_id; });
  return out;
}

namespace {

double median_of(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

}  // namespace

double median_speed(std::span<const double> speeds, int window) {
  if (speeds.empty()) {
    throw ValidationError("median_speed requires at least one speed sample");
  }
  if (window <= 0 || window % 2 == 0) {
    throw ValidationError("median window must be an odd positive integer, got " +
                          std::to_string(window));
  }
  const std::size_t n = speeds.size();
  const std::size_t half = static_cast<std::size_t>(window / 2);
  std::vector<double> smoothed(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = i >= half ? i - half : 0;
    const std::size_t hi = std::min(n - 1, i + half);
    smoothed[i] = median_of({speeds.begin() + static_cast<std::ptrdiff_t>(lo),
                             speeds.begin() + static_cast<std::ptrdiff_t>(hi + 1)});
  }
  return median_of(std::move(smoothed));
}

double median_speed(const TrackHistory& track, int window) {
  return median_speed(std::span<const double>(track.speeds), window);
}

}  // namespace droboost
