#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "droboost/geometry.hpp"
#include "droboost/kalman.hpp"

namespace droboost {

struct TrackerConfig {
  double iou_min = 0.1;                           // association gate
  int max_missed = 15;                            // consecutive unmatched frames before termination
  ProcessNoise process_noise = kDefaultProcessNoise;
  MeasurementNoise measurement_noise = kDefaultMeasurementNoise;
  double initial_covariance = kDefaultInitialCovariance;
  int speed_window = 9;                           // odd; median-smoothing window for speeds
};

void validate(const TrackerConfig& cfg);

/// Everything accumulated for one track identity. Parallel vectors:
/// detections[i], confidences[i], speeds[i] and input_ordinals[i] all refer
/// to the i-th detection assigned to this track.
struct TrackHistory {
  int track_id = -1;
  std::vector<std::pair<int, Detection>> detections;  // (frame, detection), frames strictly increasing
  std::vector<double> confidences;
  std::vector<double> speeds;                         // pixels/frame, from the post-update Kalman state
  std::vector<std::size_t> input_ordinals;            // position in the global input stream
  KalmanState kalman;
  int missed = 0;

  std::size_t size() const { return detections.size(); }
};

struct Association {
  std::vector<std::pair<int, std::size_t>> matches;  // (track_id, detection index)
  std::vector<std::size_t> unmatched_detections;
  std::vector<int> unmatched_tracks;
};

/// Greedy IOU matching: pairs sorted by descending IOU, ties broken by
/// (lower track_id, lower detection index); a pair matches only when its
/// IOU >= iou_min, and each side matches at most once.
Association associate(std::span<const std::pair<int, Box>> predicted,
                      std::span<const Detection> detections, double iou_min);

struct TrackAssignment {
  int track_id = -1;
  double speed = 0.0;  // post-update Kalman speed of the assigned track
};

/// Frame-ordered Kalman multi-object tracker. Tracks emit from their first
/// detection; a track is dropped once its missed count exceeds max_missed.
/// Call step() with strictly increasing frame indices; skipped frames count
/// as empty frames.
class Tracker {
public:
  explicit Tracker(TrackerConfig cfg = {});

  /// Assigns every detection of one frame a track id (matched tracks are
  /// updated, the rest spawn new tracks). Returns one entry per input
  /// detection, in input order.
  std::vector<TrackAssignment> step(int frame, std::span<const Detection> detections);

  const std::vector<TrackHistory>& live_tracks() const { return live_; }
  const std::vector<TrackHistory>& finished_tracks() const { return finished_; }

  /// All histories, finished and live, ordered by track id.
  std::vector<TrackHistory> all_tracks() const;

  int last_frame() const { return last_frame_; }

private:
  void age_one_frame();  // predict + miss accounting for one empty frame

  TrackerConfig cfg_;
  std::vector<TrackHistory> live_;
  std::vector<TrackHistory> finished_;
  int next_id_ = 0;
  int last_frame_ = -1;
  bool started_ = false;
  std::size_t next_ordinal_ = 0;
};

/// Median of the window-median-smoothed speed sequence; the window is
/// centered and truncated at the track ends. Errors on an empty track.
double median_speed(const TrackHistory& track, int window);
double median_speed(std::span<const double> speeds, int window);

}  // namespace droboost
