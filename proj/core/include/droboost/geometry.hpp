#pragma once

#include <optional>

namespace droboost {

/// Axis-aligned box, top-left origin, pixel units: (x, y) is the top-left
/// corner, (w, h) the extent. Degenerate (zero-area) boxes are legal.
struct Box {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double right() const { return x + w; }
  double bottom() const { return y + h; }
  double area() const { return w * h; }
  double center_x() const { return x + 0.5 * w; }
  double center_y() const { return y + 0.5 * h; }

  bool operator==(const Box&) const = default;
};

struct ImageDims {
  int width = 0;
  int height = 0;

  bool operator==(const ImageDims&) const = default;
};

/// One predicted box in one frame. `cls_conf` is an externally supplied
/// binary-classifier score; absent means the detector ran without one.
struct Detection {
  int frame = 0;
  Box box;
  double conf = 0.0;
  std::optional<double> cls_conf;

  bool operator==(const Detection&) const = default;
};

struct GroundTruthBox {
  int frame = 0;
  Box box;

  bool operator==(const GroundTruthBox&) const = default;
};

/// Throws ValidationError when a field is outside its domain. `what` names
/// the offending value in messages ("conf", "bbox", ...).
void validate(const Box& b, const char* what = "bbox");
void validate(const Detection& d);
void validate(const GroundTruthBox& g);
void validate(const ImageDims& dims);

/// Intersection over union. Defined as 0 when the union has zero area.
double iou(const Box& a, const Box& b);

/// Moves every edge of `b` outward by `margin` pixels, then clamps the result
/// to the image rectangle [0, width] x [0, height].
Box expand_box(const Box& b, double margin, const ImageDims& dims);

}  // namespace droboost
