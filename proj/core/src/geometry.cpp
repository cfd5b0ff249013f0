#include "droboost/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "droboost/errors.hpp"

namespace droboost {

namespace {

bool finite(double v) { return std::isfinite(v); }

void check_unit_interval(double v, const char* what) {
  if (!finite(v) || v < 0.0 || v > 1.0) {
    throw ValidationError(std::string(what) + " must be in [0,1], got " +
                          std::to_string(v));
  }
}

}  // namespace

void validate(const Box& b, const char* what) {
  if (!finite(b.x) || !finite(b.y) || !finite(b.w) || !finite(b.h)) {
    throw ValidationError(std::string(what) + " has non-finite coordinates");
  }
  if (b.w < 0.0 || b.h < 0.0) {
    throw ValidationError(std::string(what) + " has negative extent (w=" +
                          std::to_string(b.w) + ", h=" + std::to_string(b.h) + ")");
  }
}

void validate(const Detection& d) {
  if (d.frame < 0) {
    throw ValidationError("frame must be non-negative, got " + std::to_string(d.frame));
  }
  validate(d.box);
  check_unit_interval(d.conf, "conf");
  if (d.cls_conf) {
    check_unit_interval(*d.cls_conf, "cls_conf");
  }
}

void validate(const GroundTruthBox& g) {
  if (g.frame < 0) {
    throw ValidationError("frame must be non-negative, got " + std::to_string(g.frame));
  }
  validate(g.box);
}

void validate(const ImageDims& dims) {
  if (dims.width <= 0 || dims.height <= 0) {
    throw ValidationError("image dims must be positive, got " +
                          std::to_string(dims.width) + "x" + std::to_string(dims.height));
  }
}

double iou(const Box& a, const Box& b) {
  const double ix = std::max(a.x, b.x);
  const double iy = std::max(a.y, b.y);
  const double ix2 = std::min(a.right(), b.right());
  const double iy2 = std::min(a.bottom(), b.bottom());
  const double iw = std::max(0.0, ix2 - ix);
  const double ih = std::max(0.0, iy2 - iy);
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) {
    return 0.0;
  }
  return inter / uni;
}

Box expand_box(const Box& b, double margin, const ImageDims& dims) {
  const double width = static_cast<double>(dims.width);
  const double height = static_cast<double>(dims.height);
  double x0 = std::clamp(b.x - margin, 0.0, width);
  double y0 = std::clamp(b.y - margin, 0.0, height);
  double x1 = std::clamp(b.right() + margin, 0.0, width);
  double y1 = std::clamp(b.bottom() + margin, 0.0, height);
  x1 = std::max(x1, x0);
  y1 = std::max(y1, y0);
  return Box{x0, y0, x1 - x0, y1 - y0};
}

}  // namespace droboost
