#ifndef SUNGLARE_ANGLES_HPP
#define SUNGLARE_ANGLES_HPP

#include <cmath>

namespace sunglare {

inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

// Wraps an angle into [0, 360).
inline double normalize_deg(double deg) {
  double r = std::fmod(deg, 360.0);
  if (r < 0.0) r += 360.0;
  return r;
}

// Signed minimal difference a - b on the circle, in (-180, 180].
inline double circular_delta_deg(double a, double b) {
  double d = std::fmod(a - b, 360.0);
  if (d <= -180.0) d += 360.0;
  if (d > 180.0) d -= 360.0;
  return d;
}

// Minimal angular distance between two directions, in [0, 180].
inline double circular_distance_deg(double a, double b) {
  return std::fabs(circular_delta_deg(a, b));
}

// Midpoint of the clockwise arc from low to high.
inline double circular_midpoint_deg(double low, double high) {
  double span = normalize_deg(high - low);
  return normalize_deg(low + span / 2.0);
}

}  // namespace sunglare

#endif  // SUNGLARE_ANGLES_HPP
