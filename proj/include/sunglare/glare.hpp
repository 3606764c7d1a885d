#ifndef SUNGLARE_GLARE_HPP
#define SUNGLARE_GLARE_HPP

#include <functional>
#include <optional>
#include <vector>

#include "sunglare/solar.hpp"

namespace sunglare {

// Both relative angles (horizontal and vertical) must be strictly below this
// many degrees, with the sun above the horizon and unobstructed, for glare.
inline constexpr double kDefaultGlareThresholdDeg = 25.0;

struct DriverPose {
  // heading is normalized into [0, 360); |slope| must stay below 45 degrees.
  DriverPose(const GeoPosition& position, double heading_deg, double slope_deg = 0.0);

  GeoPosition position;
  double heading_deg;
  double slope_deg;
};

struct GlareVerdict {
  bool geometric_glare = false;
  double h_glare_deg = 0.0;  // [0, 180]
  double v_glare_deg = 0.0;  // >= 0
  std::optional<bool> obstructed;
  bool final_glare = false;
  double sun_elevation_deg = 0.0;
  double sun_azimuth_deg = 0.0;

  // Returns a copy with the obstruction outcome folded in
  // (final_glare = geometric_glare && !obstructed).
  GlareVerdict with_obstruction(bool obstructed) const;
};

// Minimal circular distance between sun azimuth and driving direction.
// The naive |a - b| breaks for headings straddling north, so both inputs are
// normalized and compared on the circle. Result in [0, 180].
double h_glare(double sun_azimuth_deg, double heading_deg);

// |elevation - slope|. Elevations are not periodic; plain absolute difference.
double v_glare(double sun_elevation_deg, double slope_deg);

// Evaluates the relative-angle criterion at one instant, obstruction unset:
// glare iff sun above the horizon and both angles strictly below `threshold`.
GlareVerdict geometric_glare(const DriverPose& pose, const Instant& t,
                             double threshold_deg = kDefaultGlareThresholdDeg);

// The set of headings with h_glare below threshold: a band of width exactly
// 2*threshold centered on the sun azimuth (wrapping mod 360).
struct OrientationRange {
  double low_deg = 0.0;
  double high_deg = 0.0;
};

// Present iff 0 < elevation < threshold at t (flat-road assumption: on level
// ground v_glare equals the sun elevation).
std::optional<OrientationRange> orientation_range(const GeoPosition& site, const Instant& t,
                                                  double threshold_deg = kDefaultGlareThresholdDeg);

enum class WindowKind { kSunrise, kSunset };

const char* to_string(WindowKind kind);

struct GlareWindow {
  Instant start;  // inclusive
  Instant end;    // exclusive
  WindowKind kind = WindowKind::kSunrise;

  double duration_seconds() const { return end.unix_seconds() - start.unix_seconds(); }
};

// True when the sun at instant t is blocked by an obstruction.
using ObstructionOracle = std::function<bool(const Instant&)>;

// Scans the civil day [00:00, 24:00) local at `step_seconds`, evaluates
// final glare at each sample (geometric, and unobstructed when an oracle is
// supplied), and merges consecutive positive samples into windows. Window
// boundaries are accurate to within one step. A window straddling local
// solar noon is split there, so sunrise windows always end before noon and
// sunset windows start after it.
std::vector<GlareWindow> glare_windows(const DriverPose& pose, const CivilDate& date,
                                       int utc_offset_minutes, int step_seconds,
                                       const ObstructionOracle& obstruction = nullptr,
                                       double threshold_deg = kDefaultGlareThresholdDeg);

}  // namespace sunglare

#endif  // SUNGLARE_GLARE_HPP
