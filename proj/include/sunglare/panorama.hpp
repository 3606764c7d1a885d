#ifndef SUNGLARE_PANORAMA_HPP
#define SUNGLARE_PANORAMA_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sunglare/glare.hpp"
#include "sunglare/raster.hpp"
#include "sunglare/solar.hpp"

namespace sunglare {

// An equirectangular street-level panorama: 360 deg of azimuth across the
// width, 180 deg of elevation down the height (so width = 2 * height). The
// center column faces the capture vehicle's driving direction (yaw).
struct PanoramaFrame {
  std::string pano_id;
  GeoPosition position{0.0, 0.0};
  double yaw_deg = 0.0;   // vehicle heading, clockwise from north
  double tilt_deg = 0.0;  // camera tilt; 0 when metadata omits it
  int capture_year = 0;
  int capture_month = 0;  // 1..12
  int width = 0;          // pixels, must equal 2 * height
  int height = 0;
  RgbImage image;  // may be empty when only geometry is needed

  // Throws kInvalidFrame on a non-2:1 geometry or out-of-range metadata.
  void validate() const;
};

enum class MaskSource { kModel, kHeuristic, kNone };

const char* to_string(MaskSource source);
MaskSource mask_source_from_string(const std::string& text);

// Per-pixel sky / non-sky classification aligned to a panorama. Resolution
// may differ from the frame's but the aspect ratio must stay 2:1.
struct ObstructionMask {
  GrayImage labels;
  std::array<bool, 256> sky = {};  // sky[label] == true -> open sky
  MaskSource source = MaskSource::kModel;
  std::string pano_id;

  void set_sky_labels(const std::vector<std::uint8_t>& labels_list);
  std::vector<std::uint8_t> sky_labels() const;
  bool is_sky(std::uint8_t label) const { return sky[label]; }

  // Throws kInvalidMask on aspect/size problems.
  void validate() const;

  // PGM raster plus a key=value sidecar (<path>.meta) carrying pano_id,
  // sky_labels and source.
  void save(const std::filesystem::path& path) const;
  static ObstructionMask load(const std::filesystem::path& path);
};

// Continuous pixel coordinates on a panorama; x wraps, y is clamped.
struct PixelPoint {
  double x = 0.0;  // [0, width)
  double y = 0.0;  // [0, height)
};

// Incidence point of the sun direction on the panorama.
//
// x grows with clockwise azimuth relative to yaw, wrapped into [0, W);
// the sun at (yaw, tilt) lands exactly on the central pixel (W/2, H/2).
// y maps elevation linearly over the full 180-degree vertical span.
// Absent only when |elevation - tilt| > 90 (impossible for physical
// elevations with tilt 0, i.e. only for malformed frames).
std::optional<PixelPoint> project_sun(const PanoramaFrame& frame, const SolarPosition& sun);

// True when the sun's incidence point lands on a non-sky pixel of the mask,
// sampled nearest-neighbor after scaling into mask resolution. A sun at or
// below the horizon counts as obstructed (blocked by the ground).
bool is_obstructed(const PanoramaFrame& frame, const ObstructionMask& mask,
                   const SolarPosition& sun);

struct OverlayMarker {
  int date_index = 0;
  Instant t;
  PixelPoint px;
};

struct SunPathOverlay {
  RgbImage image;
  std::vector<OverlayMarker> markers;
};

// Draws the sun positions of each date's path onto the panorama (or onto a
// white-sky / black-obstruction rendering when a mask is given). Markers are
// placed only for above-horizon samples. Throws kInvalidArgument on empty
// dates or non-positive step.
SunPathOverlay sun_path_overlay(const PanoramaFrame& frame, const ObstructionMask* mask,
                                const GeoPosition& site, const std::vector<CivilDate>& dates,
                                int utc_offset_minutes, int step_seconds, int start_hour = 5,
                                int end_hour = 20);

// Fixture/demo-quality sky classifier: a pixel is sky iff
//   mean(r,g,b) >= 80   (bright enough) and
//   b - max(r,g) >= 12  (distinctly blue).
// Writes sky = 0, obstruction = 255, sky label set {0}, source = heuristic.
// Not a substitute for a trained segmentation model.
ObstructionMask heuristic_sky_mask(const RgbImage& image);

}  // namespace sunglare

#endif  // SUNGLARE_PANORAMA_HPP
