#ifndef SUNGLARE_MAPPER_HPP
#define SUNGLARE_MAPPER_HPP

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sunglare/fetch.hpp"
#include "sunglare/glare.hpp"
#include "sunglare/panorama.hpp"
#include "sunglare/roads.hpp"

namespace sunglare {

// Maps a date to the UTC offset its wall-clock labels use.
using UtcOffsetFn = std::function<int(const CivilDate&)>;

inline UtcOffsetFn fixed_offset(int minutes) {
  return [minutes](const CivilDate&) { return minutes; };
}

struct GlareTableRow {
  CivilDate date;
  int hour = 0;  // local clock hour, 0..23
  WindowKind kind = WindowKind::kSunrise;
  OrientationRange range;
  double sun_azimuth_deg = 0.0;
  double sun_elevation_deg = 0.0;
};

// For each date, every local clock hour in [start_hour, end_hour] whose
// orientation range is present, labeled sunrise/sunset against local solar
// noon.
std::vector<GlareTableRow> build_glare_table(const GeoPosition& site,
                                             const std::vector<CivilDate>& dates,
                                             const UtcOffsetFn& offset_fn,
                                             double threshold_deg = kDefaultGlareThresholdDeg,
                                             int start_hour = 5, int end_hour = 20);

// Fixed-width text rendering, ranges to two decimals.
std::string format_glare_table(const std::vector<GlareTableRow>& rows);

// On-disk working set of panoramas:
//   {dir}/{panoid}.json        frame metadata
//   {dir}/{panoid}.ppm         stitched image (optional)
//   {dir}/{panoid}.mask.pgm    obstruction mask + .meta sidecar (optional)
class PanoStore {
 public:
  explicit PanoStore(const std::filesystem::path& dir);

  struct Entry {
    PanoramaFrame frame;  // image not loaded here; see load_image()
    bool has_mask = false;
    bool has_image = false;
  };

  enum class SelectionPolicy { kLeafOnRecent, kNearest, kRecent };

  // Nearest entry within radius under the policy; kLeafOnRecent prefers
  // leaf-on captures and newer dates before distance.
  const Entry* resolve(const GeoPosition& position, double radius_m,
                       SelectionPolicy policy = SelectionPolicy::kLeafOnRecent) const;
  const Entry* find(const std::string& pano_id) const;
  std::vector<const Entry*> entries() const;

  ObstructionMask load_mask(const Entry& entry) const;
  RgbImage load_image(const Entry& entry) const;

  const std::filesystem::path& dir() const { return dir_; }

  static void write_frame(const std::filesystem::path& dir, const PanoramaFrame& frame);

 private:
  std::filesystem::path dir_;
  std::map<std::string, Entry> by_id_;
};

struct SiteGlareResult {
  std::string site_id;
  std::string direction;  // "forward" | "reverse"
  GeoPosition position{0.0, 0.0};
  double heading_deg = 0.0;
  std::vector<GlareWindow> windows;            // obstruction applied when available
  std::vector<GlareWindow> geometric_windows;  // obstruction ignored
  std::string pano_id;                         // empty when none resolved
  MaskSource mask_source = MaskSource::kNone;
  bool glare = false;            // any window of the requested kind
  bool geometric_flag = false;   // same, obstruction ignored
  std::string error;             // per-site failure, evaluation degraded
};

struct GlareMapDocument {
  CivilDate date;
  WindowKind kind = WindowKind::kSunrise;
  bool obstructed_mode = false;
  int utc_offset_minutes = 0;
  std::vector<SiteGlareResult> results;  // sorted by (site_id, direction)
};

struct MapOptions {
  int step_seconds = 60;
  double threshold_deg = kDefaultGlareThresholdDeg;
  double pano_radius_m = 25.0;
  PanoStore::SelectionPolicy policy = PanoStore::SelectionPolicy::kLeafOnRecent;
};

// Geometric-only map: both travel directions of every site evaluated with
// the flat-road pose. Throws kInvalidArgument on an empty site list.
GlareMapDocument map_geometric_glare(const std::vector<SampleSite>& sites, const CivilDate& date,
                                     WindowKind kind, int utc_offset_minutes,
                                     const MapOptions& options = {});

// Obstruction-aware map. Sites that resolve no panorama or mask degrade to
// geometric evaluation with mask_source = none; per-site errors are recorded
// on the result and never abort the run.
GlareMapDocument map_obstructed_glare(const std::vector<SampleSite>& sites, const CivilDate& date,
                                      WindowKind kind, int utc_offset_minutes,
                                      const PanoStore& store, const MapOptions& options = {});

// GeoJSON FeatureCollection, keys in fixed order so identical inputs yield
// byte-identical documents.
std::string glare_map_geojson(const GlareMapDocument& doc);
void save_glare_map_geojson(const std::filesystem::path& path, const GlareMapDocument& doc);

// Flat CSV of windows: site_id,direction,date,kind,start,end,duration_s,
// pano_id,mask_source.
std::string glare_windows_csv(const GlareMapDocument& doc);
void save_glare_windows_csv(const std::filesystem::path& path, const GlareMapDocument& doc);

struct RunManifest {
  std::string command;
  int sites_total = 0;
  int evaluated = 0;
  int degraded = 0;  // mask_source == none in an obstructed run
  int failed = 0;
  std::vector<std::string> warnings;
  FetchCounters requests;
  double elapsed_ms = 0.0;  // informational; excluded from determinism checks
};

std::string manifest_json(const RunManifest& manifest);
void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);

struct ObstructionTransition {
  Instant t;                 // first scanned instant in the new state
  bool became_obstructed = false;
  bool in_geometric_glare = false;  // pose had geometric glare at t
};

// Scans the daylight portion of the day at `step_seconds` and reports every
// flip of the mask obstruction state along the sun path. An all-sky mask
// yields no transitions. Throws kInvalidArgument when step exceeds 60 s.
std::vector<ObstructionTransition> validate_boundary(const PanoramaFrame& frame,
                                                     const ObstructionMask& mask,
                                                     const DriverPose& pose,
                                                     const CivilDate& date,
                                                     int utc_offset_minutes,
                                                     int step_seconds = 60,
                                                     double threshold_deg = kDefaultGlareThresholdDeg);

}  // namespace sunglare

#endif  // SUNGLARE_MAPPER_HPP
