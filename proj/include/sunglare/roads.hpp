#ifndef SUNGLARE_ROADS_HPP
#define SUNGLARE_ROADS_HPP

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sunglare/geo.hpp"
#include "sunglare/panorama.hpp"

namespace sunglare {

struct RoadSegment {
  std::string id;
  std::vector<GeoPosition> polyline;  // >= 2 distinct consecutive vertices
  bool bidirectional = true;
};

struct SampleSite {
  std::string site_id;
  GeoPosition position{0.0, 0.0};
  double heading_deg = 0.0;  // forward along the polyline
  std::optional<double> reverse_heading_deg;  // set when bidirectional
  std::string segment_id;
  double chainage_m = 0.0;  // along-polyline distance from the segment start
};

// Sites every `spacing_m` meters of geodesic chainage, starting at the first
// vertex; the final site may sit closer than one spacing to the segment end.
// Positions use constant-speed great-circle interpolation, headings the
// initial bearing of the containing sub-segment (a site landing exactly on a
// vertex takes the outgoing sub-segment's bearing). A degenerate segment
// (all vertices coincident) yields no sites.
std::vector<SampleSite> sample_segment(const RoadSegment& segment, double spacing_m = 40.0);

struct SamplingResult {
  std::vector<SampleSite> sites;
  std::vector<std::string> warnings;  // one entry per skipped degenerate segment
};

SamplingResult sample_network(const std::vector<RoadSegment>& segments, double spacing_m = 40.0);

// Leaf-on months are May through October; foliage obstruction differs enough
// between the two phases that panoramas are bucketed by capture month.
bool is_leaf_on_month(int month);

struct SeasonPartition {
  std::vector<PanoramaFrame> leaf_on;
  std::vector<PanoramaFrame> leaf_off;
  std::vector<std::string> errors;  // per-frame metadata problems, frame dropped
};

SeasonPartition classify_season(const std::vector<PanoramaFrame>& frames);

// GeoJSON line features -> segments. Per-feature properties: "id" (fallback:
// feature index) and optional "oneway" (bidirectional = !oneway).
// MultiLineString parts become separate segments with "#<part>" suffixes.
std::vector<RoadSegment> load_road_network_geojson(const std::filesystem::path& path);

// GeoJSON point features with site_id, heading_deg, reverse_heading_deg,
// segment_id, chainage_m properties.
void save_sites_geojson(const std::filesystem::path& path, const std::vector<SampleSite>& sites);
std::vector<SampleSite> load_sites_geojson(const std::filesystem::path& path);

}  // namespace sunglare

#endif  // SUNGLARE_ROADS_HPP
