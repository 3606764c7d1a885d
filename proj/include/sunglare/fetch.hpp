#ifndef SUNGLARE_FETCH_HPP
#define SUNGLARE_FETCH_HPP

#include <atomic>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "sunglare/raster.hpp"
#include "sunglare/roads.hpp"

namespace sunglare {

// One historical panorama record, matching the provider metadata schema.
struct PanoMetadataRecord {
  std::string panoid;
  double lon = 0.0;
  double lat = 0.0;
  int year = 0;
  int month = 0;          // 1..12
  double yaw_deg = 0.0;   // normalized to [0, 360) on parse
};

struct TileAddress {
  std::string panoid;
  int x = 0;
  int y = 0;
  int zoom = 0;  // grid is 2^zoom x 2^(zoom-1); zoom 0 is a single tile

  std::string to_string() const;
};

// Transport is the seam that keeps the pipeline testable offline: everything
// network-shaped goes through this interface and fixtures implement it from
// local files.
class Transport {
 public:
  virtual ~Transport() = default;

  // JSON array of metadata records near (lon, lat), closest first.
  virtual std::string metadata_payload(double lon, double lat, double radius_m) = 0;
  // Raw raster bytes (PPM) for one tile. Throws kTransport when unavailable.
  virtual std::vector<std::uint8_t> tile_payload(const TileAddress& tile) = 0;
};

// Serves requests from a directory tree:
//   {dir}/{panoid}/metadata.json          one record or an array of records
//   {dir}/{panoid}/{zoom}/{x}_{y}.ppm     tile rasters
// Panoid path components are sanitized with sanitize_id().
class FixtureTransport : public Transport {
 public:
  explicit FixtureTransport(const std::filesystem::path& dir);

  std::string metadata_payload(double lon, double lat, double radius_m) override;
  std::vector<std::uint8_t> tile_payload(const TileAddress& tile) override;

 private:
  std::filesystem::path dir_;
  std::vector<PanoMetadataRecord> records_;  // loaded once at construction
};

struct HttpEndpointConfig {
  // Templates with {lat} {lon} {radius} {panoid} {x} {y} {zoom} {key}
  // placeholders, e.g. the provider tile URL pattern.
  std::string metadata_url_template;
  std::string tile_url_template;
  std::string api_key;
};

// Live transport over HTTP. Exercised in tests only through its URL-template
// expansion; endpoint specifics live entirely in configuration.
class HttpTransport : public Transport {
 public:
  explicit HttpTransport(HttpEndpointConfig config);

  std::string metadata_payload(double lon, double lat, double radius_m) override;
  std::vector<std::uint8_t> tile_payload(const TileAddress& tile) override;

 private:
  std::vector<std::uint8_t> get_bytes(const std::string& url);
  HttpEndpointConfig config_;
};

std::string expand_url_template(const std::string& tmpl,
                                const std::map<std::string, std::string>& values);

// Replaces filesystem-hostile characters in provider ids ('/' and anything
// outside [A-Za-z0-9_.-]) with %XX escapes. Stable and injective.
std::string sanitize_id(const std::string& id);

std::vector<PanoMetadataRecord> parse_metadata_payload(const std::string& json_payload);

// Stitched-panorama cache keyed by (panoid, zoom). Writes go through a temp
// file plus atomic rename, so concurrent writers of the same content are
// safe. Construction fails with kConfig when the directory is not writable.
class TileCache {
 public:
  explicit TileCache(const std::filesystem::path& dir);

  std::optional<RgbImage> lookup(const std::string& panoid, int zoom) const;
  std::filesystem::path store(const std::string& panoid, int zoom, const RgbImage& image);

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path key_path(const std::string& panoid, int zoom) const;
  std::filesystem::path dir_;
};

struct FetchPolicy {
  double rate_limit_per_s = 5.0;  // global cap across all request kinds
  int retry_budget = 3;           // retries per request, jittered backoff
  double radius_m = 25.0;         // metadata search radius around a site
};

struct FetchCounters {
  std::uint64_t metadata_requests = 0;
  std::uint64_t tile_requests = 0;
  std::uint64_t retries = 0;
  std::uint64_t cache_hits = 0;
};

// Front door for acquisition: rate limiting, retries, parsing, stitching and
// caching around a Transport.
class Fetcher {
 public:
  Fetcher(std::unique_ptr<Transport> transport, FetchPolicy policy = {},
          TileCache* cache = nullptr);

  // Historical records near the site, sorted closest-first then newest-first.
  // An empty result is a legitimate outcome, not an error.
  std::vector<PanoMetadataRecord> fetch_metadata(const GeoPosition& position);

  // Downloads and stitches the full tile grid for a zoom level in [0, 5].
  // Fails atomically: a missing tile (after retries) or a tile dimension
  // mismatch raises without persisting anything.
  RgbImage fetch_panorama(const std::string& panoid, int zoom);

  FetchCounters counters() const;

 private:
  void throttle();
  std::vector<std::uint8_t> fetch_tile_with_retry(const TileAddress& tile);

  std::unique_ptr<Transport> transport_;
  FetchPolicy policy_;
  TileCache* cache_;
  std::mutex throttle_mutex_;
  double next_slot_unix_ = 0.0;
  std::atomic<std::uint64_t> metadata_requests_{0};
  std::atomic<std::uint64_t> tile_requests_{0};
  std::atomic<std::uint64_t> retries_{0};
  std::atomic<std::uint64_t> cache_hits_{0};
};

}  // namespace sunglare

#endif  // SUNGLARE_FETCH_HPP
