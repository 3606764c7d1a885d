#ifndef SUNGLARE_GEO_HPP
#define SUNGLARE_GEO_HPP

namespace sunglare {

// Mean earth radius (IUGG), meters. All geodesic math in this project is
// spherical; at city scale the spheroid correction is below 0.3%.
inline constexpr double kEarthRadiusMeters = 6371008.8;

// Longitude/latitude in degrees. Construction rejects out-of-range values.
struct GeoPosition {
  GeoPosition(double lon_deg, double lat_deg);

  double lon;  // degrees east, [-180, 180]
  double lat;  // degrees north, [-90, 90]
};

// Great-circle distance in meters.
double distance_m(const GeoPosition& a, const GeoPosition& b);

// Initial geodesic bearing from a to b, clockwise from north, [0, 360).
// Throws kInvalidArgument when the points coincide.
double bearing_deg(const GeoPosition& a, const GeoPosition& b);

// Point reached from `start` following the great circle with the given
// initial bearing for `distance` meters.
GeoPosition destination(const GeoPosition& start, double bearing, double distance);

// Constant-speed great-circle interpolation, f in [0, 1].
GeoPosition interpolate(const GeoPosition& a, const GeoPosition& b, double f);

}  // namespace sunglare

#endif  // SUNGLARE_GEO_HPP
