#ifndef SUNGLARE_SOLAR_HPP
#define SUNGLARE_SOLAR_HPP

#include <vector>

#include "sunglare/geo.hpp"
#include "sunglare/time.hpp"

namespace sunglare {

struct SolarPosition {
  double elevation_deg = 0.0;  // geometric altitude above the horizon, [-90, 90]
  double azimuth_deg = 0.0;    // clockwise from true north, [0, 360)
};

// Years accepted by the ephemeris. Outside this window the truncated series
// below lose their stated accuracy, so requests are rejected.
inline constexpr int kMinEphemerisYear = 1950;
inline constexpr int kMaxEphemerisYear = 2100;

// Geometric sun position for a site and instant.
//
// Implementation is the equation-of-time / declination formulation used by
// the NOAA solar calculator (Meeus series truncations). Within 1950-2100 it
// tracks the NREL SPA reference to better than 0.02 deg in elevation and
// 0.05 deg in azimuth (see the randomized comparison in the test suite).
// No atmospheric refraction is applied.
//
// Throws kUnsupportedEpoch when t falls outside [1950, 2100].
SolarPosition solar_position(const GeoPosition& site, const Instant& t);

struct SunSample {
  Instant t;
  SolarPosition sun;
};

// Sun positions over one civil day at fixed wall-clock steps. The sampled
// range defaults to 05:00..20:00 local inclusive, the span used by the sun
// diagrams this feeds. Throws kInvalidArgument on a non-positive step.
std::vector<SunSample> sun_path(const GeoPosition& site, const CivilDate& date,
                                int utc_offset_minutes, int step_seconds,
                                int start_hour = 5, int end_hour = 20);

// Instant of local (apparent) solar noon, accurate to a few seconds.
Instant solar_noon(const GeoPosition& site, const CivilDate& date, int utc_offset_minutes);

}  // namespace sunglare

#endif  // SUNGLARE_SOLAR_HPP
