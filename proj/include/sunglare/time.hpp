#ifndef SUNGLARE_TIME_HPP
#define SUNGLARE_TIME_HPP

#include <compare>
#include <string>

namespace sunglare {

struct CivilDate {
  int year = 1970;
  int month = 1;  // 1..12
  int day = 1;    // 1..31, validated against the month

  auto operator<=>(const CivilDate&) const = default;
};

// Parses "YYYY-MM-DD"; throws kParse on malformed or impossible dates.
CivilDate parse_civil_date(const std::string& text);
std::string to_string(const CivilDate& date);
bool is_valid_date(const CivilDate& date);

struct CivilTime {
  CivilDate date;
  int hour = 0;
  int minute = 0;
  double second = 0.0;
};

// A point in time: an absolute UTC timestamp plus the UTC offset used to
// present it as civil (wall-clock) time. Two Instants with the same absolute
// timestamp compare equal regardless of their offsets.
class Instant {
 public:
  Instant() = default;

  static Instant from_civil(const CivilDate& date, int hour, int minute, double second,
                            int utc_offset_minutes);
  static Instant from_unix(double unix_seconds, int utc_offset_minutes = 0);

  double unix_seconds() const { return unix_seconds_; }
  int utc_offset_minutes() const { return utc_offset_minutes_; }

  // Same absolute time presented under a different offset.
  Instant with_offset(int utc_offset_minutes) const;
  Instant plus_seconds(double seconds) const;

  // Civil fields under this Instant's offset.
  CivilTime local() const;
  CivilTime utc() const;

  // "2018-01-20T08:00:00-05:00" (seconds truncated to whole numbers).
  std::string iso8601() const;

  friend bool operator==(const Instant& a, const Instant& b) {
    return a.unix_seconds_ == b.unix_seconds_;
  }
  friend auto operator<=>(const Instant& a, const Instant& b) {
    return a.unix_seconds_ <=> b.unix_seconds_;
  }

 private:
  double unix_seconds_ = 0.0;
  int utc_offset_minutes_ = 0;
};

// Days since 1970-01-01 for a civil date (proleptic Gregorian).
long long days_from_civil(const CivilDate& date);
CivilDate civil_from_days(long long days);

// US Eastern wall-clock offset (minutes) for a date under the post-2007 DST
// rule: EDT (-240) from the second Sunday of March through the first Sunday
// of November, EST (-300) otherwise. Transition days count as the new phase.
int us_eastern_offset_minutes(const CivilDate& date);

// Parses "-05:00", "+0530", "-300" (bare minutes) into offset minutes.
int parse_utc_offset(const std::string& text);

}  // namespace sunglare

#endif  // SUNGLARE_TIME_HPP
