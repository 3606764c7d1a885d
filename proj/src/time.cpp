#include "sunglare/time.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sunglare/error.hpp"

namespace sunglare {

namespace {

bool is_leap(int year) {
  return (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
}

int days_in_month(int year, int month) {
  static const int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  if (month == 2 && is_leap(year)) return 29;
  return kDays[month - 1];
}

}  // namespace

bool is_valid_date(const CivilDate& d) {
  return d.month >= 1 && d.month <= 12 && d.day >= 1 && d.day <= days_in_month(d.year, d.month);
}

long long days_from_civil(const CivilDate& d) {
  using namespace std::chrono;
  const year_month_day ymd{year{d.year}, month{static_cast<unsigned>(d.month)},
                           day{static_cast<unsigned>(d.day)}};
  return sys_days{ymd}.time_since_epoch().count();
}

CivilDate civil_from_days(long long days) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{std::chrono::days{days}}};
  return CivilDate{static_cast<int>(ymd.year()), static_cast<int>(static_cast<unsigned>(ymd.month())),
                   static_cast<int>(static_cast<unsigned>(ymd.day()))};
}

CivilDate parse_civil_date(const std::string& text) {
  int y = 0, m = 0, d = 0;
  char trailing = 0;
  if (std::sscanf(text.c_str(), "%d-%d-%d%c", &y, &m, &d, &trailing) != 3) {
    throw_error(ErrorCategory::kParse, "malformed date '" + text + "', expected YYYY-MM-DD");
  }
  CivilDate date{y, m, d};
  if (!is_valid_date(date)) {
    throw_error(ErrorCategory::kParse, "impossible calendar date '" + text + "'");
  }
  return date;
}

std::string to_string(const CivilDate& date) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d", date.year, date.month, date.day);
  return buf;
}

Instant Instant::from_civil(const CivilDate& date, int hour, int minute, double second,
                            int utc_offset_minutes) {
  if (!is_valid_date(date)) {
    throw_error(ErrorCategory::kInvalidArgument, "invalid civil date " + to_string(date));
  }
  if (hour < 0 || hour > 23 || minute < 0 || minute > 59 || second < 0.0 || second >= 60.0) {
    throw_error(ErrorCategory::kInvalidArgument, "invalid time of day");
  }
  if (utc_offset_minutes < -18 * 60 || utc_offset_minutes > 18 * 60) {
    throw_error(ErrorCategory::kInvalidArgument, "UTC offset outside +/-18h");
  }
  Instant t;
  t.unix_seconds_ = static_cast<double>(days_from_civil(date)) * 86400.0 + hour * 3600.0 +
                    minute * 60.0 + second - utc_offset_minutes * 60.0;
  t.utc_offset_minutes_ = utc_offset_minutes;
  return t;
}

Instant Instant::from_unix(double unix_seconds, int utc_offset_minutes) {
  Instant t;
  t.unix_seconds_ = unix_seconds;
  t.utc_offset_minutes_ = utc_offset_minutes;
  return t;
}

Instant Instant::with_offset(int utc_offset_minutes) const {
  return from_unix(unix_seconds_, utc_offset_minutes);
}

Instant Instant::plus_seconds(double seconds) const {
  return from_unix(unix_seconds_ + seconds, utc_offset_minutes_);
}

CivilTime Instant::local() const {
  const double shifted = unix_seconds_ + utc_offset_minutes_ * 60.0;
  double day_floor = std::floor(shifted / 86400.0);
  double within = shifted - day_floor * 86400.0;
  // Guard the edge where rounding puts us exactly at the next midnight.
  if (within >= 86400.0) {
    day_floor += 1.0;
    within -= 86400.0;
  }
  CivilTime ct;
  ct.date = civil_from_days(static_cast<long long>(day_floor));
  ct.hour = static_cast<int>(within / 3600.0);
  within -= ct.hour * 3600.0;
  ct.minute = static_cast<int>(within / 60.0);
  ct.second = within - ct.minute * 60.0;
  return ct;
}

CivilTime Instant::utc() const {
  return with_offset(0).local();
}

std::string Instant::iso8601() const {
  const CivilTime ct = local();
  const int off = utc_offset_minutes_;
  const char sign = off < 0 ? '-' : '+';
  const int abs_off = off < 0 ? -off : off;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02dT%02d:%02d:%02d%c%02d:%02d", ct.date.year,
                ct.date.month, ct.date.day, ct.hour, ct.minute, static_cast<int>(ct.second),
                sign, abs_off / 60, abs_off % 60);
  return buf;
}

namespace {

// Day of week, 0 = Sunday.
int weekday(const CivilDate& d) {
  long long days = days_from_civil(d);
  return static_cast<int>(((days % 7) + 11) % 7);  // 1970-01-01 was a Thursday
}

// Day of month of the n-th given weekday (1-based n).
int nth_weekday_of_month(int year, int month, int wanted_weekday, int n) {
  const int first = weekday(CivilDate{year, month, 1});
  int day = 1 + (wanted_weekday - first + 7) % 7;
  return day + (n - 1) * 7;
}

}  // namespace

int us_eastern_offset_minutes(const CivilDate& date) {
  const int kEst = -300;
  const int kEdt = -240;
  if (date.month < 3 || date.month > 11) return kEst;
  if (date.month > 3 && date.month < 11) return kEdt;
  if (date.month == 3) {
    const int start = nth_weekday_of_month(date.year, 3, 0, 2);  // 2nd Sunday
    return date.day >= start ? kEdt : kEst;
  }
  const int end = nth_weekday_of_month(date.year, 11, 0, 1);  // 1st Sunday
  return date.day < end ? kEdt : kEst;
}

int parse_utc_offset(const std::string& text) {
  if (text.empty()) throw_error(ErrorCategory::kParse, "empty UTC offset");
  // Bare integer: minutes.
  bool bare = true;
  for (size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (i == 0 && (c == '+' || c == '-')) continue;
    if (c < '0' || c > '9') {
      bare = false;
      break;
    }
  }
  if (bare) {
    return std::atoi(text.c_str());
  }
  int sign = 1;
  size_t pos = 0;
  if (text[0] == '+' || text[0] == '-') {
    sign = text[0] == '-' ? -1 : 1;
    pos = 1;
  }
  int hours = 0, minutes = 0;
  const std::string rest = text.substr(pos);
  if (std::sscanf(rest.c_str(), "%d:%d", &hours, &minutes) == 2 ||
      (rest.size() == 4 && std::sscanf(rest.c_str(), "%2d%2d", &hours, &minutes) == 2)) {
    if (hours < 0 || hours > 18 || minutes < 0 || minutes > 59) {
      throw_error(ErrorCategory::kParse, "UTC offset out of range: " + text);
    }
    return sign * (hours * 60 + minutes);
  }
  throw_error(ErrorCategory::kParse, "malformed UTC offset '" + text + "'");
}

const char* to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kInvalidArgument: return "invalid_argument";
    case ErrorCategory::kUnsupportedEpoch: return "unsupported_epoch";
    case ErrorCategory::kParse: return "parse";
    case ErrorCategory::kIo: return "io";
    case ErrorCategory::kTransport: return "transport";
    case ErrorCategory::kIncompletePanorama: return "incomplete_panorama";
    case ErrorCategory::kStitch: return "stitch";
    case ErrorCategory::kInvalidFrame: return "invalid_frame";
    case ErrorCategory::kInvalidMask: return "invalid_mask";
    case ErrorCategory::kConfig: return "config";
    case ErrorCategory::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace sunglare
