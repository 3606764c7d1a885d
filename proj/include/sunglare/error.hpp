#ifndef SUNGLARE_ERROR_HPP
#define SUNGLARE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sunglare {

// Error categories mirror the sg_status codes of the C API one-to-one.
enum class ErrorCategory {
  kInvalidArgument,
  kUnsupportedEpoch,
  kParse,
  kIo,
  kTransport,
  kIncompletePanorama,
  kStitch,
  kInvalidFrame,
  kInvalidMask,
  kConfig,
  kInternal,
};

const char* to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

[[noreturn]] inline void throw_error(ErrorCategory category, const std::string& message) {
  throw Error(category, message);
}

}  // namespace sunglare

#endif  // SUNGLARE_ERROR_HPP
