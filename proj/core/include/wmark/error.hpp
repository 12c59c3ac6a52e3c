#pragma once

#include <stdexcept>

namespace wmark {

// Base class for every error the toolkit raises. The CLI maps any Error
// to exit code 2; usage errors never reach this hierarchy.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define WMARK_DEFINE_ERROR(Name)     \
  class Name : public Error {        \
  public:                            \
    using Error::Error;              \
  };

WMARK_DEFINE_ERROR(UnsupportedFormat)  // parseable container, rejected subset
WMARK_DEFINE_ERROR(MalformedFile)      // bad magic, truncated or inconsistent data
WMARK_DEFINE_ERROR(IoFailure)
WMARK_DEFINE_ERROR(EmptyInput)
WMARK_DEFINE_ERROR(LengthMismatch)
WMARK_DEFINE_ERROR(ZeroReference)
WMARK_DEFINE_ERROR(BadBlockSize)
WMARK_DEFINE_ERROR(MalformedStream)
WMARK_DEFINE_ERROR(WatermarkTooLong)
WMARK_DEFINE_ERROR(KeyMismatch)
WMARK_DEFINE_ERROR(DimensionMismatch)
WMARK_DEFINE_ERROR(InvalidArgument)

#undef WMARK_DEFINE_ERROR

}  // namespace wmark
