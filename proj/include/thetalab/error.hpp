#pragma once

#include <stdexcept>
#include <string>

namespace thetalab {

// Base of every error raised by the library. Each module derives its own
// named failures from this so callers can catch per-condition or wholesale.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define THETALAB_DEFINE_ERROR(Name)        \
  class Name : public ::thetalab::Error {  \
   public:                                 \
    using ::thetalab::Error::Error;        \
  }

}  // namespace thetalab
