#pragma once

#include <stdexcept>
#include <string>

namespace greedy {

enum class ErrorCode {
  CollinearDefiningPoints,
  CoincidentSites,
  DuplicateSite,
  EmptySiteSet,
  TooFewSites,
  AllCollinear,
  NotAnEdge,
  NotBoundedSegment,
  InvalidSiteId,
  InvalidGraph,
  InvalidSpec,
  NoSuchEdge,
  DuplicateEdge,
  ParseError,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace greedy
