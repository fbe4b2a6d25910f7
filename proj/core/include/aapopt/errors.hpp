#pragma once

#include <stdexcept>
#include <string>

namespace aapopt {

// Base class for all library errors so callers can catch everything at once.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A scenario parameter violates its documented range (e.g. phi_deg outside
// (0, 90), nonpositive bandwidth).
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

// The altitude interval implied by the scenario is empty: the per-UE rate
// requirement caps the altitude below h_min_m.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

// Total hover energy is nonpositive somewhere on the altitude interval, so
// the efficiency ratio is undefined.
class DegenerateEnergyError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the mathematical domain of the requested
// operation (e.g. the monotone rate decomposition below 1 m).
class DomainError : public Error {
 public:
  using Error::Error;
};

// The projection segment for the polyblock step has zero length (the query
// point does not dominate the lower corner of the box).
class DegenerateSegmentError : public Error {
 public:
  using Error::Error;
};

// A configuration file is malformed: unknown key, missing field, wrong type,
// or a value that fails validation. `path()` names the offending field with
// its full JSON path, e.g. "scenario.rho_ue".
class ConfigError : public Error {
 public:
  ConfigError(std::string path, const std::string& what)
      : Error(path.empty() ? what : path + ": " + what), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

}  // namespace aapopt
