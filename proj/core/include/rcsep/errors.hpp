#pragma once

#include <stdexcept>
#include <string>

namespace rcsep {

// Parameter outside its mathematical domain (negative radius, epsilon >= 1, ...).
// std::domain_error is used directly for these.

// A stated precondition on inputs does not hold (point not in F, sample outside
// the half ball, ...).
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The scenario itself is malformed (empty side, F and G not disjoint, bad file).
class ScenarioError : public std::runtime_error {
 public:
  explicit ScenarioError(const std::string& what) : std::runtime_error(what) {}
};

// Rejection sampling exhausted its retry budget on an (effectively) empty region.
class SamplingError : public std::runtime_error {
 public:
  explicit SamplingError(const std::string& what) : std::runtime_error(what) {}
};

// An enclosure could not separate two values at the requested precision.
class EnclosureError : public std::runtime_error {
 public:
  explicit EnclosureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rcsep
