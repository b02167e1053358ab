#pragma once

#include <stdexcept>
#include <string>

namespace mhdlab {

// Gradient guard tripped mid-run. Carries the trip time so callers can
// report where the run died.
class BlowupError : public std::runtime_error {
 public:
  BlowupError(double time, double gradient)
      : std::runtime_error("blowup guard tripped at t=" + std::to_string(time) +
                           " (max gradient " + std::to_string(gradient) + ")"),
        time(time),
        gradient(gradient) {}

  double time;
  double gradient;
};

// Timestep exceeds the advective CFL limit of the current state.
class CflError : public std::runtime_error {
 public:
  CflError(double time, double dt, double dt_max)
      : std::runtime_error("CFL violation at t=" + std::to_string(time) + ": dt=" +
                           std::to_string(dt) + " exceeds limit " + std::to_string(dt_max)),
        time(time),
        dt(dt),
        dt_max(dt_max) {}

  double time;
  double dt;
  double dt_max;
};

// Run-configuration violation; names the offending field.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message)
      : std::runtime_error(field + ": " + message), field(std::move(field)) {}

  std::string field;
};

}  // namespace mhdlab
