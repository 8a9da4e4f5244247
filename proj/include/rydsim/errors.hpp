#ifndef RYDSIM_ERRORS_HPP
#define RYDSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rydsim {

// Dense representation requested beyond the configured qubit cap.
struct CapacityError : std::runtime_error {
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

// Propagation diverged (norm drift, NaN amplitudes, ...).
struct NumericalError : std::runtime_error {
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// Invalid experiment configuration (bad section, unknown key, bad value).
struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Missing or singular mitigation calibration data.
struct CalibrationError : std::runtime_error {
  explicit CalibrationError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace rydsim

#endif  // RYDSIM_ERRORS_HPP
