#pragma once

#include <stdexcept>
#include <string>

namespace vqgen {

// configuration file / flag problems (CLI exit code 2)
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// dataset / file-format problems (CLI exit code 3)
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// tensor shape contract violations (CLI exit code 4)
struct ShapeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// NaN / divergence / undefined numeric operations (CLI exit code 4)
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// visual-hint self-labeling failures, e.g. a word without an embedding
struct LabelingError : DataError {
  using DataError::DataError;
};

}  // namespace vqgen
