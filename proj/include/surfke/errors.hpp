#pragma once

#include <stdexcept>
#include <string>

namespace surfke {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter or configuration value (window < 2, folds > documents, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Corpus files that cannot be read or are inconsistent.
class CorpusError : public Error {
 public:
  using Error::Error;
};

/// Missing, corrupt or incompatible model file.
class ModelError : public Error {
 public:
  using Error::Error;
};

/// Out-of-range vertex id or unknown word.
class LookupError : public Error {
 public:
  using Error::Error;
};

/// Classifier cannot be fitted (e.g. only one class present).
class TrainingError : public Error {
 public:
  using Error::Error;
};

/// A document cannot be scored (e.g. empty gold set).
class ScoringError : public Error {
 public:
  using Error::Error;
};

}  // namespace surfke
