#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ratweyl {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unsupported or inadmissible configuration (Lie type, rank, budget).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// An operation was called on inputs violating its contract.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A Gaussian decomposition failed because a leading principal minor vanished.
/// `index()` is the 1-based size of the first vanishing minor.
class NotGenericError : public Error {
 public:
  explicit NotGenericError(std::size_t index)
      : Error("matrix is not generic: leading principal minor " + std::to_string(index) +
              " vanishes"),
        index_(index) {}

  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

}  // namespace ratweyl
