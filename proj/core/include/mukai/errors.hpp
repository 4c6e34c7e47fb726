#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mukai {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vector or matrix whose size does not match the model rank.
class RankMismatch : public Error {
 public:
  using Error::Error;
};

/// A curve, line bundle or isometry name that the model does not declare.
class UnknownName : public Error {
 public:
  UnknownName(std::string kind, std::string name)
      : Error("unknown " + kind + " '" + name + "'"),
        kind_(std::move(kind)),
        name_(std::move(name)) {}

  const std::string& kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }

 private:
  std::string kind_;
  std::string name_;
};

/// Structural problem in a surface-model document; `field()` names the key.
class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

/// Entropy parameters outside the m, l, p < 0 regime.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

}  // namespace mukai
