#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace kuniv {

enum class ErrorCode {
  InvalidValue,
  NonzeroTotalMass,
  ZeroMeasure,
  AsymmetricSpectralMeasure,
  DuplicatePoints,
  NotSeriesKernel,
  FlagContradiction,
  SingularSystem,
  GapIntersectsSupport,
  GapContainsZero,
  ParseError,
  UnknownFamily,
  Io,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable error code and the name of the module that
/// raised it. what() reads "[module] Code: message".
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string module, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  const std::string& module() const noexcept { return module_; }
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  std::string module_;
  std::string detail_;
};

/// Configuration errors additionally locate the offending field.
class ConfigError : public Error {
 public:
  ConfigError(ErrorCode code, std::string field_path, const std::string& message,
              std::optional<int> line = std::nullopt,
              std::optional<int> column = std::nullopt);

  const std::string& field_path() const noexcept { return field_path_; }
  std::optional<int> line() const noexcept { return line_; }
  std::optional<int> column() const noexcept { return column_; }

 private:
  std::string field_path_;
  std::optional<int> line_;
  std::optional<int> column_;
};

}  // namespace kuniv
