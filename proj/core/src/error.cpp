#include "kuniv/error.hpp"

namespace kuniv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidValue: return "InvalidValue";
    case ErrorCode::NonzeroTotalMass: return "NonzeroTotalMass";
    case ErrorCode::ZeroMeasure: return "ZeroMeasure";
    case ErrorCode::AsymmetricSpectralMeasure: return "AsymmetricSpectralMeasure";
    case ErrorCode::DuplicatePoints: return "DuplicatePoints";
    case ErrorCode::NotSeriesKernel: return "NotSeriesKernel";
    case ErrorCode::FlagContradiction: return "FlagContradiction";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::GapIntersectsSupport: return "GapIntersectsSupport";
    case ErrorCode::GapContainsZero: return "GapContainsZero";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownFamily: return "UnknownFamily";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& module,
                           const std::string& message) {
  std::string out = "[" + module + "] ";
  out += to_string(code);
  out += ": ";
  out += message;
  return out;
}

std::string locate(const std::string& field_path, const std::string& message,
                   std::optional<int> line, std::optional<int> column) {
  std::string out;
  if (line) {
    out += "line " + std::to_string(*line);
    if (column) out += ", column " + std::to_string(*column);
    out += ": ";
  }
  if (!field_path.empty()) out += field_path + ": ";
  return out + message;
}

}  // namespace

Error::Error(ErrorCode code, std::string module, const std::string& message)
    : std::runtime_error(format_message(code, module, message)),
      code_(code),
      module_(std::move(module)),
      detail_(message) {}

ConfigError::ConfigError(ErrorCode code, std::string field_path,
                         const std::string& message, std::optional<int> line,
                         std::optional<int> column)
    : Error(code, "cli", locate(field_path, message, line, column)),
      field_path_(std::move(field_path)),
      line_(line),
      column_(column) {}

}  // namespace kuniv
