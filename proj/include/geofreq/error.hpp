#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geofreq {

enum class ErrorKind {
  DegenerateSpeed,     // |v| at or below the speed threshold
  DegenerateRotation,  // |omega| at or below the rotation threshold
  DegenerateEnvelope,  // analytic-signal envelope vanishes
  DegenerateInput,     // every analysed sample was degenerate
  UnknownScenario,
  InvalidParameter,
  InvalidRange,
  TooFewSamples,
  TooShort,
  WrongChannelCount,
  MalformedCsv,
  MalformedConfig,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegenerateSpeed: return "DegenerateSpeed";
    case ErrorKind::DegenerateRotation: return "DegenerateRotation";
    case ErrorKind::DegenerateEnvelope: return "DegenerateEnvelope";
    case ErrorKind::DegenerateInput: return "DegenerateInput";
    case ErrorKind::UnknownScenario: return "UnknownScenario";
    case ErrorKind::InvalidParameter: return "InvalidParameter";
    case ErrorKind::InvalidRange: return "InvalidRange";
    case ErrorKind::TooFewSamples: return "TooFewSamples";
    case ErrorKind::TooShort: return "TooShort";
    case ErrorKind::WrongChannelCount: return "WrongChannelCount";
    case ErrorKind::MalformedCsv: return "MalformedCsv";
    case ErrorKind::MalformedConfig: return "MalformedConfig";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace geofreq
