#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgr {

enum class ErrorKind {
  DivisionByZero,
  NotSquare,
  BadSubset,
  NotSymmetric,
  NotSymplectic,
  BadShape,
  NotInvertible,
  DimensionMismatch,
  DimensionTooLarge,
  LimitsExceeded,
  WrongDimension,
  AllZero,
  UnsupportedAtInfinity,
  AtInfinity,
  LeavesBigCell,
  ZeroCovector,
  NotOnEquation,
  NotMongeAmpere,
  OrthogonalNotInBigCell,
  SyntaxError,
  BadIndex,
  ZeroDenominator,
  IoError,
};

const char* kind_name(ErrorKind k);

// True for failures of typed-input construction (CLI exit 2); false for
// value-dependent domain failures (CLI exit 3).
bool is_input_error(ErrorKind k);

class Error : public std::runtime_error {
public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  Error(ErrorKind kind, const std::string& message, std::size_t position = npos)
      : std::runtime_error(message), kind_(kind), position_(position) {}

  ErrorKind kind() const { return kind_; }
  const char* kind_str() const { return kind_name(kind_); }
  // Byte offset into the offending text for parse errors, npos otherwise.
  std::size_t position() const { return position_; }

private:
  ErrorKind kind_;
  std::size_t position_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message,
                              std::size_t position = Error::npos) {
  throw Error(kind, message, position);
}

inline const char* kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotSquare: return "NotSquare";
    case ErrorKind::BadSubset: return "BadSubset";
    case ErrorKind::NotSymmetric: return "NotSymmetric";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::BadShape: return "BadShape";
    case ErrorKind::NotInvertible: return "NotInvertible";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::DimensionTooLarge: return "DimensionTooLarge";
    case ErrorKind::LimitsExceeded: return "LimitsExceeded";
    case ErrorKind::WrongDimension: return "WrongDimension";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::UnsupportedAtInfinity: return "UnsupportedAtInfinity";
    case ErrorKind::AtInfinity: return "AtInfinity";
    case ErrorKind::LeavesBigCell: return "LeavesBigCell";
    case ErrorKind::ZeroCovector: return "ZeroCovector";
    case ErrorKind::NotOnEquation: return "NotOnEquation";
    case ErrorKind::NotMongeAmpere: return "NotMongeAmpere";
    case ErrorKind::OrthogonalNotInBigCell: return "OrthogonalNotInBigCell";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::BadIndex: return "BadIndex";
    case ErrorKind::ZeroDenominator: return "ZeroDenominator";
    case ErrorKind::IoError: return "IoError";
  }
  return "Unknown";
}

inline bool is_input_error(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSquare:
    case ErrorKind::BadSubset:
    case ErrorKind::NotSymmetric:
    case ErrorKind::NotSymplectic:
    case ErrorKind::BadShape:
    case ErrorKind::DimensionMismatch:
    case ErrorKind::DimensionTooLarge:
    case ErrorKind::LimitsExceeded:
    case ErrorKind::WrongDimension:
    case ErrorKind::SyntaxError:
    case ErrorKind::BadIndex:
    case ErrorKind::ZeroDenominator:
    case ErrorKind::IoError:
      return true;
    default:
      return false;
  }
}

}  // namespace lgr
