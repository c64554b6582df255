#include "congforge/error.hpp"

namespace congforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Config: return "ConfigError";
    case ErrorKind::NotAUnit: return "NotAUnit";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NotPIntegral: return "NotPIntegral";
    case ErrorKind::InsufficientPrecision: return "InsufficientPrecision";
    case ErrorKind::UnsupportedIndex: return "UnsupportedIndex";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::SizeGuard: return "SizeGuard";
    case ErrorKind::Usage: return "UsageError";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace congforge
