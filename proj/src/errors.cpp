#include "qdiam/errors.hpp"

namespace qdiam {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NonPrimePower: return "NonPrimePower";
    case Errc::ZeroInverse: return "ZeroInverse";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::ParameterOutOfRange: return "ParameterOutOfRange";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InvalidConfiguration: return "InvalidConfiguration";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::ParseError: return "ParseError";
    case Errc::NotExhaustive: return "NotExhaustive";
    case Errc::TimeoutExceeded: return "TimeoutExceeded";
  }
  return "Unknown";
}

}  // namespace qdiam
