#include "infinireg/errors.hpp"

namespace infinireg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::DivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::NonUnit: return "NON_UNIT";
    case ErrorCode::DenominatorVanishes: return "DENOMINATOR_VANISHES";
    case ErrorCode::NotExact: return "NOT_EXACT";
    case ErrorCode::NotExactUpToCap: return "NOT_EXACT_UP_TO_CAP";
    case ErrorCode::FlatnessViolation: return "FLATNESS_VIOLATION";
    case ErrorCode::NotInfinitesimal: return "NOT_INFINITESIMAL";
    case ErrorCode::InvalidCorrectionDegree: return "INVALID_CORRECTION_DEGREE";
    case ErrorCode::Precondition: return "PRECONDITION";
    case ErrorCode::Overflow: return "OVERFLOW";
    case ErrorCode::ParseError: return "PARSE_ERROR";
    case ErrorCode::NameClash: return "NAME_CLASH";
    case ErrorCode::UnknownIdent: return "UNKNOWN_IDENT";
    case ErrorCode::GeneratorExhausted: return "GENERATOR_EXHAUSTED";
    case ErrorCode::Internal: return "INTERNAL";
  }
  return "UNKNOWN";
}

}  // namespace infinireg
