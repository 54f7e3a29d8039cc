#include "swl/error.hpp"

namespace swl {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::parse: return "ParseError";
    case ErrorKind::missing_section: return "MissingSection";
    case ErrorKind::duplicate_dart: return "DuplicateDart";
    case ErrorKind::unknown_symbol: return "UnknownSymbol";
    case ErrorKind::degenerate_surface: return "DegenerateSurface";
    case ErrorKind::invalid_face: return "InvalidFace";
    case ErrorKind::unknown_face: return "UnknownFace";
    case ErrorKind::unknown_generator: return "UnknownGenerator";
    case ErrorKind::malformed_word: return "MalformedWord";
    case ErrorKind::too_large: return "TooLarge";
    case ErrorKind::vertex_cap_exceeded: return "VertexCapExceeded";
    case ErrorKind::non_coprime: return "NonCoprime";
    case ErrorKind::wrong_surface: return "WrongSurface";
    case ErrorKind::insufficient_data: return "InsufficientData";
    case ErrorKind::io: return "IoError";
  }
  return "Error";
}

}  // namespace swl
