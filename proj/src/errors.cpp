#include "pfdimers/errors.hpp"

namespace pfdimers {

std::string_view error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedRotation: return "MalformedRotation";
    case ErrorKind::NegativeWeight: return "NegativeWeight";
    case ErrorKind::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorKind::InvalidCocycle: return "InvalidCocycle";
    case ErrorKind::NotAClosedWalk: return "NotAClosedWalk";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotAMatching: return "NotAMatching";
    case ErrorKind::NoMatching: return "NoMatching";
    case ErrorKind::OddVertexCount: return "OddVertexCount";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotOrientableForm: return "NotOrientableForm";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::LoopEdge: return "LoopEdge";
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::NotBlockForm: return "NotBlockForm";
    case ErrorKind::CurveNotRealizable: return "CurveNotRealizable";
    case ErrorKind::NonRealResult: return "NonRealResult";
    case ErrorKind::WrongSurfaceType: return "WrongSurfaceType";
    case ErrorKind::BadDimensions: return "BadDimensions";
    case ErrorKind::OpenSurfaceWord: return "OpenSurfaceWord";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Error";
}

}  // namespace pfdimers
