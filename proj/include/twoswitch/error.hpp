#pragma once

#include <stdexcept>
#include <string>

namespace twoswitch {

enum class ErrorCode {
  LoopEdge,
  VertexOutOfRange,
  DuplicateEdge,
  NotPseudoforest,
  NotUnicyclic,
  NotForest,
  NotCycle,
  TrivialSwitch,
  DegreeMismatch,
  CaseNotCovered,
  NoWitness,
  IsCycle,
  AlreadyShared,
  Adjacent,
  ZetaPositive,
  ZetaZero,
  BudgetExceeded,
  UndefinedParameter,
  BoundExceeded,
  EmptyFamily,
  NodeNotFound,
  Precondition,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::LoopEdge: return "LoopEdge";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::NotPseudoforest: return "NotPseudoforest";
    case ErrorCode::NotUnicyclic: return "NotUnicyclic";
    case ErrorCode::NotForest: return "NotForest";
    case ErrorCode::NotCycle: return "NotCycle";
    case ErrorCode::TrivialSwitch: return "TrivialSwitch";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CaseNotCovered: return "CaseNotCovered";
    case ErrorCode::NoWitness: return "NoWitness";
    case ErrorCode::IsCycle: return "IsCycle";
    case ErrorCode::AlreadyShared: return "AlreadyShared";
    case ErrorCode::Adjacent: return "Adjacent";
    case ErrorCode::ZetaPositive: return "ZetaPositive";
    case ErrorCode::ZetaZero: return "ZetaZero";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::UndefinedParameter: return "UndefinedParameter";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    case ErrorCode::NodeNotFound: return "NodeNotFound";
    case ErrorCode::Precondition: return "Precondition";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace twoswitch
