#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace evenmwis {

enum class ErrorKind {
  InvalidArgument,
  InstanceTooLarge,
  Truncated,
  ParseError,
  LoopOrMultiEdge,
  OrderViolation,
  NotBipartite,
  LaminarityViolation,
  AnchorOutsideBag,
  BagMismatch,
  CoreAudit,
  LayerOverflow,
  NotConnected,
  NotUniform,
  GroundTooLarge,
  NonConvergence,
  NotPawFriendlyEvidence,
  InvalidWeights,
  RejectionBudgetExceeded,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorKind::Truncated: return "Truncated";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::LoopOrMultiEdge: return "LoopOrMultiEdge";
    case ErrorKind::OrderViolation: return "OrderViolation";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::LaminarityViolation: return "LaminarityViolation";
    case ErrorKind::AnchorOutsideBag: return "AnchorOutsideBag";
    case ErrorKind::BagMismatch: return "BagMismatch";
    case ErrorKind::CoreAudit: return "CoreAudit";
    case ErrorKind::LayerOverflow: return "LayerOverflow";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotUniform: return "NotUniform";
    case ErrorKind::GroundTooLarge: return "GroundTooLarge";
    case ErrorKind::NonConvergence: return "NonConvergence";
    case ErrorKind::NotPawFriendlyEvidence: return "NotPawFriendlyEvidence";
    case ErrorKind::InvalidWeights: return "InvalidWeights";
    case ErrorKind::RejectionBudgetExceeded: return "RejectionBudgetExceeded";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above, so
/// callers (the CLI in particular) can map it onto an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace evenmwis
