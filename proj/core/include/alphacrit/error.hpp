#pragma once

#include <stdexcept>
#include <string>

namespace alphacrit {

enum class Errc {
  EndpointOutOfRange,
  SelfLoop,
  HostMismatch,
  NoSuchEdge,
  NoSuchVertex,
  CapacityExceeded,
  MalformedGraph6,
  BadPartition,
  InvalidQuadruple,
  HypothesisViolated,
  PreconditionViolated,
  TooLargeForEnumeration,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::HostMismatch: return "HostMismatch";
    case Errc::NoSuchEdge: return "NoSuchEdge";
    case Errc::NoSuchVertex: return "NoSuchVertex";
    case Errc::CapacityExceeded: return "CapacityExceeded";
    case Errc::MalformedGraph6: return "MalformedGraph6";
    case Errc::BadPartition: return "BadPartition";
    case Errc::InvalidQuadruple: return "InvalidQuadruple";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::PreconditionViolated: return "PreconditionViolated";
    case Errc::TooLargeForEnumeration: return "TooLargeForEnumeration";
    case Errc::IoError: return "IoError";
  }
  return "UnknownError";
}

}  // namespace alphacrit
