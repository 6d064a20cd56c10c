#pragma once

#include <stdexcept>
#include <string>

#include "qre/gates.hpp"

namespace qre {

// Base for malformed or inconsistent input documents.
class SpecError : public std::runtime_error {
  public:
    explicit SpecError(const std::string& what) : std::runtime_error(what) {}
};

class MissingGate : public SpecError {
  public:
    explicit MissingGate(GateKind kind)
        : SpecError("missing gate time for " + std::string(gate_kind_name(kind))),
          kind_(kind) {}
    GateKind kind() const { return kind_; }

  private:
    GateKind kind_;
};

class InvalidValue : public SpecError {
  public:
    explicit InvalidValue(const std::string& what) : SpecError(what) {}
};

// Base for infeasible estimation requests (the code cannot help at this
// physical error rate, or a configured search cap was hit).
class EstimateError : public std::runtime_error {
  public:
    explicit EstimateError(const std::string& what) : std::runtime_error(what) {}
};

class AboveThreshold : public EstimateError {
  public:
    explicit AboveThreshold(const std::string& what) : EstimateError(what) {}
};

class LevelCapExceeded : public EstimateError {
  public:
    explicit LevelCapExceeded(const std::string& what) : EstimateError(what) {}
};

class DistanceCapExceeded : public EstimateError {
  public:
    explicit DistanceCapExceeded(const std::string& what) : EstimateError(what) {}
};

class NonTransversal : public EstimateError {
  public:
    explicit NonTransversal(GateKind kind)
        : EstimateError(std::string(gate_kind_name(kind)) +
                        " has no transversal implementation") {}
};

class DistillationDiverges : public EstimateError {
  public:
    explicit DistillationDiverges(const std::string& what) : EstimateError(what) {}
};

class RoundCapExceeded : public EstimateError {
  public:
    explicit RoundCapExceeded(const std::string& what) : EstimateError(what) {}
};

class InsufficientData : public std::runtime_error {
  public:
    explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qre
