#pragma once

#include <stdexcept>
#include <string>

namespace bilv {

struct MissingVariable : std::runtime_error {
  explicit MissingVariable(const std::string& what) : std::runtime_error("MissingVariable: " + what) {}
};

struct WrongArity : std::runtime_error {
  explicit WrongArity(const std::string& what) : std::runtime_error("WrongArity: " + what) {}
};

struct DomainViolation : std::runtime_error {
  explicit DomainViolation(const std::string& what) : std::runtime_error("DomainViolation: " + what) {}
};

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error("DimensionMismatch: " + what) {}
};

struct ConstraintViolation : std::runtime_error {
  explicit ConstraintViolation(const std::string& what) : std::runtime_error("ConstraintViolation: " + what) {}
};

struct StepSizeUnderflow : std::runtime_error {
  explicit StepSizeUnderflow(const std::string& what) : std::runtime_error("StepSizeUnderflow: " + what) {}
};

struct BadInput : std::runtime_error {
  explicit BadInput(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bilv
