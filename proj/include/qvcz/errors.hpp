#pragma once

#include <stdexcept>
#include <string>

namespace qvcz {

// Input outside the supported physical domain (angles, index, beam parameters).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

// Frame transform denominator is non-positive for the requested geometry.
struct DegenerateFrameError : DomainError {
  using DomainError::DomainError;
};

// A coefficient appearing in a denominator is below 1e-14 in magnitude.
struct SingularCoefficientError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature premise (Gaussian weight times low-degree polynomial) violated.
struct QuadratureValidityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Two-point inputs were built for incompatible detector arrangements.
struct ArgumentMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Reference value too small to fix a normalization constant against.
struct CalibrationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quadrature denominator integral below 1e-15.
struct NonConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace qvcz
