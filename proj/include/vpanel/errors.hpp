#pragma once

#include <stdexcept>
#include <string>

namespace vpanel {

// evaluation requested on or too close to a kernel singularity
struct SingularEvaluation : std::runtime_error {
  explicit SingularEvaluation(const std::string& what) : std::runtime_error(what) {}
};

// point outside the validity domain of a field (e.g. inside the unit disk)
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// two free vortices collided, or a vortex hit the obstacle
struct CollisionError : std::runtime_error {
  explicit CollisionError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vpanel
