#pragma once

#include <stdexcept>
#include <string>

namespace swave {

// Thrown when an iterative numerical procedure (ODE integration, quadrature,
// root bracketing) fails to reach its tolerance; never silently swallowed.
class NonConvergence : public std::runtime_error {
  public:
    explicit NonConvergence(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace swave
