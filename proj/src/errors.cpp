#include "hankel/errors.hpp"

namespace hankel {

NumericalError::NumericalError(const std::string& what, double residual)
    : Error(what + " (residual " + std::to_string(residual) + ")"),
      residual_(residual) {}

}  // namespace hankel
