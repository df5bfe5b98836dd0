#pragma once

#include <stdexcept>
#include <string>

namespace lcoh {

/// Base class of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error { public: using Error::Error; };
class InvalidDimension : public Error { public: using Error::Error; };
class ParseError : public Error { public: using Error::Error; };
class ModularDisagreement : public Error { public: using Error::Error; };

/// Raised when a structure-constant table fails antisymmetry or Jacobi.
class JacobiViolation : public Error { public: using Error::Error; };
class ModuleAxiomViolation : public Error { public: using Error::Error; };
class NotASubalgebra : public Error { public: using Error::Error; };

/// A requested degree needs matrices beyond the configured budget.
class ResourceLimit : public Error { public: using Error::Error; };

class NotACocycle : public Error { public: using Error::Error; };
class NotAChainMap : public Error { public: using Error::Error; };
class NotSymmetric : public Error { public: using Error::Error; };
class NotLeviCivita : public Error { public: using Error::Error; };

}  // namespace lcoh
