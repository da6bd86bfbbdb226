#pragma once

#include <stdexcept>
#include <string>

namespace albert {

// Base for all recoverable domain failures; the CLI maps these to exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateLambda : DomainError {
  explicit DegenerateLambda(const std::string& m = "tr((lambda E - X)^x2) = 0: lambda is a multiple characteristic root")
      : DomainError(m) {}
};
struct NotUnit : DomainError {
  explicit NotUnit(const std::string& m = "octonion parameter is not a unit") : DomainError(m) {}
};
struct NotImaginary : DomainError {
  explicit NotImaginary(const std::string& m = "octonion parameter must be imaginary") : DomainError(m) {}
};
struct NotTriality : DomainError {
  explicit NotTriality(const std::string& m = "triple fails the triality check") : DomainError(m) {}
};
struct NotSpin7 : DomainError {
  explicit NotSpin7(const std::string& m = "triple fails the Spin(7) condition g3(1)=1") : DomainError(m) {}
};
struct NotOnCircle : DomainError {
  explicit NotOnCircle(const std::string& m = "rotation parameters violate c^2+s^2=1") : DomainError(m) {}
};
struct NotOnHyperbola : DomainError {
  explicit NotOnHyperbola(const std::string& m = "boost parameters violate ch^2-sh^2=1, ch>0") : DomainError(m) {}
};
struct NotNilpotent : DomainError {
  explicit NotNilpotent(const std::string& m = "matrix power does not vanish") : DomainError(m) {}
};
struct SingularSystem : DomainError {
  explicit SingularSystem(const std::string& m = "linear system is singular") : DomainError(m) {}
};
struct DecompositionFailed : DomainError {
  explicit DecompositionFailed(const std::string& m = "element leaves the f4(-20) span") : DomainError(m) {}
};
struct FlavorMismatch : DomainError {
  explicit FlavorMismatch(const std::string& m = "Heisenberg elements of different flavors") : DomainError(m) {}
};
struct NotInStratum : DomainError {
  explicit NotInStratum(const std::string& m = "element is not in the requested stratum") : DomainError(m) {}
};
struct ResidualTooLarge : DomainError {
  explicit ResidualTooLarge(const std::string& m = "transport residual exceeds tolerance") : DomainError(m) {}
};
struct NoGapViolated : DomainError {
  explicit NoGapViolated(const std::string& m = "gap decision did not terminate; precondition violated") : DomainError(m) {}
};
struct InconsistentPaper : DomainError {
  explicit InconsistentPaper(const std::string& m = "classifier reached a state excluded by the case analysis") : DomainError(m) {}
};

// Internal signal: the exact path would need an irrational square root;
// callers fall back to the float backend.
struct ExactSqrtUnavailable : DomainError {
  explicit ExactSqrtUnavailable(const std::string& m = "value has no exact rational square root")
      : DomainError(m) {}
};

// I/O and schema problems; the CLI maps these to exit code 2.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace albert
