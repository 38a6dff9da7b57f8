#ifndef ESPEC_ERRORS_HPP
#define ESPEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace espec {

// Exit codes used by the CLI. Library code throws the exception types
// below; the CLI maps them onto these codes.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidationFailure = 1,
  kExitInvalidParams = 2,
  kExitNotConverged = 3,
  kExitGapless = 4,
  kExitDegenerateGroundState = 5,
  kExitSectorTooLarge = 6,
};

struct InvalidParamsError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Single-particle gap at the Fermi level closes; the free-fermion ground
// state is ill-defined there.
struct GaplessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Free engine invoked at U != 0.
struct EngineMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Correlation-matrix eigenvalue outside [0, 1] beyond tolerance.
struct SpectrumOutOfRangeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SectorTooLargeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotConvergedError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NonSymmetricOperatorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Many-body ground state of the half-filled sector is (nearly) degenerate;
// the entanglement spectrum of "the" ground state is then ambiguous.
struct DegenerateGroundStateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NegativeEigenvalueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EmptySpectrumError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace espec

#endif
